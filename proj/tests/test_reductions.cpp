#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <sstream>

#include "dicol/digraph.hpp"
#include "dicol/error.hpp"
#include "dicol/explorer.hpp"
#include "dicol/reductions.hpp"
#include "support.hpp"

using namespace dicol;
namespace ts = testsupport;

namespace {

// K4, every vertex demanding in-degree 1, two proper orientations four
// flips apart.
const char* k4_text =
    "4 6\n"
    "phi: 1 1 1 1\n"
    "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    "orientA:\n"
    "0 1\n0 2\n3 0\n1 2\n3 1\n2 3\n"
    "orientB:\n"
    "1 0\n0 2\n3 0\n2 1\n1 3\n3 2\n";

// K4 with demands (2,2,1,1): demands sum to the edge count, so every
// proper orientation is rigid (no single reversal stays proper).
const char* k4_tight_text =
    "4 6\n"
    "phi: 2 2 1 1\n"
    "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    "orientA:\n"
    "1 0\n2 0\n0 3\n2 1\n3 1\n3 2\n"
    "orientB:\n"
    "1 0\n0 2\n3 0\n2 1\n3 1\n2 3\n";

NCLInstance parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ncl(in);
}

// Independent flip-space oracle: bitmask BFS over proper orientations.
struct OrientSpace {
  std::vector<std::uint32_t> proper;  // masks, bit e set = edge e reversed
  std::vector<int> dist_from_a;
};

std::uint32_t mask_of(const Orientation& o) {
  std::uint32_t m = 0;
  for (std::size_t e = 0; e < o.size(); ++e)
    if (o[e]) m |= 1u << e;
  return m;
}

OrientSpace orient_space(const NCLInstance& inst) {
  const int m = inst.g.edge_count();
  OrientSpace s;
  std::vector<int> index(std::size_t{1} << m, -1);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Orientation o(m, 0);
    for (int e = 0; e < m; ++e) o[e] = (mask >> e) & 1u;
    if (is_proper_orientation(inst.g, inst.phi, o)) {
      index[mask] = static_cast<int>(s.proper.size());
      s.proper.push_back(mask);
    }
  }
  s.dist_from_a.assign(s.proper.size(), -1);
  std::uint32_t start = mask_of(inst.orient_a);
  std::queue<int> q;
  s.dist_from_a[index[start]] = 0;
  q.push(index[start]);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int e = 0; e < m; ++e) {
      std::uint32_t next = s.proper[i] ^ (1u << e);
      int j = index[next];
      if (j >= 0 && s.dist_from_a[j] < 0) {
        s.dist_from_a[j] = s.dist_from_a[i] + 1;
        q.push(j);
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("instance files round trip") {
  NCLInstance inst = parse_text(k4_text);
  CHECK(inst.g.vertex_count() == 4);
  CHECK(inst.g.edge_count() == 6);
  CHECK(inst.phi == std::vector<int>{1, 1, 1, 1});
  CHECK(inst.orient_a.size() == 6);
  CHECK(is_proper_orientation(inst.g, inst.phi, inst.orient_a));
  CHECK(is_proper_orientation(inst.g, inst.phi, inst.orient_b));

  std::ostringstream out;
  serialize_ncl(inst, out);
  NCLInstance again = parse_text(out.str());
  CHECK(again.g == inst.g);
  CHECK(again.phi == inst.phi);
  CHECK(again.orient_a == inst.orient_a);
  CHECK(again.orient_b == inst.orient_b);
}

TEST_CASE("instance parser rejects malformed input") {
  // Not cubic.
  CHECK_THROWS_AS(parse_text("3 3\nphi: 1 1 1\n0 1\n0 2\n1 2\n"
                             "orientA:\n0 1\n0 2\n1 2\n"
                             "orientB:\n0 1\n0 2\n1 2\n"),
                  error);
  auto replace_first = [](std::string text, const std::string& from,
                          const std::string& to) {
    text.replace(text.find(from), from.size(), to);
    return text;
  };
  // Demand outside {1, 2}.
  CHECK_THROWS_AS(parse_text(replace_first(k4_text, "phi: 1 1 1 1", "phi: 1 3 1 1")), error);
  // Demand list too short.
  CHECK_THROWS_AS(parse_text(replace_first(k4_text, "phi: 1 1 1 1", "phi: 1 1 1")), error);
  // Edge endpoints must be ordered.
  CHECK_THROWS_AS(parse_text(replace_first(k4_text, "0 1\n0 2\n0 3", "1 0\n0 2\n0 3")), error);
  // Duplicate edge in an orientation block.
  CHECK_THROWS_AS(parse_text(replace_first(k4_text, "orientA:\n0 1\n0 2", "orientA:\n0 1\n1 0")),
                  error);
  // Orientation of a non-edge.
  CHECK_THROWS_AS(parse_text(replace_first(k4_text, "orientA:\n0 1", "orientA:\n0 4")), error);
  // Truncated file.
  std::string cut(k4_text);
  cut.resize(cut.rfind("orientB:"));
  CHECK_THROWS_AS(parse_text(cut), error);
  // Trailing content.
  CHECK_THROWS_AS(parse_text(std::string(k4_text) + "0 1\n"), error);
  // Parse errors carry the right category.
  try {
    parse_text("4 6\nphi: 1 1 1 1\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("orientation properness") {
  NCLInstance inst = parse_text(k4_text);
  // All edges forward = transitive tournament: vertex 0 has in-degree 0.
  Orientation forward(6, 0);
  CHECK(!is_proper_orientation(inst.g, inst.phi, forward));
  // Doubling one demand makes a previously fine orientation fail.
  std::vector<int> harder = inst.phi;
  harder[3] = 2;
  CHECK(!is_proper_orientation(inst.g, harder, inst.orient_a));
  CHECK(is_proper_orientation(inst.g, inst.phi, inst.orient_a));
}

TEST_CASE("reorientation search matches the mask oracle") {
  NCLInstance inst = parse_text(k4_text);
  OrientSpace space = orient_space(inst);
  CHECK(space.proper.size() == 32);

  // Identity route.
  NCLInstance same = inst;
  same.orient_b = same.orient_a;
  auto empty = ncl_reachable(same);
  REQUIRE(empty.has_value());
  CHECK(empty->empty());

  // Against every proper target.
  const int m = inst.g.edge_count();
  for (std::size_t i = 0; i < space.proper.size(); ++i) {
    NCLInstance probe = inst;
    for (int e = 0; e < m; ++e)
      probe.orient_b[e] = static_cast<char>((space.proper[i] >> e) & 1u);
    auto flips = ncl_reachable(probe);
    if (space.dist_from_a[i] < 0) {
      CHECK(!flips.has_value());
      continue;
    }
    REQUIRE(flips.has_value());
    CHECK(flips->size() == static_cast<std::size_t>(space.dist_from_a[i]));
    // Replay the flips: every intermediate stays proper and the route ends
    // at the target.
    Orientation cur = probe.orient_a;
    for (int e : *flips) {
      cur[e] ^= 1;
      CHECK(is_proper_orientation(probe.g, probe.phi, cur));
    }
    CHECK(cur == probe.orient_b);
  }
}

TEST_CASE("tight demands freeze the orientation space") {
  NCLInstance tight = parse_text(k4_tight_text);
  CHECK(is_proper_orientation(tight.g, tight.phi, tight.orient_a));
  CHECK(is_proper_orientation(tight.g, tight.phi, tight.orient_b));
  CHECK(!ncl_reachable(tight).has_value());

  NCLInstance same = tight;
  same.orient_b = same.orient_a;
  auto empty = ncl_reachable(same);
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("reorientation search guards its budget and preconditions") {
  NCLInstance inst = parse_text(k4_text);
  ExploreLimits tiny;
  tiny.max_states = 32;
  try {
    ncl_reachable(inst, tiny);
    CHECK(false);
  } catch (const budget_error& e) {
    CHECK(e.required() == 64);
  }
  NCLInstance improper = inst;
  improper.orient_a.assign(6, 0);  // transitive tournament, in-degree 0 at vertex 0
  CHECK_THROWS_AS(ncl_reachable(improper), error);
}

TEST_CASE("orientation-to-recolouring reduction shape") {
  NCLInstance inst = parse_text(k4_text);
  for (bool planar : {false, true}) {
    CAPTURE(planar);
    ListPathInstance p = ncl_to_list_instance(inst, planar);
    // 12 slots, one forced cycle vertex per demand-1 vertex, 6 anchors.
    CHECK(p.digraph.vertex_count() == 22);
    CHECK(p.lists.k == 2);
    CHECK(p.planar == planar);
    CHECK(respects_lists(p.a, p.lists));
    CHECK(respects_lists(p.b, p.lists));
    CHECK(is_dicolouring(p.digraph, p.a, 2));
    CHECK(is_dicolouring(p.digraph, p.b, 2));
    int forced = 0;
    for (const auto& list : p.lists.lists)
      if (list.size() == 1) ++forced;
    CHECK(forced == 10);
    // Slot bookkeeping: slot r of vertex i is 3i + r and each edge knows
    // its two slots.
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 3; ++r) CHECK(p.vertex_slots[i][r] == 3 * i + r);
    std::vector<Arc> edges = inst.g.edges();
    for (int e = 0; e < 6; ++e) {
      auto [su, sv] = p.edge_slots[e];
      CHECK(su / 3 == edges[e].first);
      CHECK(sv / 3 == edges[e].second);
      CHECK(p.roles[p.edge_anchor[e]] ==
            "a " + std::to_string(edges[e].first) + " " + std::to_string(edges[e].second));
    }
    // The slot colours encode orientA: tail slot 2, head slot 1.
    for (int e = 0; e < 6; ++e) {
      auto [su, sv] = p.edge_slots[e];
      int tail = inst.orient_a[e] ? sv : su;
      int head = inst.orient_a[e] ? su : sv;
      CHECK(p.a[tail] == 2);
      CHECK(p.a[head] == 1);
    }
  }
}

TEST_CASE("reduction handles demand-2 vertices in both variants") {
  NCLInstance tight = parse_text(k4_tight_text);
  for (bool planar : {false, true}) {
    CAPTURE(planar);
    ListPathInstance p = ncl_to_list_instance(tight, planar);
    // 12 slots + (3 + 3 + 1 + 1) forced cycle vertices + 6 anchors.
    CHECK(p.digraph.vertex_count() == 26);
    CHECK(is_dicolouring(p.digraph, p.a, 2));
    CHECK(is_dicolouring(p.digraph, p.b, 2));
    if (planar) {
      for (int v = 0; v < p.digraph.vertex_count(); ++v) {
        CHECK(p.digraph.out_degree(v) <= 3);
        CHECK(p.digraph.in_degree(v) <= 3);
      }
    } else {
      for (int v = 0; v < p.digraph.vertex_count(); ++v)
        CHECK(p.digraph.total_degree(v) <= 5);
    }
  }
}

TEST_CASE("recolouring reachability mirrors reorientation reachability") {
  ExploreLimits roomy;
  roomy.max_states = std::uint64_t{1} << 14;

  NCLInstance inst = parse_text(k4_text);
  ListPathInstance p = ncl_to_list_instance(inst);
  auto flips = ncl_reachable(inst);
  auto steps = shortest_path(p.digraph, 2, p.a, p.b, roomy, &p.lists);
  REQUIRE(flips.has_value());
  REQUIRE(steps.has_value());
  ValidationResult r = validate_sequence(p.digraph, 2, p.a, *steps, &p.lists);
  CHECK(r.ok);
  CHECK(r.final == p.b);

  NCLInstance tight = parse_text(k4_tight_text);
  ListPathInstance tp = ncl_to_list_instance(tight);
  CHECK(!ncl_reachable(tight).has_value());
  CHECK(!shortest_path(tp.digraph, 2, tp.a, tp.b, roomy, &tp.lists).has_value());
}

TEST_CASE("flip sequences translate forward and back") {
  NCLInstance inst = parse_text(k4_text);
  ListPathInstance p = ncl_to_list_instance(inst);
  auto flips = ncl_reachable(inst);
  REQUIRE(flips.has_value());
  REQUIRE(!flips->empty());

  Sequence seq = translate_reorienting_to_redicolouring(inst, p, *flips);
  CHECK(seq.size() == 2 * flips->size());
  ValidationResult r = validate_sequence(p.digraph, 2, p.a, seq, &p.lists);
  REQUIRE(r.ok);
  CHECK(r.final == p.b);

  std::vector<int> back = translate_redicolouring_to_reorienting(inst, p, seq);
  CHECK(back == *flips);

  // Empty route both ways.
  CHECK(translate_reorienting_to_redicolouring(inst, p, {}).empty());
  CHECK(translate_redicolouring_to_reorienting(inst, p, {}).empty());
}

TEST_CASE("translation contract violations") {
  NCLInstance inst = parse_text(k4_text);
  ListPathInstance p = ncl_to_list_instance(inst);

  // A flip that breaks properness: edge 2 is (0,3) oriented 3->0 in
  // orientA and it is vertex 3's only incoming edge... find an edge whose
  // reversal is improper and demand it first.
  const int m = inst.g.edge_count();
  int bad_edge = -1;
  for (int e = 0; e < m && bad_edge < 0; ++e) {
    Orientation cur = inst.orient_a;
    cur[e] ^= 1;
    if (!is_proper_orientation(inst.g, inst.phi, cur)) bad_edge = e;
  }
  REQUIRE(bad_edge >= 0);
  CHECK_THROWS_AS(translate_reorienting_to_redicolouring(inst, p, {bad_edge}), error);
  CHECK_THROWS_AS(translate_reorienting_to_redicolouring(inst, p, {m}), error);

  // Backward: a sequence violating the lists is rejected.
  Sequence bogus{{p.edge_anchor[0], 2}};
  CHECK_THROWS_AS(translate_redicolouring_to_reorienting(inst, p, bogus), error);

  // Backward: the instance must match the reduction's starting orientation.
  NCLInstance other = inst;
  std::swap(other.orient_a, other.orient_b);
  auto flips = ncl_reachable(inst);
  REQUIRE(flips.has_value());
  Sequence seq = translate_reorienting_to_redicolouring(inst, p, *flips);
  CHECK_THROWS_AS(translate_redicolouring_to_reorienting(other, p, seq), error);
}

TEST_CASE("list elimination gadget") {
  Digraph c3 = ts::directed_cycle(3);
  ListPathInstance p;
  p.digraph = c3;
  p.lists.k = 2;
  p.lists.lists = {{1, 2}, {1, 2}, {1, 2}};
  p.a = {1, 1, 2};
  p.b = {2, 2, 1};

  ReducedInstance red = list_to_plain(p, 2);
  CHECK(red.k == 2);
  CHECK(red.digraph.vertex_count() == 3 + 3 * 2);
  CHECK(certificate_ok(red.certificate));
  CHECK(is_dicolouring(red.digraph, red.a, 2));
  CHECK(is_dicolouring(red.digraph, red.b, 2));
  // Unconstrained vertices gain no digons.
  for (int v = 0; v < 3; ++v) CHECK(red.digraph.total_degree(v) == c3.total_degree(v));

  // Reachability carries over: full lists change nothing.
  auto direct = shortest_path(c3, 2, p.a, p.b);
  auto reduced = shortest_path(red.digraph, 2, red.a, red.b);
  CHECK(direct.has_value());
  CHECK(reduced.has_value());

  // Pinning vertex 0 keeps this pair reachable (the two free vertices take
  // turns); the reduction must preserve both the route and its length.
  ListPathInstance pinned = p;
  pinned.lists.lists = {{1}, {1, 2}, {1, 2}};
  pinned.b = {1, 2, 1};
  ReducedInstance red2 = list_to_plain(pinned, 2);
  CHECK(is_dicolouring(red2.digraph, red2.a, 2));
  // The pinned vertex now carries a digon to the colour-2 gadget vertex.
  CHECK(red2.digraph.total_degree(0) == c3.total_degree(0) + 2);
  auto direct2 = shortest_path(c3, 2, pinned.a, pinned.b, {}, &pinned.lists);
  auto reduced2 = shortest_path(red2.digraph, 2, red2.a, red2.b);
  REQUIRE(direct2.has_value());
  REQUIRE(reduced2.has_value());
  CHECK(direct2->size() == 2);
  CHECK(reduced2->size() == direct2->size());
  // Only original vertices ever move in the reduced instance.
  for (const auto& [v, c] : *reduced2) CHECK(v < 3);

  // A pair the full palette would connect: on a digon with colour 3
  // forbidden on both sides, the two valid list states differ on both
  // vertices, so the gadgets must block the swap colour 3 would enable.
  Digraph digon(2);
  digon.add_arc(0, 1);
  digon.add_arc(1, 0);
  ListPathInstance swap;
  swap.digraph = digon;
  swap.lists.k = 3;
  swap.lists.lists = {{1, 2}, {1, 2}};
  swap.a = {1, 2};
  swap.b = {2, 1};
  CHECK(shortest_path(digon, 3, swap.a, swap.b).has_value());
  ReducedInstance red3 = list_to_plain(swap, 3);
  CHECK(certificate_ok(red3.certificate));
  CHECK(!shortest_path(red3.digraph, 3, red3.a, red3.b).has_value());

  // Gadget vertices can never move.
  std::vector<int> blocked = blocked_vertices(red2.digraph, red2.a, 2);
  for (int v = 3; v < red2.digraph.vertex_count(); ++v)
    CHECK(std::binary_search(blocked.begin(), blocked.end(), v));

  // Contract checks.
  CHECK_THROWS_AS(list_to_plain(p, 1), error);
  ListPathInstance planar5 = p;
  planar5.planar = true;
  CHECK_THROWS_AS(list_to_plain(planar5, 5), error);
}

TEST_CASE("list elimination on the orientation reduction output") {
  NCLInstance inst = parse_text(k4_text);
  ListPathInstance p = ncl_to_list_instance(inst);
  ReducedInstance red = list_to_plain(p, 2);
  CHECK(red.digraph.vertex_count() == 22 * 3);
  CHECK(certificate_ok(red.certificate));
  int max_deg = 0;
  for (int v = 0; v < red.digraph.vertex_count(); ++v)
    max_deg = std::max(max_deg, red.digraph.total_degree(v));
  CHECK(max_deg <= 2 * 2 + 1);
}

TEST_CASE("digon elimination") {
  // Oriented input: nothing changes.
  Digraph c3 = ts::directed_cycle(3);
  ReducedInstance same = eliminate_digons(c3, 2, {1, 1, 2}, {2, 2, 1});
  CHECK(same.digraph == c3);
  CHECK(same.a == Colouring{1, 1, 2});
  CHECK(certificate_ok(same.certificate));

  // One digon plus a tail.
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  ReducedInstance red = eliminate_digons(d, 2, {1, 2, 1}, {1, 2, 2});
  CHECK(is_oriented(red.digraph));
  CHECK(red.digraph.vertex_count() == 3 + 3);  // one 3-vertex tower per digon
  CHECK(red.digraph.has_arc(0, 1));
  CHECK(!red.digraph.has_arc(1, 0));
  CHECK(is_dicolouring(red.digraph, red.a, 2));
  CHECK(is_dicolouring(red.digraph, red.b, 2));
  CHECK(certificate_ok(red.certificate));

  // Reachability is preserved in both directions.
  auto before_yes = shortest_path(d, 2, {1, 2, 1}, {1, 2, 2});
  auto after_yes = shortest_path(red.digraph, 2, red.a, red.b);
  CHECK(before_yes.has_value());
  CHECK(after_yes.has_value());

  ReducedInstance red_no = eliminate_digons(d, 2, {1, 2, 1}, {2, 1, 1});
  auto before_no = shortest_path(d, 2, {1, 2, 1}, {2, 1, 1});
  auto after_no = shortest_path(red_no.digraph, 2, red_no.a, red_no.b);
  CHECK(!before_no.has_value());
  CHECK(!after_no.has_value());
}

TEST_CASE("digon elimination preserves reachability on random instances") {
  ts::Rng rng(24680);
  int tested = 0;
  while (tested < 25) {
    Digraph d = ts::random_digraph(4, 0.5, rng);
    std::size_t count = digons(d).size();
    if (count < 1 || count > 2) continue;
    auto a = ts::random_dicolouring(d, 2, rng, 100);
    auto b = ts::random_dicolouring(d, 2, rng, 100);
    if (!a || !b) continue;
    ReducedInstance red = eliminate_digons(d, 2, *a, *b);
    CHECK(is_oriented(red.digraph));
    auto before = shortest_path(d, 2, *a, *b);
    auto after = shortest_path(red.digraph, 2, red.a, red.b);
    CHECK(before.has_value() == after.has_value());
    ++tested;
  }
}

TEST_CASE("digon elimination contract checks") {
  Digraph d(2);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  CHECK_THROWS_AS(eliminate_digons(d, 1, {1, 1}, {1, 1}), error);
  CHECK_THROWS_AS(eliminate_digons(d, 2, {1, 1}, {1, 2}), error);  // a invalid
}

TEST_CASE("pinning a vertex of an oriented planar instance") {
  Digraph c3 = ts::directed_cycle(3);
  DigraphConstruction pinned = freeze_vertex_oriented_planar(c3, {1, 1, 2}, 0, 1);
  CHECK(pinned.k == 2);
  CHECK(pinned.digraph.vertex_count() == 13);  // 3 + the 10-vertex gadget
  CHECK(is_oriented(pinned.digraph));
  CHECK(is_dicolouring(pinned.digraph, pinned.colouring, 2));
  CHECK(!recolour_legal(pinned.digraph, pinned.colouring, 0, 2, 2));
  CHECK(certificate_ok(pinned.certificate));

  // The other colour works too.
  DigraphConstruction pinned2 = freeze_vertex_oriented_planar(c3, {1, 1, 2}, 2, 2);
  CHECK(!recolour_legal(pinned2.digraph, pinned2.colouring, 2, 1, 2));
  CHECK(certificate_ok(pinned2.certificate));

  // Vertices outside the gadget can still move if they could before.
  CHECK(recolour_legal(pinned.digraph, pinned.colouring, 2, 1, 2) ==
        recolour_legal(c3, {1, 1, 2}, 2, 1, 2));

  // Contract checks.
  Digraph digonful(2);
  digonful.add_arc(0, 1);
  digonful.add_arc(1, 0);
  try {
    freeze_vertex_oriented_planar(digonful, {1, 2}, 0, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_oriented);
  }
  CHECK_THROWS_AS(freeze_vertex_oriented_planar(c3, {1, 1, 2}, 0, 2), error);  // colour mismatch
  CHECK_THROWS_AS(freeze_vertex_oriented_planar(c3, {1, 1, 2}, 5, 1), error);  // bad vertex
}
