#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dicol/colouring.hpp"
#include "dicol/constructions.hpp"
#include "dicol/digraph.hpp"
#include "dicol/error.hpp"
#include "support.hpp"

using namespace dicol;
namespace ts = testsupport;

TEST_CASE("dicolouring validity on small instances") {
  Digraph c3 = ts::directed_cycle(3);
  CHECK(!is_dicolouring(c3, {1, 1, 1}, 1));
  CHECK(is_dicolouring(c3, {1, 1, 2}, 2));
  CHECK(is_dicolouring(c3, {1, 2, 3}, 3));  // all distinct always works

  std::vector<int> witness;
  CHECK(!is_dicolouring(c3, {1, 1, 1}, 1, witness));
  CHECK(witness == std::vector<int>{0, 1, 2});  // minimal rotation first

  // Shape violations are contract errors, not "false".
  CHECK_THROWS_AS(is_dicolouring(c3, {1, 1, 3}, 2), error);
  CHECK_THROWS_AS(is_dicolouring(c3, {0, 1, 2}, 2), error);
  CHECK_THROWS_AS(is_dicolouring(c3, {1, 1}, 2), error);

  DigraphConstruction f4 = frozen_4regular();
  CHECK(is_dicolouring(f4.digraph, f4.colouring, 2));
}

TEST_CASE("dicolourings of a bidirected digraph are exactly proper colourings") {
  ts::Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Digraph d = ts::random_digraph(5, 0.5, rng);
    Graph g = underlying_graph(d);
    Digraph b = bidirect(g);
    Colouring a(5);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int& c : a) c = pick(rng);
    bool proper = true;
    for (const auto& [u, v] : g.edges())
      if (a[u] == a[v]) proper = false;
    CHECK(is_dicolouring(b, a, 3) == proper);
  }
}

TEST_CASE("single recolouring legality") {
  Digraph c3 = ts::directed_cycle(3);
  Colouring a{1, 1, 2};
  CHECK(!recolour_legal(c3, a, 2, 1, 2));  // would close a monochromatic triangle
  CHECK(recolour_legal(c3, a, 0, 2, 2));
  CHECK_THROWS_AS(recolour_legal(c3, a, 0, 1, 2), error);  // no-op move is an error

  Digraph lone(1);
  CHECK(recolour_legal(lone, {1}, 0, 2, 2));

  DigraphConstruction f4 = frozen_4regular();
  for (int v = 0; v < 8; ++v) {
    int other = f4.colouring[v] == 1 ? 2 : 1;
    CHECK(!recolour_legal(f4.digraph, f4.colouring, v, other, 2));
  }
}

TEST_CASE("legality agrees with full revalidation") {
  ts::Rng rng(99);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    Digraph d = ts::random_digraph(6, 0.35, rng);
    auto a = ts::random_dicolouring(d, 3, rng);
    if (!a) continue;
    for (int v = 0; v < 6; ++v)
      for (int c = 1; c <= 3; ++c) {
        if (c == (*a)[v]) continue;
        Colouring mutated = *a;
        mutated[v] = c;
        CHECK(recolour_legal(d, *a, v, c, 3) == is_dicolouring(d, mutated, 3));
        ++checked;
      }
  }
  CHECK(checked > 300);
}

TEST_CASE("witness cycles are genuine monochromatic cycles through v") {
  ts::Rng rng(1234);
  for (int t = 0; t < 40; ++t) {
    Digraph d = ts::random_digraph(6, 0.4, rng);
    auto a = ts::random_dicolouring(d, 2, rng);
    if (!a) continue;
    for (int v = 0; v < 6; ++v) {
      int c = (*a)[v] == 1 ? 2 : 1;
      auto w = recolour_witness(d, *a, v, c, 2);
      CHECK(w.has_value() != recolour_legal(d, *a, v, c, 2));
      if (!w) continue;
      // Rotated so the smallest vertex leads.
      CHECK(*std::min_element(w->begin(), w->end()) == (*w)[0]);
      auto wf = recolour_witness_from(d, *a, v, c, 2);
      REQUIRE(wf.has_value());
      CHECK((*wf)[0] == v);
      // Same cycle, both rotations: consecutive arcs exist and all vertices
      // would wear colour c after the move.
      for (std::size_t i = 0; i < wf->size(); ++i) {
        int x = (*wf)[i];
        int y = (*wf)[(i + 1) % wf->size()];
        CHECK(d.has_arc(x, y));
        CHECK((x == v ? c : (*a)[x]) == c);
      }
    }
  }
}

TEST_CASE("blocked vertices, admissible colours, frozen predicate") {
  Digraph c3 = ts::directed_cycle(3);
  // Only vertex 2 is stuck: moving it to colour 1 closes the monochromatic
  // cycle, while vertices 0 and 1 can each flip freely.
  CHECK(blocked_vertices(c3, {1, 1, 2}, 2) == std::vector<int>{2});
  CHECK(!is_frozen_colouring(c3, {1, 1, 2}, 2));
  CHECK(admissible_colours(c3, {1, 1, 2}, 0, 2) == std::vector<int>{1, 2});
  CHECK(admissible_colours(c3, {1, 1, 2}, 2, 2) == std::vector<int>{2});

  Digraph edgeless(4);
  CHECK(blocked_vertices(edgeless, {1, 1, 1, 1}, 2).empty());

  DigraphConstruction f4 = frozen_4regular();
  std::vector<int> all(8);
  std::iota(all.begin(), all.end(), 0);
  CHECK(blocked_vertices(f4.digraph, f4.colouring, 2) == all);
  CHECK(is_frozen_colouring(f4.digraph, f4.colouring, 2));

  DigraphConstruction f5 = freezable_path_pair(5);
  CHECK(is_frozen_colouring(f5.digraph, f5.colouring, 2));
}

TEST_CASE("frozen colourings stay frozen under colour permutation") {
  DigraphConstruction f4 = frozen_4regular();
  Colouring swapped = f4.colouring;
  for (int& c : swapped) c = c == 1 ? 2 : 1;
  CHECK(is_frozen_colouring(f4.digraph, swapped, 2));
}

TEST_CASE("list assignments") {
  ListAssignment l;
  l.k = 3;
  l.lists = {{1, 2}, {2}, {1, 3}};
  CHECK(respects_lists({1, 2, 3}, l));
  CHECK(respects_lists({2, 2, 1}, l));
  CHECK(!respects_lists({1, 1, 3}, l));
  CHECK(!respects_lists({3, 2, 1}, l));
}

TEST_CASE("sequence validation") {
  Digraph c3 = ts::directed_cycle(3);
  Colouring a{1, 1, 2};

  ValidationResult empty = validate_sequence(c3, 2, a, {});
  CHECK(empty.ok);
  CHECK(empty.final == a);

  // Second step makes everything colour 2: report step 2 with the triangle.
  ValidationResult bad = validate_sequence(c3, 2, a, {{0, 2}, {1, 2}});
  CHECK(!bad.ok);
  CHECK(bad.failed_step == 2);
  CHECK(bad.witness == std::vector<int>{0, 1, 2});
  CHECK(bad.final == Colouring{2, 1, 2});  // prefix before the failure

  ValidationResult good = validate_sequence(c3, 2, a, {{0, 2}, {2, 1}, {1, 2}});
  CHECK(good.ok);
  CHECK(good.final == Colouring{2, 2, 1});

  // A step must change the colour.
  ValidationResult noop = validate_sequence(c3, 2, a, {{0, 1}});
  CHECK(!noop.ok);
  CHECK(noop.failed_step == 1);

  // An invalid starting colouring is reported as step 0.
  ValidationResult start = validate_sequence(c3, 1, {1, 1, 1}, {});
  CHECK(!start.ok);
  CHECK(start.failed_step == 0);

  // List violations are caught even when the recolouring itself is legal.
  ListAssignment l;
  l.k = 2;
  l.lists = {{1}, {1, 2}, {1, 2}};
  ValidationResult lv = validate_sequence(c3, 2, a, {{0, 2}}, &l);
  CHECK(!lv.ok);
  CHECK(lv.failed_step == 1);
}

TEST_CASE("sequence validation is compositional") {
  ts::Rng rng(5150);
  for (int t = 0; t < 30; ++t) {
    Digraph d = ts::random_digraph(5, 0.3, rng);
    auto a = ts::random_dicolouring(d, 3, rng);
    if (!a) continue;
    // Random legal walk of length 6, recorded as two halves.
    Colouring cur = *a;
    Sequence s1, s2;
    for (int step = 0; step < 6; ++step) {
      std::vector<Step> options;
      for (int v = 0; v < 5; ++v)
        for (int c = 1; c <= 3; ++c)
          if (c != cur[v] && recolour_legal(d, cur, v, c, 3)) options.push_back({v, c});
      if (options.empty()) break;
      Step pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      (step < 3 ? s1 : s2).push_back(pick);
      cur[pick.v] = pick.c;
    }
    ValidationResult r1 = validate_sequence(d, 3, *a, s1);
    REQUIRE(r1.ok);
    ValidationResult r2 = validate_sequence(d, 3, r1.final, s2);
    REQUIRE(r2.ok);
    Sequence joined = s1;
    joined.insert(joined.end(), s2.begin(), s2.end());
    ValidationResult rj = validate_sequence(d, 3, *a, joined);
    REQUIRE(rj.ok);
    CHECK(rj.final == r2.final);
  }
}

TEST_CASE("colouring file format") {
  std::istringstream in("# colours\n2 2\n0 1\n1 1\n");
  Colouring a = parse_colouring(in, 3);
  CHECK(a == Colouring{1, 1, 2});
  std::ostringstream out;
  serialize_colouring(a, out);
  std::istringstream back(out.str());
  CHECK(parse_colouring(back, 3) == a);

  std::istringstream missing("0 1\n1 1\n");
  CHECK_THROWS_AS(parse_colouring(missing, 3), error);
  std::istringstream twice("0 1\n0 2\n1 1\n");
  CHECK_THROWS_AS(parse_colouring(twice, 3), error);
}

TEST_CASE("sequence and list file formats") {
  std::istringstream in("0 2\n2 1\n# done\n1 2\n");
  Sequence s = parse_sequence(in);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Step{0, 2});
  CHECK(s[2] == Step{1, 2});
  std::ostringstream out;
  serialize_sequence(s, out);
  std::istringstream back(out.str());
  CHECK(parse_sequence(back) == s);

  std::istringstream lin("0 1 2\n1 2\n2 1 3\n");
  ListAssignment l = parse_lists(lin, 3, 3);
  CHECK(l.lists[0] == std::vector<int>{1, 2});
  CHECK(l.lists[1] == std::vector<int>{2});
  std::ostringstream lout;
  serialize_lists(l, lout);
  std::istringstream lback(lout.str());
  ListAssignment l2 = parse_lists(lback, 3, 3);
  CHECK(l2.lists == l.lists);

  std::istringstream bad("0 1 4\n1 2\n2 1\n");
  CHECK_THROWS_AS(parse_lists(bad, 3, 3), error);  // colour above k
}
