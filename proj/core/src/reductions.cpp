#include "dicol/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dicol/error.hpp"

namespace dicol {

namespace {

struct LineSource {
  std::istream& in;
  int number = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++number;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::size_t first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      std::size_t last = raw.find_last_not_of(" \t\r");
      out = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail_here(const std::string& msg) const {
    fail(errc::parse_error, msg + " at line " + std::to_string(number));
  }
};

std::vector<long long> numbers_of(const std::string& line, bool* ok) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x = 0;
  while (ss >> x) out.push_back(x);
  *ok = ss.eof();
  return out;
}

Orientation read_orientation(LineSource& src, const Graph& g,
                             const std::map<Arc, int>& edge_index,
                             const char* section) {
  Orientation dir(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  std::string line;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!src.next(line))
      fail(errc::parse_error,
           std::string("unexpected end of file in section ") + section);
    bool ok = false;
    std::vector<long long> nums = numbers_of(line, &ok);
    if (!ok || nums.size() != 2) src.fail_here("expected an arc \"u v\"");
    int u = static_cast<int>(nums[0]);
    int v = static_cast<int>(nums[1]);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
        u == v)
      src.fail_here("arc endpoints out of range");
    Arc key{std::min(u, v), std::max(u, v)};
    auto it = edge_index.find(key);
    if (it == edge_index.end())
      src.fail_here("orientation arc does not match any edge");
    if (seen[static_cast<std::size_t>(it->second)])
      src.fail_here("edge oriented twice");
    seen[static_cast<std::size_t>(it->second)] = 1;
    dir[static_cast<std::size_t>(it->second)] = u > v ? 1 : 0;
  }
  return dir;
}

}  // namespace

NCLInstance parse_ncl(std::istream& in) {
  LineSource src{in};
  std::string line;
  if (!src.next(line)) fail(errc::parse_error, "empty constraint-logic file");
  bool ok = false;
  std::vector<long long> nums = numbers_of(line, &ok);
  if (!ok || nums.size() != 2 || nums[0] < 1 || nums[1] < 0 ||
      nums[0] > 100000 || nums[1] > 1000000)
    src.fail_here("expected header \"n m\"");
  int n = static_cast<int>(nums[0]);
  int m = static_cast<int>(nums[1]);

  if (!src.next(line)) fail(errc::parse_error, "missing phi line");
  if (line.rfind("phi:", 0) != 0) src.fail_here("expected \"phi: ...\"");
  nums = numbers_of(line.substr(4), &ok);
  if (!ok || static_cast<int>(nums.size()) != n)
    src.fail_here("phi needs one value per vertex");
  std::vector<int> phi;
  for (long long p : nums) {
    if (p != 1 && p != 2) src.fail_here("phi values must be 1 or 2");
    phi.push_back(static_cast<int>(p));
  }

  Graph g(n);
  for (int e = 0; e < m; ++e) {
    if (!src.next(line)) fail(errc::parse_error, "unexpected end of edge list");
    nums = numbers_of(line, &ok);
    if (!ok || nums.size() != 2) src.fail_here("expected an edge \"u v\"");
    int u = static_cast<int>(nums[0]);
    int v = static_cast<int>(nums[1]);
    if (u < 0 || v >= n || u >= v) src.fail_here("edges need 0 <= u < v < n");
    if (g.has_edge(u, v)) src.fail_here("duplicate edge");
    g.add_edge(u, v);
  }
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      fail(errc::parse_error, "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) +
                                  ", the graph must be cubic");

  std::map<Arc, int> edge_index;
  std::vector<Arc> edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    edge_index[edges[e]] = static_cast<int>(e);

  if (!src.next(line) || line != "orientA:")
    src.fail_here("expected \"orientA:\"");
  Orientation a = read_orientation(src, g, edge_index, "orientA");
  if (!src.next(line) || line != "orientB:")
    src.fail_here("expected \"orientB:\"");
  Orientation b = read_orientation(src, g, edge_index, "orientB");
  if (src.next(line)) src.fail_here("trailing content");

  return NCLInstance{std::move(g), std::move(phi), std::move(a), std::move(b)};
}

NCLInstance load_ncl(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  return parse_ncl(in);
}

void serialize_ncl(const NCLInstance& inst, std::ostream& out) {
  const Graph& g = inst.g;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  out << "phi:";
  for (int p : inst.phi) out << ' ' << p;
  out << '\n';
  std::vector<Arc> edges = g.edges();
  for (const Arc& e : edges) out << e.first << ' ' << e.second << '\n';
  auto dump = [&](const Orientation& dir) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (dir[e])
        out << edges[e].second << ' ' << edges[e].first << '\n';
      else
        out << edges[e].first << ' ' << edges[e].second << '\n';
    }
  };
  out << "orientA:\n";
  dump(inst.orient_a);
  out << "orientB:\n";
  dump(inst.orient_b);
}

bool is_proper_orientation(const Graph& g, const std::vector<int>& phi,
                           const Orientation& orient) {
  require(static_cast<int>(phi.size()) == g.vertex_count(), errc::precondition,
          "phi needs one value per vertex");
  require(static_cast<int>(orient.size()) == g.edge_count(), errc::precondition,
          "orientation must assign a direction to every edge");
  std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Arc> edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int head = orient[e] ? edges[e].first : edges[e].second;
    ++indeg[static_cast<std::size_t>(head)];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (indeg[static_cast<std::size_t>(v)] < phi[static_cast<std::size_t>(v)])
      return false;
  return true;
}

namespace {

std::uint64_t pack_orientation(const Orientation& dir) {
  std::uint64_t mask = 0;
  for (std::size_t e = 0; e < dir.size(); ++e)
    if (dir[e]) mask |= std::uint64_t{1} << e;
  return mask;
}

}  // namespace

std::optional<std::vector<int>> ncl_reachable(const NCLInstance& inst,
                                              const ExploreLimits& limits) {
  const Graph& g = inst.g;
  int m = g.edge_count();
  require(is_proper_orientation(g, inst.phi, inst.orient_a), errc::precondition,
          "first orientation is not proper");
  require(is_proper_orientation(g, inst.phi, inst.orient_b), errc::precondition,
          "second orientation is not proper");
  if (m > 62 || (std::uint64_t{1} << m) > limits.max_states) {
    std::uint64_t needed = m > 62 ? ~std::uint64_t{0} : std::uint64_t{1} << m;
    throw budget_error("orientation space needs " + std::to_string(needed) +
                           " states, budget is " +
                           std::to_string(limits.max_states),
                       needed);
  }

  std::uint64_t start = pack_orientation(inst.orient_a);
  std::uint64_t target = pack_orientation(inst.orient_b);
  if (start == target) return std::vector<int>{};

  std::vector<Arc> edges = g.edges();
  std::vector<std::int8_t> flip_from(std::size_t{1} << m, -2);
  flip_from[start] = -1;
  std::vector<std::uint64_t> queue{start};
  std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()));

  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint64_t mask = queue[head];
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int e = 0; e < m; ++e) {
      int h = (mask >> e) & 1 ? edges[static_cast<std::size_t>(e)].first
                              : edges[static_cast<std::size_t>(e)].second;
      ++indeg[static_cast<std::size_t>(h)];
    }
    for (int e = 0; e < m; ++e) {
      std::uint64_t next = mask ^ (std::uint64_t{1} << e);
      if (flip_from[next] != -2) continue;
      int old_head = (mask >> e) & 1 ? edges[static_cast<std::size_t>(e)].first
                                     : edges[static_cast<std::size_t>(e)].second;
      if (indeg[static_cast<std::size_t>(old_head)] - 1 <
          inst.phi[static_cast<std::size_t>(old_head)])
        continue;
      flip_from[next] = static_cast<std::int8_t>(e);
      if (next == target) {
        std::vector<int> flips;
        std::uint64_t at = next;
        while (flip_from[at] != -1) {
          flips.push_back(flip_from[at]);
          at ^= std::uint64_t{1} << flip_from[at];
        }
        std::reverse(flips.begin(), flips.end());
        return flips;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

namespace {

void check_ncl_valid(const NCLInstance& inst) {
  const Graph& g = inst.g;
  require(static_cast<int>(inst.phi.size()) == g.vertex_count(),
          errc::precondition, "phi needs one value per vertex");
  for (int p : inst.phi)
    require(p == 1 || p == 2, errc::precondition, "phi values must be 1 or 2");
  for (int v = 0; v < g.vertex_count(); ++v)
    require(g.degree(v) == 3, errc::precondition, "the graph must be cubic");
  require(is_proper_orientation(g, inst.phi, inst.orient_a), errc::precondition,
          "first orientation is not proper");
  require(is_proper_orientation(g, inst.phi, inst.orient_b), errc::precondition,
          "second orientation is not proper");
}

}  // namespace

ListPathInstance ncl_to_list_instance(const NCLInstance& inst, bool planar) {
  check_ncl_valid(inst);
  const Graph& g = inst.g;
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<Arc> edges = g.edges();

  // Slot r of vertex i serves its r-th incident edge, incident edges
  // ordered by the other endpoint.
  std::vector<std::vector<std::pair<int, int>>> incident(
      static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[static_cast<std::size_t>(edges[e].first)].emplace_back(
        edges[e].second, static_cast<int>(e));
    incident[static_cast<std::size_t>(edges[e].second)].emplace_back(
        edges[e].first, static_cast<int>(e));
  }
  std::vector<std::pair<int, int>> edge_slots(
      static_cast<std::size_t>(m), {-1, -1});
  for (int i = 0; i < n; ++i) {
    auto& inc = incident[static_cast<std::size_t>(i)];
    std::sort(inc.begin(), inc.end());
    for (int r = 0; r < 3; ++r) {
      int e = inc[static_cast<std::size_t>(r)].second;
      int slot = 3 * i + r;
      if (edges[static_cast<std::size_t>(e)].first == i)
        edge_slots[static_cast<std::size_t>(e)].first = slot;
      else
        edge_slots[static_cast<std::size_t>(e)].second = slot;
    }
  }

  std::vector<int> z_base(static_cast<std::size_t>(n));
  int base = 3 * n;
  for (int i = 0; i < n; ++i) {
    z_base[static_cast<std::size_t>(i)] = base;
    base += inst.phi[static_cast<std::size_t>(i)] == 1 ? 1 : 3;
  }
  int anchor_base = base;
  int total = base + m;

  ListPathInstance out;
  out.planar = planar;
  out.roles.assign(static_cast<std::size_t>(total), "");
  out.vertex_slots.resize(static_cast<std::size_t>(n));
  out.edge_slots = edge_slots;
  out.edge_anchor.resize(static_cast<std::size_t>(m));

  Digraph d(total);
  for (int i = 0; i < n; ++i) {
    int x0 = 3 * i;
    int x1 = 3 * i + 1;
    int x2 = 3 * i + 2;
    out.vertex_slots[static_cast<std::size_t>(i)] = {x0, x1, x2};
    for (int r = 0; r < 3; ++r)
      out.roles[static_cast<std::size_t>(3 * i + r)] =
          "x " + std::to_string(i) + " " + std::to_string(r);
    int z0 = z_base[static_cast<std::size_t>(i)];
    if (inst.phi[static_cast<std::size_t>(i)] == 1) {
      out.roles[static_cast<std::size_t>(z0)] = "z " + std::to_string(i) + " 0";
      d.add_arc(z0, x0);
      d.add_arc(x0, x1);
      d.add_arc(x1, x2);
      d.add_arc(x2, z0);
    } else {
      int z1 = z0 + 1;
      int z2 = z0 + 2;
      for (int t = 0; t < 3; ++t)
        out.roles[static_cast<std::size_t>(z0 + t)] =
            "z " + std::to_string(i) + " " + std::to_string(t);
      if (!planar) {
        d.add_arc(x0, z0);
        d.add_arc(z0, x1);
        d.add_arc(x1, z1);
        d.add_arc(z1, x2);
        d.add_arc(x2, z2);
        d.add_arc(z2, x0);
        d.add_arc(x0, z1);
        d.add_arc(x1, z2);
        d.add_arc(x2, z0);
      } else {
        d.add_arc(z0, x0);
        d.add_arc(x0, x1);
        d.add_arc(x1, z0);
        d.add_arc(z2, x0);
        d.add_arc(x0, x2);
        d.add_arc(x2, z2);
        d.add_arc(z1, x2);
        d.add_arc(x2, x1);
        d.add_arc(x1, z1);
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    int anchor = anchor_base + e;
    out.edge_anchor[static_cast<std::size_t>(e)] = anchor;
    out.roles[static_cast<std::size_t>(anchor)] =
        "a " + std::to_string(edges[static_cast<std::size_t>(e)].first) + " " +
        std::to_string(edges[static_cast<std::size_t>(e)].second);
    auto [su, sv] = edge_slots[static_cast<std::size_t>(e)];
    d.add_arc(anchor, su);
    d.add_arc(su, sv);
    d.add_arc(sv, anchor);
  }

  out.lists.k = 2;
  out.lists.lists.assign(static_cast<std::size_t>(total), {1, 2});
  for (int i = 0; i < n; ++i) {
    int z0 = z_base[static_cast<std::size_t>(i)];
    int count = inst.phi[static_cast<std::size_t>(i)] == 1 ? 1 : 3;
    for (int t = 0; t < count; ++t)
      out.lists.lists[static_cast<std::size_t>(z0 + t)] = {2};
  }
  for (int e = 0; e < m; ++e)
    out.lists.lists[static_cast<std::size_t>(anchor_base + e)] = {1};

  auto colouring_for = [&](const Orientation& dir) {
    Colouring col(static_cast<std::size_t>(total), 0);
    for (int v = 0; v < total; ++v)
      col[static_cast<std::size_t>(v)] =
          out.lists.lists[static_cast<std::size_t>(v)].size() == 1
              ? out.lists.lists[static_cast<std::size_t>(v)][0]
              : 0;
    for (int e = 0; e < m; ++e) {
      auto [su, sv] = edge_slots[static_cast<std::size_t>(e)];
      if (dir[static_cast<std::size_t>(e)]) {
        col[static_cast<std::size_t>(sv)] = 2;
        col[static_cast<std::size_t>(su)] = 1;
      } else {
        col[static_cast<std::size_t>(su)] = 2;
        col[static_cast<std::size_t>(sv)] = 1;
      }
    }
    return col;
  };
  out.a = colouring_for(inst.orient_a);
  out.b = colouring_for(inst.orient_b);

  require(respects_lists(out.a, out.lists) && is_dicolouring(d, out.a, 2),
          errc::internal, "first endpoint colouring fails verification");
  require(respects_lists(out.b, out.lists) && is_dicolouring(d, out.b, 2),
          errc::internal, "second endpoint colouring fails verification");

  for (int v = 3 * n; v < total; ++v)
    require(d.total_degree(v) <= 3, errc::internal,
            "forced vertex exceeds degree 3");
  if (planar) {
    for (int v = 0; v < total; ++v)
      require(d.out_degree(v) <= 3 && d.in_degree(v) <= 3, errc::internal,
              "planar variant exceeds in- or out-degree 3");
  } else {
    for (int v = 0; v < total; ++v)
      require(d.total_degree(v) <= 5, errc::internal,
              "vertex exceeds degree 5");
  }

  out.digraph = std::move(d);
  return out;
}

namespace {

void check_matching_reduction(const NCLInstance& inst,
                              const ListPathInstance& p) {
  require(static_cast<int>(p.edge_slots.size()) == inst.g.edge_count() &&
              static_cast<int>(p.vertex_slots.size()) ==
                  inst.g.vertex_count() &&
              static_cast<int>(p.a.size()) == p.digraph.vertex_count(),
          errc::precondition,
          "reduction metadata does not match the instance");
}

}  // namespace

Sequence translate_reorienting_to_redicolouring(const NCLInstance& inst,
                                                const ListPathInstance& p,
                                                const std::vector<int>& flips) {
  check_ncl_valid(inst);
  check_matching_reduction(inst, p);
  int m = inst.g.edge_count();
  Orientation cur = inst.orient_a;
  Sequence seq;
  for (std::size_t i = 0; i < flips.size(); ++i) {
    int e = flips[i];
    require(e >= 0 && e < m, errc::precondition,
            "flip " + std::to_string(i + 1) + " names no edge");
    auto [su, sv] = p.edge_slots[static_cast<std::size_t>(e)];
    int tail_slot = cur[static_cast<std::size_t>(e)] ? sv : su;
    int head_slot = cur[static_cast<std::size_t>(e)] ? su : sv;
    seq.push_back({head_slot, 2});
    seq.push_back({tail_slot, 1});
    cur[static_cast<std::size_t>(e)] ^= 1;
    require(is_proper_orientation(inst.g, inst.phi, cur), errc::precondition,
            "reorienting sequence leaves properness at flip " +
                std::to_string(i + 1));
  }
  ValidationResult vr = validate_sequence(p.digraph, 2, p.a, seq, &p.lists);
  require(vr.ok, errc::internal,
          "translated sequence fails validation at step " +
              std::to_string(vr.failed_step) + ": " + vr.reason);
  return seq;
}

std::vector<int> translate_redicolouring_to_reorienting(
    const NCLInstance& inst, const ListPathInstance& p, const Sequence& seq) {
  check_ncl_valid(inst);
  check_matching_reduction(inst, p);
  ValidationResult vr = validate_sequence(p.digraph, 2, p.a, seq, &p.lists);
  require(vr.ok, errc::precondition,
          "recolouring sequence invalid at step " +
              std::to_string(vr.failed_step) + ": " + vr.reason);

  int m = inst.g.edge_count();
  std::vector<int> slot_edge(static_cast<std::size_t>(p.digraph.vertex_count()),
                             -1);
  for (int e = 0; e < m; ++e) {
    slot_edge[static_cast<std::size_t>(
        p.edge_slots[static_cast<std::size_t>(e)].first)] = e;
    slot_edge[static_cast<std::size_t>(
        p.edge_slots[static_cast<std::size_t>(e)].second)] = e;
  }

  Colouring col = p.a;
  Orientation cur(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    auto [su, sv] = p.edge_slots[static_cast<std::size_t>(e)];
    int cu = col[static_cast<std::size_t>(su)];
    int cv = col[static_cast<std::size_t>(sv)];
    require(cu != cv, errc::precondition,
            "starting colouring leaves edge " + std::to_string(e) +
                " without an orientation");
    cur[static_cast<std::size_t>(e)] = cu == 2 ? 0 : 1;
  }
  require(cur == inst.orient_a, errc::precondition,
          "starting colouring does not encode the first orientation");

  std::vector<int> flips;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    col[static_cast<std::size_t>(seq[i].v)] = seq[i].c;
    int e = slot_edge[static_cast<std::size_t>(seq[i].v)];
    if (e == -1) continue;
    auto [su, sv] = p.edge_slots[static_cast<std::size_t>(e)];
    int cu = col[static_cast<std::size_t>(su)];
    int cv = col[static_cast<std::size_t>(sv)];
    require(cu == 2 || cv == 2, errc::internal,
            "edge gadget reached an unoriented all-1 state");
    if (cu == 2 && cv == 2) continue;
    char dir = cu == 2 ? 0 : 1;
    if (dir == cur[static_cast<std::size_t>(e)]) continue;
    cur[static_cast<std::size_t>(e)] = dir;
    flips.push_back(e);
    require(is_proper_orientation(inst.g, inst.phi, cur), errc::internal,
            "backward translation produced an improper orientation at step " +
                std::to_string(i + 1));
  }
  return flips;
}

ReducedInstance list_to_plain(const ListPathInstance& p, int k) {
  require(k >= 2, errc::precondition, "list elimination needs k >= 2");
  const Digraph& d = p.digraph;
  int n = d.vertex_count();
  require(static_cast<int>(p.lists.lists.size()) == n, errc::precondition,
          "list assignment does not cover every vertex");
  for (const std::vector<int>& list : p.lists.lists) {
    require(!list.empty(), errc::precondition, "empty colour list");
    require(list.back() <= k && list.front() >= 1, errc::precondition,
            "lists must be subsets of 1..k");
  }
  require(!p.planar || k <= 4, errc::precondition,
          "the planar variant supports k between 2 and 4 only");
  require(respects_lists(p.a, p.lists) && is_dicolouring(d, p.a, k),
          errc::precondition, "first endpoint colouring invalid");
  require(respects_lists(p.b, p.lists) && is_dicolouring(d, p.b, k),
          errc::precondition, "second endpoint colouring invalid");

  std::int64_t total = n + static_cast<std::int64_t>(n) * k;
  require(total <= 2'000'000, errc::precondition, "construction too large");
  Digraph out_d(static_cast<int>(total));
  for (const Arc& arc : d.arcs()) out_d.add_arc(arc.first, arc.second);

  auto gadget = [&](int v, int i) { return n + v * k + (i - 1); };
  for (int v = 0; v < n; ++v) {
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        out_d.add_arc(gadget(v, i), gadget(v, j));
      }
    const std::vector<int>& list = p.lists.lists[static_cast<std::size_t>(v)];
    for (int i = 1; i <= k; ++i) {
      if (std::binary_search(list.begin(), list.end(), i)) continue;
      out_d.add_arc(v, gadget(v, i));
      out_d.add_arc(gadget(v, i), v);
    }
  }

  Colouring a2 = p.a;
  Colouring b2 = p.b;
  a2.resize(static_cast<std::size_t>(total));
  b2.resize(static_cast<std::size_t>(total));
  for (int v = 0; v < n; ++v)
    for (int i = 1; i <= k; ++i) {
      a2[static_cast<std::size_t>(gadget(v, i))] = i;
      b2[static_cast<std::size_t>(gadget(v, i))] = i;
    }

  require(is_dicolouring(out_d, a2, k), errc::internal,
          "extended first colouring fails verification");
  require(is_dicolouring(out_d, b2, k), errc::internal,
          "extended second colouring fails verification");

  ReducedInstance out;
  out.k = k;
  int max_deg = 0;
  for (int v = 0; v < out_d.vertex_count(); ++v)
    max_deg = std::max(max_deg, out_d.total_degree(v));
  out.certificate.push_back(CertEntry{
      "max_degree",
      "maximum total degree " + std::to_string(max_deg) + ", bound " +
          std::to_string(2 * k + 1),
      true, max_deg <= 2 * k + 1});

  std::vector<int> blocked = blocked_vertices(out_d, a2, k);
  bool gadget_blocked = true;
  std::size_t at = 0;
  for (int v = n; v < static_cast<int>(total); ++v) {
    while (at < blocked.size() && blocked[at] < v) ++at;
    gadget_blocked =
        gadget_blocked && at < blocked.size() && blocked[at] == v;
  }
  out.certificate.push_back(CertEntry{
      "gadget_blocked", "no replacement-gadget vertex can be recoloured",
      true, gadget_blocked});
  if (p.planar)
    out.certificate.push_back(CertEntry{
        "planar",
        "by construction for k between 2 and 4, forbidden colours placed on "
        "the outer face; unverified",
        false, false});

  out.digraph = std::move(out_d);
  out.a = std::move(a2);
  out.b = std::move(b2);
  return out;
}

ReducedInstance eliminate_digons(const Digraph& d, int k, const Colouring& a,
                                 const Colouring& b) {
  require(k >= 2, errc::precondition, "digon elimination needs k >= 2");
  require(k <= 20, errc::precondition, "replacement tower too large");
  require(is_dicolouring(d, a, k), errc::precondition,
          "first colouring invalid");
  require(is_dicolouring(d, b, k), errc::precondition,
          "second colouring invalid");

  std::vector<Arc> pairs = digons(d);
  int n = d.vertex_count();

  ReducedInstance out;
  out.k = k;
  if (pairs.empty()) {
    out.digraph = d;
    out.a = a;
    out.b = b;
    out.certificate.push_back(
        CertEntry{"oriented", "no digons to replace", true, is_oriented(d)});
    return out;
  }

  DigraphConstruction tower = out_degenerate_tower(k - 1);
  int block = tower.digraph.vertex_count();
  std::int64_t total =
      n + static_cast<std::int64_t>(pairs.size()) * block;
  require(total <= 2'000'000, errc::precondition, "construction too large");

  Digraph out_d(static_cast<int>(total));
  for (const Arc& arc : d.arcs()) {
    if (arc.first > arc.second && d.has_arc(arc.second, arc.first)) continue;
    out_d.add_arc(arc.first, arc.second);
  }
  Colouring a2 = a;
  Colouring b2 = b;
  a2.resize(static_cast<std::size_t>(total));
  b2.resize(static_cast<std::size_t>(total));

  std::vector<Arc> tower_arcs = tower.digraph.arcs();
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    int base = n + static_cast<int>(j) * block;
    auto [u, v] = pairs[j];
    for (const Arc& arc : tower_arcs)
      out_d.add_arc(base + arc.first, base + arc.second);
    for (int w = 0; w < block; ++w) {
      out_d.add_arc(v, base + w);
      out_d.add_arc(base + w, u);
      a2[static_cast<std::size_t>(base + w)] =
          tower.colouring[static_cast<std::size_t>(w)];
      b2[static_cast<std::size_t>(base + w)] =
          tower.colouring[static_cast<std::size_t>(w)];
    }
  }

  require(is_oriented(out_d), errc::internal,
          "digon elimination left a digon");
  require(is_dicolouring(out_d, a2, k), errc::internal,
          "extended first colouring fails verification");
  require(is_dicolouring(out_d, b2, k), errc::internal,
          "extended second colouring fails verification");

  out.certificate.push_back(
      CertEntry{"oriented", "all digons replaced", true, true});
  out.certificate.push_back(CertEntry{
      "growth",
      "each of the " + std::to_string(pairs.size()) + " digons adds " +
          std::to_string(block) + " vertices",
      true, out_d.vertex_count() == total});
  out.digraph = std::move(out_d);
  out.a = std::move(a2);
  out.b = std::move(b2);
  return out;
}

DigraphConstruction freeze_vertex_oriented_planar(const Digraph& d,
                                                  const Colouring& a, int v,
                                                  int colour) {
  int n = d.vertex_count();
  require(v >= 0 && v < n, errc::precondition, "vertex out of range");
  require(colour == 1 || colour == 2, errc::precondition,
          "colour must be 1 or 2");
  require(is_oriented(d), errc::not_oriented,
          "the freezing gadget needs an oriented input");
  require(is_dicolouring(d, a, 2), errc::precondition,
          "colouring is not a 2-dicolouring");
  require(a[static_cast<std::size_t>(v)] == colour, errc::precondition,
          "the vertex must already carry the colour to freeze");

  DigraphConstruction gadget = planar_freeze_gadget();
  Digraph out_d(n + 10);
  for (const Arc& arc : d.arcs()) out_d.add_arc(arc.first, arc.second);
  for (const Arc& arc : gadget.digraph.arcs())
    out_d.add_arc(n + arc.first, n + arc.second);
  out_d.add_arc(v, n + 1);
  out_d.add_arc(n + 2, v);

  Colouring col = a;
  col.resize(static_cast<std::size_t>(n + 10));
  for (int w = 0; w < 10; ++w) {
    int gc = gadget.colouring[static_cast<std::size_t>(w)];
    col[static_cast<std::size_t>(n + w)] = colour == 2 ? gc : 3 - gc;
  }

  DigraphConstruction out;
  out.k = 2;
  out.certificate.push_back(
      CertEntry{"oriented", "no digons", true, is_oriented(out_d)});
  out.certificate.push_back(CertEntry{
      "dicolouring", "every colour class induces an acyclic subdigraph", true,
      is_dicolouring(out_d, col, 2)});
  out.certificate.push_back(CertEntry{
      "pinned", "the chosen vertex cannot leave its colour", true,
      !recolour_legal(out_d, col, v, 3 - colour, 2)});
  std::vector<int> blocked = blocked_vertices(out_d, col, 2);
  bool gadget_blocked = true;
  std::size_t at = 0;
  for (int w = n; w < n + 10; ++w) {
    while (at < blocked.size() && blocked[at] < w) ++at;
    gadget_blocked =
        gadget_blocked && at < blocked.size() && blocked[at] == w;
  }
  out.certificate.push_back(CertEntry{
      "gadget_blocked", "every gadget vertex is blocked", true,
      gadget_blocked});
  out.certificate.push_back(
      CertEntry{"planar", "by construction, unverified", false, false});
  out.digraph = std::move(out_d);
  out.colouring = std::move(col);
  return out;
}

}  // namespace dicol
