#include "dicol/builders.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dicol/degeneracy.hpp"

namespace dicol {

namespace {

struct StepBudget {
  std::uint64_t limit;
  std::uint64_t used = 0;

  void tick() {
    if (++used > limit)
      throw budget_error("step budget " + std::to_string(limit) +
                             " exhausted; rerun with a larger budget",
                         2 * limit);
  }
};

std::int64_t integral_value(const Rational& r) {
  require(r.den == 1, errc::internal, "expected an integral degeneracy value");
  return r.num;
}

void check_endpoints(const Digraph& d, int k, const Colouring& a, const Colouring& b) {
  std::vector<int> cycle;
  require(is_dicolouring(d, a, k, cycle), errc::precondition,
          "start colouring is not a dicolouring");
  require(is_dicolouring(d, b, k, cycle), errc::precondition,
          "target colouring is not a dicolouring");
}

Colouring restrict_to(const Colouring& a, const std::vector<int>& to_parent) {
  Colouring out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) out[i] = a[to_parent[i]];
  return out;
}

int lowest_vertex_minimizing(const Digraph& d, bool by_total) {
  int pick = -1;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < d.vertex_count(); ++v) {
    int key = by_total ? d.total_degree(v)
                       : std::min(d.out_degree(v), d.in_degree(v));
    if (key < best) {
      best = key;
      pick = v;
    }
  }
  return pick;
}

int smallest_free_colour(const std::vector<char>& banned, int k) {
  for (int c = 1; c <= k; ++c)
    if (!banned[c]) return c;
  return -1;
}

std::vector<int> all_but(int n, int v) {
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) rest.push_back(u);
  return rest;
}

void finish_report(BuildReport& r, const Digraph& d, const Colouring& a, const Colouring& b) {
  r.recolour_counts.assign(d.vertex_count(), 0);
  Colouring cur = a;
  for (const Step& st : r.sequence) {
    ++r.recolour_counts[st.v];
    cur[st.v] = st.c;
  }
  require(cur == b, errc::internal, "built sequence does not end at the target colouring");
}

// Shared peel-and-replay recursion for the min-degeneracy and the
// average-degeneracy schemes. The only difference is how the peeled vertex
// dodges a colliding colour, expressed by the fix callback: it receives the
// blocked colour and the current colouring and must return the colour the
// peeled vertex moves to.
template <typename PickVertex, typename Fix>
Sequence peel_replay(const Digraph& d, int k, const Colouring& a, const Colouring& b,
                     StepBudget& budget, const PickVertex& pick, const Fix& fix) {
  int n = d.vertex_count();
  Sequence out;
  if (n == 1) {
    if (a[0] != b[0]) {
      budget.tick();
      out.push_back({0, b[0]});
    }
    return out;
  }
  int v = pick(d);
  auto sub = induced_subdigraph(d, all_but(n, v));
  Sequence inner = peel_replay(sub.graph, k, restrict_to(a, sub.to_parent),
                               restrict_to(b, sub.to_parent), budget, pick, fix);

  Colouring cur = a;
  auto emit = [&](int w, int c) {
    budget.tick();
    cur[w] = c;
    out.push_back({w, c});
  };
  for (const Step& st : inner) {
    int w = sub.to_parent[st.v];
    if (!detail::recolour_ok(d, cur, w, st.c)) {
      require(cur[v] == st.c, errc::internal,
              "replayed step is blocked but not by the peeled vertex");
      int cv = fix(d, cur, v, st.c);
      require(cv >= 1 && cv <= k && cv != cur[v], errc::internal,
              "no admissible colour for the peeled vertex");
      require(detail::recolour_ok(d, cur, v, cv), errc::internal,
              "peeled-vertex dodge is illegal");
      emit(v, cv);
      require(detail::recolour_ok(d, cur, w, st.c), errc::internal,
              "replayed step is still blocked after dodging");
    }
    emit(w, st.c);
  }
  if (cur[v] != b[v]) {
    require(detail::recolour_ok(d, cur, v, b[v]), errc::internal,
            "final recolouring of the peeled vertex is illegal");
    emit(v, b[v]);
  }
  return out;
}

}  // namespace

BuildReport build_min_degen(const Digraph& d, int k, const Colouring& a, const Colouring& b,
                            const BuildLimits& limits) {
  check_endpoints(d, k, a, b);
  std::int64_t delta = integral_value(degeneracy(d, DegenMode::MIN).value);
  require(k >= delta + 2, errc::precondition,
          "needs k >= min-degeneracy + 2 = " + std::to_string(delta + 2));

  auto pick = [](const Digraph& g) { return lowest_vertex_minimizing(g, false); };
  auto fix = [k](const Digraph& g, const Colouring& cur, int v, int blocked) {
    // One side of v has at most k-2 neighbours; avoid it plus the blocked
    // colour, which leaves a colour free and keeps the dodge itself legal.
    bool use_out = g.out_degree(v) <= k - 2;
    const std::vector<int>& side = use_out ? g.out(v) : g.in(v);
    std::vector<char> banned(k + 1, 0);
    banned[blocked] = 1;
    for (int x : side) banned[cur[x]] = 1;
    return smallest_free_colour(banned, k);
  };

  StepBudget budget{limits.max_steps};
  BuildReport r;
  r.sequence = peel_replay(d, k, a, b, budget, pick, fix);
  r.bound = "recursive replay, no polynomial bound";
  finish_report(r, d, a, b);
  return r;
}

BuildReport build_avg_degen(const Digraph& d, int k, const Colouring& a, const Colouring& b,
                            const BuildLimits& limits) {
  require(is_oriented(d), errc::not_oriented, "average-degeneracy scheme needs an oriented graph");
  check_endpoints(d, k, a, b);
  Rational avg = degeneracy(d, DegenMode::AVG).value;
  std::int64_t need = avg.ceil() + 1;
  require(k >= need, errc::precondition,
          "needs k >= ceil(avg-degeneracy) + 1 = " + std::to_string(need));

  auto pick = [](const Digraph& g) { return lowest_vertex_minimizing(g, true); };
  auto fix = [k](const Digraph& g, const Colouring& cur, int v, int blocked) {
    int dout = g.out_degree(v);
    int din = g.in_degree(v);
    std::vector<char> banned(k + 1, 0);
    if (std::min(dout, din) <= k - 2) {
      const std::vector<int>& side = dout <= din ? g.out(v) : g.in(v);
      banned[blocked] = 1;
      for (int x : side) banned[cur[x]] = 1;
      return smallest_free_colour(banned, k);
    }
    // Tight case: both degrees equal k-1. The blocking cycle pins a
    // neighbour with the blocked colour; avoiding that whole side frees a
    // colour and no cycle through v survives on that side.
    require(dout == k - 1 && din == k - 1, errc::internal,
            "tight case entered with wrong degrees");
    const std::vector<int>* side = nullptr;
    for (int x : g.out(v))
      if (cur[x] == blocked) {
        side = &g.out(v);
        break;
      }
    if (!side)
      for (int x : g.in(v))
        if (cur[x] == blocked) {
          side = &g.in(v);
          break;
        }
    require(side != nullptr, errc::internal,
            "blocked step with no conflicting neighbour of the peeled vertex");
    for (int x : *side) banned[cur[x]] = 1;
    return smallest_free_colour(banned, k);
  };

  StepBudget budget{limits.max_steps};
  BuildReport r;
  r.sequence = peel_replay(d, k, a, b, budget, pick, fix);
  r.bound = "recursive replay, no polynomial bound";
  finish_report(r, d, a, b);
  return r;
}

namespace {

Sequence linear_rec(const Digraph& d, int k, const Colouring& a, const Colouring& b) {
  int n = d.vertex_count();
  Sequence out;
  if (n == 1) {
    if (a[0] != b[0]) out.push_back({0, b[0]});
    return out;
  }
  std::int64_t delta = integral_value(degeneracy(d, DegenMode::MIN).value);
  int u = lowest_vertex_minimizing(d, false);
  bool use_out = d.out_degree(u) <= delta;
  const std::vector<int>& side = use_out ? d.out(u) : d.in(u);
  std::vector<char> on_side(n, 0);
  for (int x : side) on_side[x] = 1;

  auto sub = induced_subdigraph(d, all_but(n, u));
  Sequence inner = linear_rec(sub.graph, k, restrict_to(a, sub.to_parent),
                              restrict_to(b, sub.to_parent));
  std::vector<int> parent_vertex(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    parent_vertex[i] = sub.to_parent[inner[i].v];

  Colouring cur = a;
  auto emit = [&](int w, int c) {
    cur[w] = c;
    out.push_back({w, c});
  };
  for (std::size_t i = 0; i < inner.size(); ++i) {
    int w = parent_vertex[i];
    int c = inner[i].c;
    if (!detail::recolour_ok(d, cur, w, c)) {
      require(cur[u] == c, errc::internal,
              "replayed step is blocked but not by the peeled vertex");
      // Dodge to a colour clear of the side's current colours and of its
      // next delta+1 planned moves (this one included), so the peeled vertex
      // is not forced again until that window has elapsed.
      std::vector<char> banned(k + 1, 0);
      for (int x : side) banned[cur[x]] = 1;
      std::int64_t seen = 0;
      for (std::size_t j = i; j < inner.size() && seen < delta + 1; ++j) {
        if (!on_side[parent_vertex[j]]) continue;
        banned[inner[j].c] = 1;
        ++seen;
      }
      int cu = smallest_free_colour(banned, k);
      require(cu > 0 && cu != cur[u], errc::internal,
              "no admissible colour within the lookahead window");
      require(detail::recolour_ok(d, cur, u, cu), errc::internal,
              "peeled-vertex dodge is illegal");
      emit(u, cu);
      require(detail::recolour_ok(d, cur, w, c), errc::internal,
              "replayed step is still blocked after dodging");
    }
    emit(w, c);
  }
  if (cur[u] != b[u]) {
    require(detail::recolour_ok(d, cur, u, b[u]), errc::internal,
            "final recolouring of the peeled vertex is illegal");
    emit(u, b[u]);
  }
  return out;
}

}  // namespace

BuildReport build_linear(const Digraph& d, int k, const Colouring& a, const Colouring& b) {
  check_endpoints(d, k, a, b);
  std::int64_t delta = integral_value(degeneracy(d, DegenMode::MIN).value);
  require(k >= 2 * delta + 2, errc::precondition,
          "needs k >= 2*min-degeneracy + 2 = " + std::to_string(2 * delta + 2));

  BuildReport r;
  r.sequence = linear_rec(d, k, a, b);
  std::uint64_t n = static_cast<std::uint64_t>(d.vertex_count());
  std::uint64_t per_vertex = static_cast<std::uint64_t>(delta) + 1;
  r.bound_steps = per_vertex * n;
  r.bound = "(min-degeneracy+1)*n = " + std::to_string(*r.bound_steps);
  finish_report(r, d, a, b);
  require(r.sequence.size() <= *r.bound_steps, errc::internal,
          "sequence length " + std::to_string(r.sequence.size()) + " exceeds the bound " +
              std::to_string(*r.bound_steps));
  for (int v = 0; v < d.vertex_count(); ++v)
    require(r.recolour_counts[v] <= per_vertex, errc::internal,
            "vertex " + std::to_string(v) + " recoloured " +
                std::to_string(r.recolour_counts[v]) + " times, above the per-vertex bound " +
                std::to_string(per_vertex));
  return r;
}

BuildReport build_subcubic(const Digraph& d, const Colouring& a, const Colouring& b) {
  require(is_oriented(d), errc::not_oriented, "subcubic scheme needs an oriented graph");
  for (int v = 0; v < d.vertex_count(); ++v)
    require(d.total_degree(v) <= 3, errc::degree_exceeded,
            "vertex " + std::to_string(v) + " has total degree " +
                std::to_string(d.total_degree(v)) + ", above 3");
  check_endpoints(d, 2, a, b);

  std::uint64_t hamming = 0;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) ++hamming;

  BuildReport r;
  Colouring cur = a;
  auto apply = [&](int w, int c, const char* what) {
    require(detail::recolour_ok(d, cur, w, c), errc::internal, what);
    cur[w] = c;
    r.sequence.push_back({w, c});
  };

  int n = d.vertex_count();
  for (int guard = 0; guard <= n; ++guard) {
    int v = -1;
    for (int w = 0; w < n; ++w)
      if (cur[w] != b[w]) {
        v = w;
        break;
      }
    if (v < 0) break;
    require(guard < n, errc::internal, "mismatch count failed to decrease");
    int keep = cur[v];
    int tgt = b[v];

    auto block = recolour_witness_from(d, cur, v, tgt, 2);
    if (!block) {
      apply(v, tgt, "direct recolouring rejected");
      continue;
    }
    // All cycle vertices besides v carry tgt; one of them must want keep in
    // the target colouring, otherwise the target has a monochromatic cycle.
    const std::vector<int>& cycle = *block;
    int u = -1;
    for (std::size_t i = 1; i < cycle.size(); ++i)
      if (b[cycle[i]] == keep) {
        u = cycle[i];
        break;
      }
    require(u >= 0, errc::internal, "blocking cycle agrees with the target colouring");

    bool adjacent = d.has_arc(u, v) || d.has_arc(v, u);
    auto ublock = recolour_witness_from(d, cur, u, keep, 2);
    if (!ublock) {
      apply(u, keep, "cycle-vertex recolouring rejected");
      continue;
    }
    require(adjacent, errc::internal, "non-adjacent cycle vertex is blocked");
    // Four-step swap: park a helper from u's blocking cycle on the other
    // colour, move u, move v, bring the helper back.
    const std::vector<int>& ucycle = *ublock;
    require(ucycle.size() >= 3, errc::internal, "blocking cycle shorter than a triangle");
    int h = ucycle[1] != v ? ucycle[1] : ucycle.back();
    require(h != v && h != u, errc::internal, "no helper vertex available");
    apply(h, tgt, "helper parking move rejected");
    apply(u, keep, "cycle-vertex move rejected after parking");
    apply(v, tgt, "target move rejected after parking");
    apply(h, keep, "helper return move rejected");
  }

  r.bound_steps = 2 * hamming;
  r.bound = "2*|{v : a(v) != b(v)}| = " + std::to_string(*r.bound_steps);
  finish_report(r, d, a, b);
  require(r.sequence.size() <= *r.bound_steps, errc::internal,
          "sequence length exceeds twice the mismatch count");
  return r;
}

ArcPartition acyclic_arc_partition(const Digraph& d) {
  auto deg = degeneracy(d, DegenMode::MIN);
  std::int64_t delta = integral_value(deg.value);
  int n = d.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[deg.ordering[i]] = i;

  // At each vertex's elimination step, one of its two arc sides towards
  // later vertices has at most delta arcs; that side goes to B wholesale.
  std::vector<char> takes_out(n, 0);
  for (int v = 0; v < n; ++v) {
    int later_out = 0;
    for (int w : d.out(v))
      if (pos[w] > pos[v]) ++later_out;
    takes_out[v] = later_out <= delta;
  }

  ArcPartition part;
  part.ordering = deg.ordering;
  for (const Arc& arc : d.arcs()) {
    auto [x, y] = arc;
    bool in_b = pos[x] < pos[y] ? takes_out[x] : !takes_out[y];
    (in_b ? part.b : part.rest).push_back(arc);
  }

  Digraph first(n), second(n);
  for (const Arc& arc : part.b) first.add_arc(arc.first, arc.second);
  for (const Arc& arc : part.rest) second.add_arc(arc.first, arc.second);
  require(is_acyclic(first), errc::internal, "chosen arc part is not acyclic");
  require(is_acyclic(second), errc::internal, "complement arc part is not acyclic");
  return part;
}

Sequence lift_proper_sequence(const Digraph& d, const ArcPartition& p, const Colouring& a,
                              const Sequence& s) {
  int n = d.vertex_count();
  require(static_cast<int>(a.size()) == n, errc::precondition,
          "colouring length does not match the digraph");
  Digraph chosen(n);
  for (const Arc& arc : p.b) chosen.add_arc(arc.first, arc.second);
  Graph g = underlying_graph(chosen);

  int k = 1;
  for (int c : a) {
    require(c >= 1, errc::precondition, "colours are 1-based");
    k = std::max(k, c);
  }
  for (const Step& st : s) {
    require(st.c >= 1, errc::precondition, "colours are 1-based");
    k = std::max(k, st.c);
  }

  for (const auto& [x, y] : g.edges())
    require(a[x] != a[y], errc::precondition,
            "colouring is not proper on the underlying graph of the chosen part");
  Colouring cur = a;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Step& st = s[i];
    require(st.v >= 0 && st.v < n, errc::precondition,
            "step " + std::to_string(i + 1) + " names a vertex out of range");
    require(st.c != cur[st.v], errc::precondition,
            "step " + std::to_string(i + 1) + " does not change the colour");
    for (int w : g.adj(st.v))
      require(cur[w] != st.c, errc::precondition,
              "step " + std::to_string(i + 1) + " is not a proper recolouring");
    cur[st.v] = st.c;
  }

  ValidationResult res = validate_sequence(d, k, a, s);
  require(res.ok, errc::internal,
          "proper sequence fails on the digraph at step " + std::to_string(res.failed_step) +
              ": " + res.reason);
  return s;
}

}  // namespace dicol
