#pragma once

// Shared test helpers: deterministic instance generators and brute-force
// oracles. The oracles are kept intentionally naive (subset enumeration,
// full revalidation per candidate) so they cannot share a bug with the
// library code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "dicol/colouring.hpp"
#include "dicol/degeneracy.hpp"
#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

// --- small named instances --------------------------------------------------

inline dicol::Digraph make_digraph(int n, const std::vector<dicol::Arc>& arcs) {
  dicol::Digraph d(n);
  for (const auto& [u, v] : arcs) d.add_arc(u, v);
  return d;
}

inline dicol::Digraph directed_cycle(int n) {
  dicol::Digraph d(n);
  for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

inline dicol::Digraph transitive_tournament(int n) {
  dicol::Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

inline dicol::Graph complete_graph(int n) {
  dicol::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline dicol::Graph cycle_graph(int n) {
  dicol::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return g;
}

// --- random instance generators ----------------------------------------------

// Every ordered pair (u, v), u != v, receives the arc with probability p;
// digons arise when both directions hit.
inline dicol::Digraph random_digraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  dicol::Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

// Each unordered pair receives at most one arc, in a random direction.
inline dicol::Digraph random_oriented(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution dir(0.5);
  dicol::Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      if (dir(rng))
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

// Oriented with every total degree at most 3.
inline dicol::Digraph random_subcubic_oriented(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution dir(0.5);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  dicol::Digraph d(n);
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : pairs) {
    if (!coin(rng)) continue;
    if (deg[u] >= 3 || deg[v] >= 3) continue;
    if (dir(rng))
      d.add_arc(u, v);
    else
      d.add_arc(v, u);
    ++deg[u];
    ++deg[v];
  }
  return d;
}

// Total degree at most 3 and at least one digon (a digon costs two degree
// units at each endpoint). Needs n >= 2.
inline dicol::Digraph random_subcubic_with_digon(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution dir(0.5);
  std::bernoulli_distribution want_digon(0.25);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  dicol::Digraph d(n);
  std::vector<int> deg(n, 0);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  deg[0] = deg[1] = 2;
  for (const auto& [u, v] : pairs) {
    if (!coin(rng)) continue;
    if (want_digon(rng) && deg[u] <= 1 && deg[v] <= 1) {
      d.add_arc(u, v);
      d.add_arc(v, u);
      deg[u] += 2;
      deg[v] += 2;
    } else if (deg[u] <= 2 && deg[v] <= 2) {
      if (dir(rng))
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
      ++deg[u];
      ++deg[v];
    }
  }
  return d;
}

// Uniform colour array; retries until it happens to be a dicolouring.
inline std::optional<dicol::Colouring> random_dicolouring(const dicol::Digraph& d, int k,
                                                          Rng& rng, int tries = 500) {
  std::uniform_int_distribution<int> pick(1, k);
  for (int t = 0; t < tries; ++t) {
    dicol::Colouring a(d.vertex_count());
    for (int& c : a) c = pick(rng);
    if (dicol::is_dicolouring(d, a, k)) return a;
  }
  return std::nullopt;
}

// k^n, clamped to cap + 1 on overflow.
inline std::uint64_t state_count(int k, int n, std::uint64_t cap) {
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) {
    if (s > cap / static_cast<std::uint64_t>(k)) return cap + 1;
    s *= static_cast<std::uint64_t>(k);
  }
  return s;
}

// --- degeneracy / density oracles --------------------------------------------

// Keys doubled so all four modes live in integers.
inline std::int64_t doubled_key(dicol::DegenMode mode, int dout, int din) {
  switch (mode) {
    case dicol::DegenMode::MIN: return 2 * std::min(dout, din);
    case dicol::DegenMode::OUT: return 2 * dout;
    case dicol::DegenMode::MAX: return 2 * std::max(dout, din);
    case dicol::DegenMode::AVG: return dout + din;
  }
  return 0;
}

// Max over all non-empty induced subdigraphs of the minimum key.
inline dicol::Rational brute_degeneracy(const dicol::Digraph& d, dicol::DegenMode mode) {
  const int n = d.vertex_count();
  const std::vector<dicol::Arc> arcs = d.arcs();
  std::int64_t best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> dout(n, 0), din(n, 0);
    for (const auto& [u, v] : arcs)
      if ((mask >> u & 1u) && (mask >> v & 1u)) {
        ++dout[u];
        ++din[v];
      }
    std::int64_t lowest = -1;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      std::int64_t key = doubled_key(mode, dout[v], din[v]);
      if (lowest < 0 || key < lowest) lowest = key;
    }
    best = std::max(best, lowest);
  }
  return dicol::Rational(best, 2);
}

// Max over all non-empty induced subdigraphs of 2|A(H)| / |V(H)|.
inline dicol::Rational brute_mad(const dicol::Digraph& d) {
  const int n = d.vertex_count();
  const std::vector<dicol::Arc> arcs = d.arcs();
  dicol::Rational best(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::int64_t inside = 0;
    for (const auto& [u, v] : arcs)
      if ((mask >> u & 1u) && (mask >> v & 1u)) ++inside;
    dicol::Rational cand(2 * inside, std::popcount(mask));
    if (best < cand) best = cand;
  }
  return best;
}

// --- recolouring-space oracle -------------------------------------------------

// All valid k-dicolourings in ascending state-code order (vertex 0 is the
// least significant digit).
inline std::vector<dicol::Colouring> all_dicolourings(const dicol::Digraph& d, int k) {
  const int n = d.vertex_count();
  std::vector<dicol::Colouring> out;
  dicol::Colouring a(n, 1);
  while (true) {
    if (dicol::is_dicolouring(d, a, k)) out.push_back(a);
    int i = 0;
    while (i < n && a[i] == k) {
      a[i] = 1;
      ++i;
    }
    if (i == n) break;
    ++a[i];
  }
  return out;
}

// Explicit recolouring graph: states are the valid (optionally
// list-respecting) colourings, adjacency is "differs on one vertex". Built
// from is_dicolouring alone, independent of the library's legality
// shortcut and of its breadth-first search.
struct BruteSpace {
  int k = 0;
  std::vector<dicol::Colouring> states;
  std::map<dicol::Colouring, int> index;
  std::vector<std::vector<int>> adj;
};

inline BruteSpace brute_space(const dicol::Digraph& d, int k,
                              const dicol::ListAssignment* lists = nullptr) {
  BruteSpace s;
  s.k = k;
  for (const auto& a : all_dicolourings(d, k))
    if (!lists || dicol::respects_lists(a, *lists)) s.states.push_back(a);
  for (int i = 0; i < static_cast<int>(s.states.size()); ++i) s.index[s.states[i]] = i;
  s.adj.resize(s.states.size());
  const int n = d.vertex_count();
  for (int i = 0; i < static_cast<int>(s.states.size()); ++i) {
    dicol::Colouring a = s.states[i];
    for (int v = 0; v < n; ++v) {
      const int old = a[v];
      for (int c = 1; c <= k; ++c) {
        if (c == old) continue;
        a[v] = c;
        auto it = s.index.find(a);
        if (it != s.index.end()) s.adj[i].push_back(it->second);
      }
      a[v] = old;
    }
  }
  return s;
}

inline std::vector<int> brute_component_of(const BruteSpace& s, int start) {
  std::vector<char> seen(s.states.size(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  std::vector<int> comp;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    comp.push_back(i);
    for (int j : s.adj[i])
      if (!seen[j]) {
        seen[j] = 1;
        q.push(j);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

inline int brute_component_count(const BruteSpace& s) {
  std::vector<char> seen(s.states.size(), 0);
  int count = 0;
  for (int i = 0; i < static_cast<int>(s.states.size()); ++i) {
    if (seen[i]) continue;
    ++count;
    std::queue<int> q;
    q.push(i);
    seen[i] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int j : s.adj[x])
        if (!seen[j]) {
          seen[j] = 1;
          q.push(j);
        }
    }
  }
  return count;
}

inline std::optional<int> brute_distance(const BruteSpace& s, const dicol::Colouring& a,
                                         const dicol::Colouring& b) {
  auto ia = s.index.find(a);
  auto ib = s.index.find(b);
  if (ia == s.index.end() || ib == s.index.end()) return std::nullopt;
  std::vector<int> dist(s.states.size(), -1);
  std::queue<int> q;
  q.push(ia->second);
  dist[ia->second] = 0;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j : s.adj[i])
      if (dist[j] < 0) {
        dist[j] = dist[i] + 1;
        q.push(j);
      }
  }
  if (dist[ib->second] < 0) return std::nullopt;
  return dist[ib->second];
}

// --- proper-colouring helpers for the lift tests ------------------------------

inline dicol::Colouring greedy_proper(const dicol::Graph& g, int k) {
  const int n = g.vertex_count();
  dicol::Colouring a(n, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<char> used(k + 2, 0);
    for (int w : g.adj(v))
      if (a[w] > 0 && a[w] <= k) used[a[w]] = 1;
    int c = 1;
    while (c <= k && used[c]) ++c;
    a[v] = c;
  }
  return a;
}

// Random walk of single-vertex proper recolourings; mutates `a` and returns
// the steps taken (may be shorter than `len` when a vertex has no move).
inline dicol::Sequence random_proper_walk(const dicol::Graph& g, dicol::Colouring& a, int k,
                                          int len, Rng& rng) {
  const int n = g.vertex_count();
  std::uniform_int_distribution<int> pick_v(0, n - 1);
  dicol::Sequence s;
  for (int t = 0; t < len; ++t) {
    int v = pick_v(rng);
    std::vector<char> used(k + 1, 0);
    for (int w : g.adj(v)) used[a[w]] = 1;
    std::vector<int> free;
    for (int c = 1; c <= k; ++c)
      if (!used[c] && c != a[v]) free.push_back(c);
    if (free.empty()) continue;
    int c = free[std::uniform_int_distribution<int>(0, static_cast<int>(free.size()) - 1)(rng)];
    a[v] = c;
    s.push_back({v, c});
  }
  return s;
}

}  // namespace testsupport
