#include "dicol/density.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace dicol {

namespace {

struct MaxFlow {
  struct Edge {
    int to;
    std::int64_t cap;
    int rev;
  };

  std::vector<std::vector<Edge>> g;
  std::vector<int> level;
  std::vector<std::size_t> iter;

  explicit MaxFlow(int n) : g(n), level(n), iter(n) {}

  void add_edge(int a, int b, std::int64_t cap) {
    g[a].push_back({b, cap, static_cast<int>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Edge& e : g[v]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t f) {
    if (v == t) return f;
    for (std::size_t& i = iter[v]; i < g[v].size(); ++i) {
      Edge& e = g[v][i];
      if (e.cap > 0 && level[v] < level[e.to]) {
        std::int64_t pushed = dfs(e.to, t, std::min(f, e.cap));
        if (pushed > 0) {
          e.cap -= pushed;
          g[e.to][e.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      std::int64_t f;
      while ((f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) > 0) flow += f;
    }
    return flow;
  }

  std::vector<char> source_side(int s) {
    std::vector<char> side(g.size(), 0);
    std::vector<int> queue{s};
    side[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Edge& e : g[v]) {
        if (e.cap > 0 && !side[e.to]) {
          side[e.to] = 1;
          queue.push_back(e.to);
        }
      }
    }
    return side;
  }
};

// Tests whether some induced subdigraph has density strictly above p/q.
// Network: source -> one node per arc (cap q) -> both endpoints (cap inf),
// vertex -> sink (cap p). The min cut equals q*m - max_H (q|A(H)| - p|V(H)|),
// so a cut below q*m certifies a strictly denser vertex set.
std::optional<std::vector<int>> denser_subset(const Digraph& d,
                                              const std::vector<Arc>& arcs,
                                              const Rational& density) {
  int n = d.vertex_count();
  int m = static_cast<int>(arcs.size());
  std::int64_t p = density.num;
  std::int64_t q = density.den;
  std::int64_t inf = q * static_cast<std::int64_t>(m) + 1;

  int source = 0;
  int sink = 1 + m + n;
  MaxFlow flow(m + n + 2);
  for (int i = 0; i < m; ++i) {
    flow.add_edge(source, 1 + i, q);
    flow.add_edge(1 + i, 1 + m + arcs[i].first, inf);
    flow.add_edge(1 + i, 1 + m + arcs[i].second, inf);
  }
  for (int v = 0; v < n; ++v) flow.add_edge(1 + m + v, sink, p);

  std::int64_t cut = flow.run(source, sink);
  if (cut >= q * static_cast<std::int64_t>(m)) return std::nullopt;
  std::vector<char> side = flow.source_side(source);
  std::vector<int> h;
  for (int v = 0; v < n; ++v)
    if (side[1 + m + v]) h.push_back(v);
  return h;
}

Rational exact_density(const Digraph& d, const std::vector<int>& vertices) {
  auto sub = induced_subdigraph(d, vertices);
  return Rational(sub.graph.arc_count(), sub.graph.vertex_count());
}

}  // namespace

DensityReport max_average_degree(const Digraph& d) {
  int n = d.vertex_count();
  require(n >= 1, errc::precondition, "mad needs a non-empty digraph");
  DensityReport r;
  auto arcs = d.arcs();
  if (arcs.empty()) {
    r.mad = Rational(0);
    r.witness = {0};
    return r;
  }
  std::vector<int> best(n);
  std::iota(best.begin(), best.end(), 0);
  Rational density(static_cast<std::int64_t>(arcs.size()), n);
  while (auto h = denser_subset(d, arcs, density)) {
    best = std::move(*h);
    density = exact_density(d, best);
  }
  r.mad = density * Rational(2);
  r.witness = std::move(best);
  return r;
}

DensityReport max_average_degree(const Graph& g) {
  Digraph d(g.vertex_count());
  for (const auto& [u, v] : g.edges()) d.add_arc(u, v);
  return max_average_degree(d);
}

namespace {

struct ChiSearch {
  const Digraph& d;
  int k = 0;
  std::vector<int> order;
  std::vector<int> col;
  std::vector<int> stamp;
  std::vector<int> queue;
  int epoch = 0;

  explicit ChiSearch(const Digraph& digraph) : d(digraph) {
    int n = d.vertex_count();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return d.total_degree(a) > d.total_degree(b);
    });
    col.assign(n, 0);
    stamp.assign(n, 0);
  }

  // Would colouring v with c close a cycle inside the assigned part of
  // class c? Only cycles through v are possible since the rest was valid.
  bool creates_cycle(int v, int c) {
    ++epoch;
    queue.clear();
    for (int w : d.out(v))
      if (col[w] == c) {
        stamp[w] = epoch;
        queue.push_back(w);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int w = queue[head];
      if (d.has_arc(w, v)) return true;
      for (int x : d.out(w))
        if (col[x] == c && stamp[x] != epoch) {
          stamp[x] = epoch;
          queue.push_back(x);
        }
    }
    return false;
  }

  bool assign(std::size_t pos, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int top = std::min(used + 1, k);
    for (int c = 1; c <= top; ++c) {
      if (creates_cycle(v, c)) continue;
      col[v] = c;
      if (assign(pos + 1, std::max(used, c))) return true;
      col[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<int> dichromatic_number(const Digraph& d, int limit) {
  require(d.vertex_count() >= 1, errc::precondition, "chi needs a non-empty digraph");
  require(limit >= 1, errc::precondition, "colour limit must be at least 1");
  ChiSearch search(d);
  for (int k = 1; k <= limit; ++k) {
    search.k = k;
    if (search.assign(0, 0)) return k;
  }
  return std::nullopt;
}

}  // namespace dicol
