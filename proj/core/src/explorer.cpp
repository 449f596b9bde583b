#include "dicol/explorer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace dicol {

namespace {

// Mixed-radix coordinate system over the candidate colourings: digit v picks
// an entry of choices[v] (all of [1,k], or the vertex's list). Vertex 0 is the
// least significant digit, matching code = sum (colour(v)-1) * k^v in the
// plain case.
struct Space {
  const Digraph& d;
  int n;
  std::vector<std::vector<int>> choices;
  std::vector<std::uint64_t> weight;
  std::uint64_t total = 1;

  Space(const Digraph& dg, int k, const ListAssignment* lists, std::uint64_t budget)
      : d(dg), n(dg.vertex_count()) {
    require(k >= 1, errc::precondition, "colour budget must be at least 1");
    if (lists) {
      require(static_cast<int>(lists->lists.size()) == n, errc::precondition,
              "list assignment does not match the digraph");
      require(lists->k == k, errc::precondition, "list assignment built for a different k");
    }
    choices.resize(n);
    weight.resize(n);
    bool overflow = false;
    for (int v = 0; v < n; ++v) {
      if (lists) {
        choices[v] = lists->lists[v];
        require(!choices[v].empty(), errc::precondition,
                "vertex " + std::to_string(v) + " has an empty list");
        for (int c : choices[v])
          require(c >= 1 && c <= k, errc::precondition, "list colour outside [1,k]");
      } else {
        choices[v].resize(k);
        std::iota(choices[v].begin(), choices[v].end(), 1);
      }
      weight[v] = overflow ? 0 : total;
      std::uint64_t radix = choices[v].size();
      if (!overflow && radix > 1 &&
          total > std::numeric_limits<std::uint64_t>::max() / radix)
        overflow = true;
      if (!overflow) total *= radix;
    }
    if (overflow || total > budget) {
      std::uint64_t required = overflow ? std::numeric_limits<std::uint64_t>::max() : total;
      throw budget_error(
          "state space needs " +
              (overflow ? std::string("more than 2^64") : std::to_string(required)) +
              " states, budget is " + std::to_string(budget),
          required);
    }
  }

  void decode(std::uint64_t code, Colouring& col) const {
    col.resize(n);
    for (int v = 0; v < n; ++v) {
      std::uint64_t radix = choices[v].size();
      col[v] = choices[v][code % radix];
      code /= radix;
    }
  }

  std::uint64_t encode(const Colouring& col) const {
    std::uint64_t code = 0;
    for (int v = n - 1; v >= 0; --v) {
      auto it = std::lower_bound(choices[v].begin(), choices[v].end(), col[v]);
      require(it != choices[v].end() && *it == col[v], errc::precondition,
              "colour of vertex " + std::to_string(v) + " is outside its list");
      code = code * choices[v].size() + static_cast<std::uint64_t>(it - choices[v].begin());
    }
    return code;
  }
};

// Backtracking enumeration of the valid states in ascending code order:
// vertices are assigned most significant digit first, entries ascending, and
// a branch dies as soon as the assigned suffix has a monochromatic cycle.
struct Enumerator {
  const Space& sp;
  Colouring col;
  std::uint64_t code = 0;
  std::vector<int> stamp;
  std::vector<int> queue;
  int epoch = 0;

  explicit Enumerator(const Space& space)
      : sp(space), col(space.n, 0), stamp(space.n, 0) {}

  bool closes_cycle(int v, int c) {
    ++epoch;
    queue.clear();
    for (int w : sp.d.out(v))
      if (col[w] == c) {
        stamp[w] = epoch;
        queue.push_back(w);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int w = queue[head];
      if (sp.d.has_arc(w, v)) return true;
      for (int x : sp.d.out(w))
        if (col[x] == c && stamp[x] != epoch) {
          stamp[x] = epoch;
          queue.push_back(x);
        }
    }
    return false;
  }

  template <typename Visit>
  bool down(int v, const Visit& visit) {
    if (v < 0) return visit(col, code);
    for (std::size_t j = 0; j < sp.choices[v].size(); ++j) {
      int c = sp.choices[v][j];
      if (closes_cycle(v, c)) continue;
      col[v] = c;
      code += j * sp.weight[v];
      if (!down(v - 1, visit)) return false;
      code -= j * sp.weight[v];
      col[v] = 0;
    }
    return true;
  }

  // visit(col, code) -> keep going?
  template <typename Visit>
  void run(const Visit& visit) {
    if (sp.n == 0) {
      visit(col, 0);
      return;
    }
    down(sp.n - 1, visit);
  }
};

using MovePair = std::pair<std::uint64_t, std::uint64_t>;  // (state, predecessor)

void expand_range(const Space& sp, const std::vector<std::uint64_t>& frontier, std::size_t lo,
                  std::size_t hi, std::vector<MovePair>& out) {
  Colouring col(sp.n);
  std::vector<std::uint64_t> digit(sp.n);
  for (std::size_t i = lo; i < hi; ++i) {
    std::uint64_t code = frontier[i];
    std::uint64_t rest = code;
    for (int v = 0; v < sp.n; ++v) {
      std::uint64_t radix = sp.choices[v].size();
      digit[v] = rest % radix;
      col[v] = sp.choices[v][digit[v]];
      rest /= radix;
    }
    for (int v = 0; v < sp.n; ++v) {
      for (std::size_t j = 0; j < sp.choices[v].size(); ++j) {
        int c = sp.choices[v][j];
        if (c == col[v]) continue;
        if (!detail::recolour_ok(sp.d, col, v, c)) continue;
        out.emplace_back(code + (j - digit[v]) * sp.weight[v], code);
      }
    }
  }
}

// One breadth-first level: all legal moves out of the frontier. The frontier
// is split into contiguous chunks across workers and the chunk outputs are
// concatenated in order, so the result does not depend on thread count.
std::vector<MovePair> expand(const Space& sp, const std::vector<std::uint64_t>& frontier,
                             int threads) {
  std::vector<MovePair> out;
  int workers = std::max(1, threads);
  workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), frontier.size()));
  if (workers <= 1) {
    expand_range(sp, frontier, 0, frontier.size(), out);
    return out;
  }
  std::vector<std::vector<MovePair>> parts(workers);
  std::vector<std::thread> pool;
  std::size_t chunk = (frontier.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = std::min(frontier.size(), lo + chunk);
    pool.emplace_back(
        [&sp, &frontier, lo, hi, &part = parts[w]] { expand_range(sp, frontier, lo, hi, part); });
  }
  for (auto& t : pool) t.join();
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Bitset {
  std::vector<std::uint64_t> bits;

  explicit Bitset(std::uint64_t n) : bits((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
};

// All states reachable from start, marking them in visited. Each level is
// sorted ascending, so the visit order is deterministic and the first state
// is the component minimum whenever start is.
std::vector<std::uint64_t> component_of(const Space& sp, std::uint64_t start, Bitset& visited,
                                        int threads) {
  std::vector<std::uint64_t> comp{start};
  std::vector<std::uint64_t> frontier{start};
  visited.set(start);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (const auto& [code, pred] : expand(sp, frontier, threads)) {
      if (visited.test(code)) continue;
      visited.set(code);
      next.push_back(code);
    }
    std::sort(next.begin(), next.end());
    comp.insert(comp.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return comp;
}

std::uint64_t component_diameter(const Space& sp, const std::vector<std::uint64_t>& comp,
                                 int threads) {
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(comp.size() * 2);
  for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(comp.size());
  for (const auto& [code, pred] : expand(sp, comp, threads))
    adj[index.at(pred)].push_back(index.at(code));
  std::uint64_t best = 0;
  std::vector<std::int64_t> dist(comp.size());
  std::vector<int> queue;
  for (std::size_t root = 0; root < comp.size(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, static_cast<int>(root));
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (std::int64_t x : dist)
      best = std::max(best, static_cast<std::uint64_t>(x));
  }
  return best;
}

void check_valid(const Digraph& d, const Colouring& a, int k, const char* which) {
  std::vector<int> cycle;
  require(is_dicolouring(d, a, k, cycle), errc::precondition,
          std::string(which) + " colouring is not a dicolouring");
}

}  // namespace

std::uint64_t enumerate_dicolourings(const Digraph& d, int k, const ExploreLimits& limits,
                                     const std::function<void(const Colouring&)>& sink) {
  Space sp(d, k, nullptr, limits.max_states);
  std::uint64_t count = 0;
  Enumerator en(sp);
  en.run([&](const Colouring& col, std::uint64_t) {
    ++count;
    if (sink) sink(col);
    return true;
  });
  return count;
}

ComponentSummary components(const Digraph& d, int k, bool with_diameter,
                            const ExploreLimits& limits) {
  Space sp(d, k, nullptr, limits.max_states);
  std::vector<std::uint64_t> all;
  Enumerator en(sp);
  en.run([&](const Colouring&, std::uint64_t code) {
    all.push_back(code);
    return true;
  });

  ComponentSummary summary;
  summary.total = all.size();
  Bitset visited(sp.total);
  for (std::uint64_t code : all) {
    if (visited.test(code)) continue;
    auto comp = component_of(sp, code, visited, limits.threads);
    ComponentInfo info;
    info.size = comp.size();
    sp.decode(code, info.representative);
    info.frozen = comp.size() == 1;
    if (with_diameter) info.diameter = component_diameter(sp, comp, limits.threads);
    summary.components.push_back(std::move(info));
  }
  return summary;
}

std::optional<Sequence> shortest_path(const Digraph& d, int k, const Colouring& a,
                                      const Colouring& b, const ExploreLimits& limits,
                                      const ListAssignment* lists) {
  check_valid(d, a, k, "start");
  check_valid(d, b, k, "target");
  if (lists) {
    require(respects_lists(a, *lists), errc::precondition,
            "start colouring violates the list assignment");
    require(respects_lists(b, *lists), errc::precondition,
            "target colouring violates the list assignment");
  }
  Space sp(d, k, lists, limits.max_states);
  std::uint64_t ca = sp.encode(a);
  std::uint64_t cb = sp.encode(b);
  if (ca == cb) return Sequence{};

  Bitset visited(sp.total);
  std::unordered_map<std::uint64_t, std::uint64_t> pred;
  std::vector<std::uint64_t> frontier{ca};
  visited.set(ca);
  bool found = false;
  while (!frontier.empty() && !found) {
    auto pairs = expand(sp, frontier, limits.threads);
    // Sorting by (state, predecessor) makes the first hit of each state the
    // smallest-predecessor one regardless of expansion chunking.
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::uint64_t> next;
    for (const auto& [code, p] : pairs) {
      if (visited.test(code)) continue;
      visited.set(code);
      pred[code] = p;
      next.push_back(code);
      if (code == cb) found = true;
    }
    frontier = std::move(next);
  }
  if (!found) return std::nullopt;

  std::vector<std::uint64_t> path{cb};
  while (path.back() != ca) path.push_back(pred.at(path.back()));
  std::reverse(path.begin(), path.end());

  Sequence s;
  Colouring prev(sp.n), cur(sp.n);
  sp.decode(path[0], prev);
  for (std::size_t i = 1; i < path.size(); ++i) {
    sp.decode(path[i], cur);
    for (int v = 0; v < sp.n; ++v)
      if (cur[v] != prev[v]) {
        s.push_back({v, cur[v]});
        break;
      }
    std::swap(prev, cur);
  }
  return s;
}

bool is_mixing(const Digraph& d, int k, const ExploreLimits& limits) {
  Space sp(d, k, nullptr, limits.max_states);
  std::uint64_t count = 0;
  std::uint64_t first = 0;
  Enumerator en(sp);
  en.run([&](const Colouring&, std::uint64_t code) {
    if (count == 0) first = code;
    ++count;
    return true;
  });
  if (count <= 1) return true;
  Bitset visited(sp.total);
  auto comp = component_of(sp, first, visited, limits.threads);
  return comp.size() == count;
}

bool mirror_reachable(const Digraph& d, const Colouring& a, const ExploreLimits& limits) {
  check_valid(d, a, 2, "start");
  Colouring b(a);
  for (int& c : b) c = 3 - c;
  return shortest_path(d, 2, a, b, limits).has_value();
}

std::vector<int> frozen_vertices(const Digraph& d, int k, const Colouring& a,
                                 const ExploreLimits& limits) {
  check_valid(d, a, k, "start");
  Space sp(d, k, nullptr, limits.max_states);
  Bitset visited(sp.total);
  auto comp = component_of(sp, sp.encode(a), visited, limits.threads);
  std::vector<char> same(sp.n, 1);
  Colouring col(sp.n);
  for (std::uint64_t code : comp) {
    sp.decode(code, col);
    for (int v = 0; v < sp.n; ++v)
      if (col[v] != a[v]) same[v] = 0;
  }
  std::vector<int> out;
  for (int v = 0; v < sp.n; ++v)
    if (same[v]) out.push_back(v);
  return out;
}

std::optional<Colouring> is_freezable(const Digraph& d, int k, const ExploreLimits& limits) {
  Space sp(d, k, nullptr, limits.max_states);
  std::optional<Colouring> found;
  Enumerator en(sp);
  en.run([&](const Colouring& col, std::uint64_t) {
    for (int v = 0; v < sp.n; ++v)
      for (int c = 1; c <= k; ++c)
        if (c != col[v] && detail::recolour_ok(d, col, v, c)) return true;
    found = col;
    return false;
  });
  return found;
}

}  // namespace dicol
