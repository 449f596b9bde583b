#include "dicol/digraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dicol {

namespace {

void check_range(int v, int n, const char* what) {
  require(v >= 0 && v < n, errc::precondition,
          std::string(what) + " index " + std::to_string(v) + " out of range [0," +
              std::to_string(n) + ")");
}

bool sorted_contains(const std::vector<int>& xs, int v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

void sorted_insert(std::vector<int>& xs, int v) {
  xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
}

}  // namespace

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) {
  require(n >= 0, errc::precondition, "negative vertex count");
}

void Digraph::add_arc(int u, int v) {
  check_range(u, n_, "arc tail");
  check_range(v, n_, "arc head");
  require(u != v, errc::precondition, "self-loop at vertex " + std::to_string(u));
  require(!sorted_contains(out_[u], v), errc::precondition,
          "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
  sorted_insert(out_[u], v);
  sorted_insert(in_[v], u);
  ++m_;
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return sorted_contains(out_[u], v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;  // outer loop ascending, adjacency sorted: lexicographic
}

bool Digraph::operator==(const Digraph& other) const {
  return n_ == other.n_ && out_ == other.out_;
}

Graph::Graph(int n) : n_(n), adj_(n) {
  require(n >= 0, errc::precondition, "negative vertex count");
}

void Graph::add_edge(int u, int v) {
  check_range(u, n_, "edge endpoint");
  check_range(v, n_, "edge endpoint");
  require(u != v, errc::precondition, "self-loop at vertex " + std::to_string(u));
  require(!sorted_contains(adj_[u], v), errc::precondition,
          "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  sorted_insert(adj_[u], v);
  sorted_insert(adj_[v], u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return sorted_contains(adj_[u], v);
}

std::vector<Arc> Graph::edges() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

bool is_acyclic(const Digraph& d) {
  // Kahn peeling: strip sources until nothing is left or nothing is a source.
  int n = d.vertex_count();
  std::vector<int> indeg(n);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++removed;
    for (int w : d.out(v))
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

std::vector<Arc> digons(const Digraph& d) {
  std::vector<Arc> result;
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v : d.out(u))
      if (u < v && d.has_arc(v, u)) result.emplace_back(u, v);
  return result;
}

bool is_oriented(const Digraph& d) {
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v : d.out(u))
      if (d.has_arc(v, u)) return false;
  return true;
}

bool is_bidirected(const Digraph& d) {
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v : d.out(u))
      if (!d.has_arc(v, u)) return false;
  return true;
}

std::optional<int> digirth(const Digraph& d) {
  // BFS from every vertex; the first return to the source is the shortest
  // directed cycle through it.
  int n = d.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (dist[v] + 1 >= best) continue;
      for (int w : d.out(v)) {
        if (w == s) {
          best = std::min(best, dist[v] + 1);
        } else if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (best == 2) return 2;  // a digon; nothing shorter exists
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge at depths (du, dw) closes a cycle
  // of length du + dw + 1. Minimising over all sources is exact.
  int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.adj(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    if (best == 3) return 3;
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.vertex_count());
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v : d.out(u))
      if (u < v || !d.has_arc(v, u)) g.add_edge(u, v);
  return g;
}

Digraph bidirect(const Graph& g) {
  Digraph d(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& s) {
  InducedSubdigraph result;
  result.from_parent.assign(d.vertex_count(), -1);
  result.to_parent = s;
  std::sort(result.to_parent.begin(), result.to_parent.end());
  for (std::size_t i = 0; i < result.to_parent.size(); ++i) {
    int v = result.to_parent[i];
    check_range(v, d.vertex_count(), "induced subdigraph vertex");
    require(result.from_parent[v] == -1, errc::precondition,
            "duplicate vertex " + std::to_string(v) + " in induced subdigraph set");
    result.from_parent[v] = static_cast<int>(i);
  }
  result.graph = Digraph(static_cast<int>(result.to_parent.size()));
  for (int i = 0; i < result.graph.vertex_count(); ++i)
    for (int w : d.out(result.to_parent[i]))
      if (result.from_parent[w] >= 0) result.graph.add_arc(i, result.from_parent[w]);
  return result;
}

namespace {

// Shared line-based reader for the digraph/graph formats.
struct FormatReader {
  std::istream& is;
  int line_no = 0;

  bool next_data_line(std::string& line) {
    while (std::getline(is, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail_at(const std::string& what) {
    fail(errc::parse_error, what + " at line " + std::to_string(line_no));
  }

  std::pair<int, int> read_int_pair(const char* what) {
    std::string line;
    if (!next_data_line(line)) fail(errc::parse_error, std::string("missing ") + what);
    std::istringstream ss(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) fail_at(std::string("malformed ") + what);
    require(a >= std::numeric_limits<int>::min() && a <= std::numeric_limits<int>::max() &&
                b >= std::numeric_limits<int>::min() && b <= std::numeric_limits<int>::max(),
            errc::parse_error, std::string(what) + " out of range");
    return {static_cast<int>(a), static_cast<int>(b)};
  }
};

// Whole-document parses must not leave data behind: a header that undercounts
// the arc lines would otherwise drop them silently.
void require_consumed(std::istream& is, const char* what) {
  FormatReader reader{is};
  std::string line;
  if (reader.next_data_line(line))
    fail(errc::parse_error,
         std::string("trailing content after the declared ") + what);
}

}  // namespace

Digraph parse_digraph(std::istream& is) {
  FormatReader reader{is};
  auto [n, m] = reader.read_int_pair("header \"n m\"");
  if (n <= 0) reader.fail_at("vertex count must be positive");
  if (m < 0) reader.fail_at("negative arc count");
  Digraph d(n);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = reader.read_int_pair("arc line");
    try {
      d.add_arc(u, v);
    } catch (const error& e) {
      reader.fail_at(e.what());
    }
  }
  return d;
}

Digraph parse_digraph_text(const std::string& text) {
  std::istringstream ss(text);
  Digraph d = parse_digraph(ss);
  require_consumed(ss, "arc count");
  return d;
}

Digraph load_digraph(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), errc::parse_error, "cannot open digraph file: " + path);
  Digraph d = parse_digraph(f);
  require_consumed(f, "arc count");
  return d;
}

void serialize_digraph(const Digraph& d, std::ostream& os) {
  os << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

Graph parse_graph(std::istream& is) {
  FormatReader reader{is};
  auto [n, m] = reader.read_int_pair("header \"n m\"");
  if (n <= 0) reader.fail_at("vertex count must be positive");
  if (m < 0) reader.fail_at("negative edge count");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = reader.read_int_pair("edge line");
    if (u >= v) reader.fail_at("edge must be written \"u v\" with u < v");
    try {
      g.add_edge(u, v);
    } catch (const error& e) {
      reader.fail_at(e.what());
    }
  }
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream ss(text);
  Graph g = parse_graph(ss);
  require_consumed(ss, "edge count");
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), errc::parse_error, "cannot open graph file: " + path);
  Graph g = parse_graph(f);
  require_consumed(f, "edge count");
  return g;
}

void serialize_graph(const Graph& g, std::ostream& os) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace dicol
