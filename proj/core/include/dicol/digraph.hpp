#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dicol/error.hpp"

namespace dicol {

using Arc = std::pair<int, int>;

/// Simple digraph on vertices 0..n-1. No self-loops, no duplicate arcs.
/// Adjacency lists are kept sorted ascending so every traversal over the
/// structure is deterministic.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n);

  int vertex_count() const { return n_; }
  int arc_count() const { return m_; }

  /// Inserts u->v. Rejects self-loops, out-of-range endpoints and duplicates.
  void add_arc(int u, int v);
  bool has_arc(int u, int v) const;

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int total_degree(int v) const { return out_degree(v) + in_degree(v); }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph& other) const;

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// All edges as (min,max) pairs in lexicographic order.
  std::vector<Arc> edges() const;

  bool operator==(const Graph& other) const;

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

bool is_acyclic(const Digraph& d);

/// All digons as (min,max) pairs, sorted.
std::vector<Arc> digons(const Digraph& d);
bool is_oriented(const Digraph& d);
bool is_bidirected(const Digraph& d);

/// Length of the shortest directed cycle; nullopt when acyclic.
std::optional<int> digirth(const Digraph& d);
/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

Graph underlying_graph(const Digraph& d);
Digraph bidirect(const Graph& g);

struct InducedSubdigraph {
  Digraph graph;
  std::vector<int> to_parent;    // new index -> old index
  std::vector<int> from_parent;  // old index -> new index, -1 if dropped
};

/// Subdigraph induced by the vertex set `s` (any order, duplicates rejected),
/// renumbered 0..|s|-1 in ascending order of the original indices.
InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& s);

// --- file format ------------------------------------------------------------
//
// Digraph file: '#' starts a comment line; first data line "n m"; then exactly
// m lines "u v", one arc each (a digon is two lines). Graph file: identical
// but each line is an undirected edge and must satisfy u < v.
//
// The istream overloads consume exactly one record so several can be read
// from the same stream; the _text and load_ variants parse a whole document
// and reject trailing content.

Digraph parse_digraph(std::istream& is);
Digraph parse_digraph_text(const std::string& text);
Digraph load_digraph(const std::string& path);
void serialize_digraph(const Digraph& d, std::ostream& os);

Graph parse_graph(std::istream& is);
Graph parse_graph_text(const std::string& text);
Graph load_graph(const std::string& path);
void serialize_graph(const Graph& g, std::ostream& os);

}  // namespace dicol
