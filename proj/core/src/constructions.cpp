#include "dicol/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dicol/degeneracy.hpp"
#include "dicol/density.hpp"
#include "dicol/error.hpp"
#include "dicol/explorer.hpp"

namespace dicol {

namespace {

CertEntry checked(std::string name, std::string detail, bool holds) {
  return CertEntry{std::move(name), std::move(detail), true, holds};
}

CertEntry note(std::string name, std::string detail) {
  return CertEntry{std::move(name), std::move(detail), false, false};
}

void add_arc_once(Digraph& d, int u, int v) {
  if (!d.has_arc(u, v)) d.add_arc(u, v);
}

CertEntry check_dicolouring(const Digraph& d, const Colouring& a, int k) {
  return checked("dicolouring",
                 "every colour class induces an acyclic subdigraph",
                 is_dicolouring(d, a, k));
}

CertEntry check_frozen(const Digraph& d, const Colouring& a, int k) {
  return checked("frozen", "no single recolouring step is legal",
                 is_frozen_colouring(d, a, k));
}

CertEntry check_arc_count(const Digraph& d, std::int64_t want) {
  return checked("arc_count",
                 "expected " + std::to_string(want) + " arcs, found " +
                     std::to_string(d.arc_count()),
                 d.arc_count() == want);
}

// Appends the tower with parameter k at vertex offset base. Vertices are
// laid out root first, then the two recursive blocks. Returns the block
// size and writes the canonical colouring (root of a parameter-j block
// gets colour j + 1).
int append_tower(int k, int base, std::vector<Arc>& arcs, Colouring& col) {
  if (k == 0) {
    col[static_cast<std::size_t>(base)] = 1;
    return 1;
  }
  col[static_cast<std::size_t>(base)] = k + 1;
  int first = base + 1;
  int size = append_tower(k - 1, first, arcs, col);
  int second = first + size;
  append_tower(k - 1, second, arcs, col);
  for (int v = first; v < first + size; ++v) arcs.emplace_back(base, v);
  for (int v = first; v < first + size; ++v)
    for (int w = second; w < second + size; ++w) arcs.emplace_back(v, w);
  for (int w = second; w < second + size; ++w) arcs.emplace_back(w, base);
  return 1 + 2 * size;
}

std::pair<Digraph, Colouring> tower(int k) {
  int n = (1 << (k + 1)) - 1;
  std::vector<Arc> arcs;
  Colouring col(static_cast<std::size_t>(n), 0);
  append_tower(k, 0, arcs, col);
  Digraph d(n);
  for (const Arc& a : arcs) d.add_arc(a.first, a.second);
  return {std::move(d), std::move(col)};
}

}  // namespace

DigraphConstruction frozen_4regular() {
  Digraph d(8);
  for (int i = 0; i < 4; ++i) d.add_arc(i, (i + 1) % 4);
  for (int i = 0; i < 4; ++i) d.add_arc(4 + i, 4 + (i + 1) % 4);
  d.add_arc(5, 0);
  d.add_arc(6, 1);
  d.add_arc(7, 2);
  d.add_arc(4, 3);
  for (int i = 0; i < 4; ++i) d.add_arc(i, 4 + i);

  Colouring col(8);
  for (int i = 0; i < 8; ++i) col[static_cast<std::size_t>(i)] = i % 2 ? 1 : 2;

  DigraphConstruction out;
  out.k = 2;
  out.certificate.push_back(check_arc_count(d, 16));
  bool regular = true;
  for (int v = 0; v < 8; ++v)
    regular = regular && d.out_degree(v) == 2 && d.in_degree(v) == 2;
  out.certificate.push_back(
      checked("regular", "in-degree and out-degree 2 everywhere", regular));
  out.certificate.push_back(
      checked("oriented", "no digons", is_oriented(d)));
  out.certificate.push_back(check_dicolouring(d, col, 2));
  out.certificate.push_back(check_frozen(d, col, 2));
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

DigraphConstruction freezable_path_pair(int n) {
  require(n >= 2, errc::precondition, "freezable_path_pair needs n >= 2");
  auto u = [](int i) { return i - 1; };
  auto v = [n](int i) { return n + i - 1; };

  Digraph d(2 * n);
  for (int i = 1; i < n; ++i) add_arc_once(d, u(i), u(i + 1));
  for (int i = 1; i < n; ++i) add_arc_once(d, v(i), v(i + 1));
  for (int i = 1; i <= n; ++i) add_arc_once(d, u(i), v(i));
  for (int i = 1; i < n; ++i) add_arc_once(d, v(i + 1), u(i));
  add_arc_once(d, v(1), u(2));
  add_arc_once(d, u(n), v(1));
  add_arc_once(d, v(n - 1), u(n));

  Colouring col(static_cast<std::size_t>(2 * n), 2);
  for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = 1;

  DigraphConstruction out;
  out.k = 2;
  out.certificate.push_back(check_dicolouring(d, col, 2));
  out.certificate.push_back(check_frozen(d, col, 2));
  out.certificate.push_back(check_arc_count(d, 4ll * n));
  DensityReport density = max_average_degree(d);
  out.certificate.push_back(checked(
      "mad", "maximum average degree 4, found " + density.mad.str(),
      density.mad == Rational(4)));
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

DigraphConstruction freezable_k(int n, int k) {
  require(n >= 2, errc::precondition, "freezable_k needs n >= 2");
  require(k >= 2, errc::precondition, "freezable_k needs k >= 2");
  auto vertex = [n](int j, int i) { return (j - 1) * n + (i - 1); };

  Digraph d(k * n);
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i < n; ++i) add_arc_once(d, vertex(j, i), vertex(j, i + 1));
  for (int j = 1; j <= k; ++j) {
    for (int l = j + 1; l <= k; ++l) {
      for (int i = 1; i <= n; ++i) add_arc_once(d, vertex(j, i), vertex(l, i));
      for (int i = 1; i < n; ++i)
        add_arc_once(d, vertex(l, i + 1), vertex(j, i));
      add_arc_once(d, vertex(l, 1), vertex(j, 2));
      add_arc_once(d, vertex(j, n), vertex(l, 1));
      add_arc_once(d, vertex(l, n - 1), vertex(j, n));
    }
  }

  Colouring col(static_cast<std::size_t>(k * n));
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= n; ++i)
      col[static_cast<std::size_t>(vertex(j, i))] = j;

  DigraphConstruction out;
  out.k = k;
  out.certificate.push_back(check_dicolouring(d, col, k));
  out.certificate.push_back(check_frozen(d, col, k));
  std::int64_t want = static_cast<std::int64_t>(k) * k * n +
                      static_cast<std::int64_t>(k) * (k - 2);
  out.certificate.push_back(check_arc_count(d, want));
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

DigraphConstruction out_degenerate_tower(int k) {
  require(k >= 0, errc::precondition, "out_degenerate_tower needs k >= 0");
  require(k <= 20, errc::precondition, "tower parameter too large");
  auto [d, col] = tower(k);

  DigraphConstruction out;
  out.k = k + 1;
  int n = d.vertex_count();
  out.certificate.push_back(checked(
      "vertex_count", std::to_string(n) + " = 2^(k+1) - 1 vertices",
      n == (1 << (k + 1)) - 1));
  DegeneracyReport degen = degeneracy(d, DegenMode::OUT);
  out.certificate.push_back(checked(
      "out_degeneracy", "expected " + std::to_string(k) + ", found " +
                            degen.value.str(),
      degen.value == Rational(k)));
  out.certificate.push_back(check_dicolouring(d, col, k + 1));
  if (n <= 15) {
    std::optional<int> chi = dichromatic_number(d, k + 1);
    out.certificate.push_back(checked(
        "dichromatic_number", "expected " + std::to_string(k + 1),
        chi.has_value() && *chi == k + 1));
  } else {
    out.certificate.push_back(note(
        "dichromatic_number",
        "equals k + 1; exact search skipped beyond 15 vertices"));
  }
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

DigraphConstruction non_mixing_tower(int k) {
  require(k >= 1, errc::precondition, "non_mixing_tower needs k >= 1");
  require(k <= 10, errc::precondition, "tower parameter too large");

  int top = k + 1;
  int block = (1 << (k + 1)) - 1;
  std::int64_t pairs = static_cast<std::int64_t>(top) * (top - 1) / 2;
  std::int64_t total = top + pairs * block;
  require(total <= 1'000'000, errc::precondition, "construction too large");

  Digraph d(static_cast<int>(total));
  Colouring col(static_cast<std::size_t>(total), 0);
  for (int i = 0; i < top; ++i) col[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < top; ++i)
    for (int j = i + 1; j < top; ++j) d.add_arc(i, j);

  int base = top;
  std::vector<Arc> arcs;
  for (int i = 0; i < top; ++i) {
    for (int j = i + 1; j < top; ++j) {
      arcs.clear();
      append_tower(k, base, arcs, col);
      for (const Arc& a : arcs) d.add_arc(a.first, a.second);
      for (int w = base; w < base + block; ++w) {
        d.add_arc(j, w);
        d.add_arc(w, i);
      }
      base += block;
    }
  }

  DigraphConstruction out;
  out.k = k + 1;
  out.certificate.push_back(checked(
      "vertex_count",
      std::to_string(total) + " vertices: k + 1 plus one tower per arc",
      d.vertex_count() == total));
  DegeneracyReport degen = degeneracy(d, DegenMode::OUT);
  out.certificate.push_back(checked(
      "out_degeneracy", "expected " + std::to_string(k) + ", found " +
                            degen.value.str(),
      degen.value == Rational(k)));
  out.certificate.push_back(check_dicolouring(d, col, k + 1));
  if (static_cast<int>(total) <= 24 && k + 1 == 2) {
    out.certificate.push_back(checked(
        "not_mixing", "dicolouring graph on k + 1 colours is disconnected",
        !is_mixing(d, k + 1)));
  } else {
    out.certificate.push_back(note(
        "not_mixing",
        "dicolouring graph on k + 1 colours is disconnected; state space "
        "beyond the explorer budget"));
  }
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

DigraphConstruction planar_freeze_gadget() {
  Digraph d(10);
  auto r = [](int i) { return i - 1; };
  auto b = [](int i) { return 4 + i; };
  for (int i = 1; i < 5; ++i) d.add_arc(r(i), r(i + 1));
  for (int i = 1; i < 5; ++i) d.add_arc(b(i), b(i + 1));
  for (int i = 1; i <= 5; ++i) d.add_arc(b(i), r(i));
  for (int i = 1; i < 5; ++i) d.add_arc(r(i + 1), b(i));
  d.add_arc(r(1), b(2));
  d.add_arc(r(4), b(5));
  d.add_arc(b(5), r(1));

  Colouring col(10, 2);
  for (int i = 0; i < 5; ++i) col[static_cast<std::size_t>(i)] = 1;

  DigraphConstruction out;
  out.k = 2;
  out.certificate.push_back(check_arc_count(d, 20));
  out.certificate.push_back(checked("oriented", "no digons", is_oriented(d)));
  out.certificate.push_back(check_dicolouring(d, col, 2));
  out.certificate.push_back(check_frozen(d, col, 2));
  out.certificate.push_back(note("planar", "by construction, unverified"));
  out.digraph = std::move(d);
  out.colouring = std::move(col);
  return out;
}

Graph complete_bipartite(int r) {
  require(r >= 1, errc::precondition, "complete_bipartite needs r >= 1");
  Graph g(2 * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g.add_edge(i, r + j);
  return g;
}

namespace {

// Splits h into sides by breadth-first 2-colouring; side 0 holds the lowest
// vertex of each component. Returns false when some component is odd.
bool bipartition(const Graph& h, std::vector<int>& side) {
  int n = h.vertex_count();
  side.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : h.adj(x)) {
        if (side[static_cast<std::size_t>(y)] == -1) {
          side[static_cast<std::size_t>(y)] =
              1 - side[static_cast<std::size_t>(x)];
          queue.push_back(y);
        } else if (side[static_cast<std::size_t>(y)] ==
                   side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct EdgeColouring {
  // colour[e] in 1..r for edge index e of h.edges()
  std::vector<int> colour;
};

bool kuhn_augment(int a, const std::vector<std::vector<std::pair<int, int>>>& adj,
                  const std::vector<int>& edge_colour, std::vector<char>& seen,
                  std::vector<int>& match_b, std::vector<int>& match_edge) {
  for (const auto& [b, e] : adj[static_cast<std::size_t>(a)]) {
    if (edge_colour[static_cast<std::size_t>(e)] != 0) continue;
    if (seen[static_cast<std::size_t>(b)]) continue;
    seen[static_cast<std::size_t>(b)] = 1;
    if (match_b[static_cast<std::size_t>(b)] == -1 ||
        kuhn_augment(match_b[static_cast<std::size_t>(b)], adj, edge_colour,
                     seen, match_b, match_edge)) {
      match_b[static_cast<std::size_t>(b)] = a;
      match_edge[static_cast<std::size_t>(b)] = e;
      return true;
    }
  }
  return false;
}

// Proper r-edge-colouring of an r-regular bipartite graph by repeated
// perfect matchings.
EdgeColouring edge_colour_regular_bipartite(const Graph& h,
                                            const std::vector<int>& side,
                                            int r) {
  std::vector<Arc> edges = h.edges();
  std::vector<int> a_index(static_cast<std::size_t>(h.vertex_count()), -1);
  std::vector<int> a_list;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (side[static_cast<std::size_t>(v)] == 0) {
      a_index[static_cast<std::size_t>(v)] = static_cast<int>(a_list.size());
      a_list.push_back(v);
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(a_list.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int u = edges[e].first;
    int v = edges[e].second;
    if (side[static_cast<std::size_t>(u)] != 0) std::swap(u, v);
    adj[static_cast<std::size_t>(a_index[static_cast<std::size_t>(u)])]
        .emplace_back(v, static_cast<int>(e));
  }

  EdgeColouring out;
  out.colour.assign(edges.size(), 0);
  std::vector<int> match_b(static_cast<std::size_t>(h.vertex_count()));
  std::vector<int> match_edge(static_cast<std::size_t>(h.vertex_count()));
  std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()));
  for (int round = 1; round <= r; ++round) {
    std::fill(match_b.begin(), match_b.end(), -1);
    std::fill(match_edge.begin(), match_edge.end(), -1);
    for (std::size_t ai = 0; ai < a_list.size(); ++ai) {
      std::fill(seen.begin(), seen.end(), 0);
      bool ok = kuhn_augment(static_cast<int>(ai), adj, out.colour, seen,
                             match_b, match_edge);
      require(ok, errc::internal,
              "regular bipartite graph is missing a perfect matching");
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (side[static_cast<std::size_t>(v)] == 1 &&
          match_edge[static_cast<std::size_t>(v)] != -1) {
        out.colour[static_cast<std::size_t>(
            match_edge[static_cast<std::size_t>(v)])] = round;
      }
    }
  }
  for (int c : out.colour)
    require(c != 0, errc::internal, "edge colouring left an edge uncoloured");
  return out;
}

}  // namespace

GraphConstruction compose_freezable(const Graph& g_prev,
                                    const Colouring& frozen, const Graph& h) {
  int r = g_prev.vertex_count();
  require(r >= 1, errc::precondition, "base graph is empty");
  require(static_cast<int>(frozen.size()) == r, errc::precondition,
          "colouring size does not match the base graph");

  int d = g_prev.degree(0);
  for (int v = 0; v < r; ++v)
    require(g_prev.degree(v) == d, errc::precondition,
            "base graph is not regular");

  int classes = d + 1;
  require(r % classes == 0, errc::precondition,
          "number of colours must divide the base vertex count");
  std::vector<std::vector<int>> by_colour(
      static_cast<std::size_t>(classes));
  for (int v = 0; v < r; ++v) {
    int c = frozen[static_cast<std::size_t>(v)];
    require(c >= 1 && c <= classes, errc::precondition,
            "base colouring must use colours 1..d+1");
    by_colour[static_cast<std::size_t>(c - 1)].push_back(v);
  }
  for (const std::vector<int>& cls : by_colour)
    require(static_cast<int>(cls.size()) == r / classes, errc::precondition,
            "base colour classes must have equal sizes");

  Digraph bd_prev = bidirect(g_prev);
  require(is_dicolouring(bd_prev, frozen, classes), errc::precondition,
          "base colouring is not proper");
  require(is_frozen_colouring(bd_prev, frozen, classes), errc::precondition,
          "base colouring is not frozen");

  std::vector<int> side;
  require(bipartition(h, side), errc::precondition,
          "wiring graph is not bipartite");
  for (int v = 0; v < h.vertex_count(); ++v)
    require(h.degree(v) == r, errc::precondition,
            "wiring graph must be regular of degree |V(base)|");

  EdgeColouring ec = edge_colour_regular_bipartite(h, side, r);

  // Attachment order: round-robin across colour classes so any d+1
  // consecutive attachment points have pairwise distinct colours.
  std::vector<int> attach(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    attach[static_cast<std::size_t>(i)] =
        by_colour[static_cast<std::size_t>(i % classes)]
                 [static_cast<std::size_t>(i / classes)];

  std::vector<int> a_of(static_cast<std::size_t>(h.vertex_count()), -1);
  std::vector<int> b_of(static_cast<std::size_t>(h.vertex_count()), -1);
  int a_count = 0;
  int b_count = 0;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (side[static_cast<std::size_t>(v)] == 0)
      a_of[static_cast<std::size_t>(v)] = a_count++;
    else
      b_of[static_cast<std::size_t>(v)] = b_count++;
  }
  require(a_count == b_count, errc::precondition,
          "wiring graph sides have different sizes");

  int per_b = r / classes;
  std::int64_t total = static_cast<std::int64_t>(a_count) * r +
                       static_cast<std::int64_t>(b_count) * per_b;
  require(total <= 2'000'000, errc::precondition, "construction too large");

  Graph out_graph(static_cast<int>(total));
  Colouring out_col(static_cast<std::size_t>(total), 0);
  int abs_base = a_count * r;
  for (int copy = 0; copy < a_count; ++copy) {
    int base = copy * r;
    for (const Arc& e : g_prev.edges())
      out_graph.add_edge(base + e.first, base + e.second);
    for (int v = 0; v < r; ++v)
      out_col[static_cast<std::size_t>(base + v)] =
          frozen[static_cast<std::size_t>(v)];
  }
  for (int i = abs_base; i < static_cast<int>(total); ++i)
    out_col[static_cast<std::size_t>(i)] = classes + 1;

  std::vector<Arc> h_edges = h.edges();
  for (std::size_t e = 0; e < h_edges.size(); ++e) {
    int u = h_edges[e].first;
    int v = h_edges[e].second;
    if (side[static_cast<std::size_t>(u)] != 0) std::swap(u, v);
    int colour = ec.colour[e];
    int copy_vertex = a_of[static_cast<std::size_t>(u)] * r +
                      attach[static_cast<std::size_t>(colour - 1)];
    int absorber = abs_base + b_of[static_cast<std::size_t>(v)] * per_b +
                   (colour - 1) / classes;
    out_graph.add_edge(copy_vertex, absorber);
  }

  GraphConstruction out;
  out.k = classes + 1;

  bool regular = true;
  for (int v = 0; v < out_graph.vertex_count(); ++v)
    regular = regular && out_graph.degree(v) == classes;
  out.certificate.push_back(checked(
      "regular", "output is regular of degree " + std::to_string(classes),
      regular));

  Digraph bd_out = bidirect(out_graph);
  out.certificate.push_back(check_dicolouring(bd_out, out_col, classes + 1));
  out.certificate.push_back(check_frozen(bd_out, out_col, classes + 1));

  std::vector<std::int64_t> class_sizes(
      static_cast<std::size_t>(classes + 1), 0);
  for (int c : out_col) ++class_sizes[static_cast<std::size_t>(c - 1)];
  bool equal = true;
  for (std::int64_t s : class_sizes) equal = equal && s == class_sizes[0];
  out.certificate.push_back(checked(
      "equal_classes", "all output colour classes have the same size",
      equal));

  std::optional<int> g_out = girth(out_graph);
  std::optional<int> g_base = girth(g_prev);
  std::optional<int> g_h = girth(h);
  int floor_girth = std::min(g_base.value_or(1 << 30), g_h.value_or(1 << 30));
  out.certificate.push_back(checked(
      "girth", "output girth at least min of the input girths",
      !g_out.has_value() || *g_out >= floor_girth));

  out.certificate.push_back(note(
      "regularity_shift",
      "output regularity = input regularity + 1 and output colours = input "
      "colours + 1; the alternative off-by-one reading is self-inconsistent "
      "because a frozen (d+1)-colouring needs degree at least d+1"));

  out.graph = std::move(out_graph);
  out.colouring = std::move(out_col);
  return out;
}

}  // namespace dicol
