// Command line front end. Every subcommand prints flat key=value lines so
// scripts can grep results without a parser. Exit codes: 0 yes/success,
// 1 no/unreachable/invalid, 2 usage or bad input, 3 budget exceeded.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicol/builders.hpp"
#include "dicol/colouring.hpp"
#include "dicol/constructions.hpp"
#include "dicol/degeneracy.hpp"
#include "dicol/density.hpp"
#include "dicol/digraph.hpp"
#include "dicol/error.hpp"
#include "dicol/explorer.hpp"
#include "dicol/rational.hpp"
#include "dicol/reductions.hpp"

namespace {

using namespace dicol;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  require(out.good(), errc::precondition, "cannot write " + path);
  return out;
}

void write_digraph(const std::string& path, const Digraph& d) {
  std::ofstream out = open_out(path);
  serialize_digraph(d, out);
}

void write_graph(const std::string& path, const Graph& g) {
  std::ofstream out = open_out(path);
  serialize_graph(g, out);
}

void write_colouring(const std::string& path, const Colouring& a) {
  std::ofstream out = open_out(path);
  serialize_colouring(a, out);
}

void write_sequence(const std::string& path, const Sequence& s) {
  std::ofstream out = open_out(path);
  serialize_sequence(s, out);
}

const char* dot_fill(int colour) {
  static const char* palette[] = {"#bdbdbd", "#fbb4ae", "#b3cde3", "#ccebc5",
                                  "#decbe4", "#fed9a6", "#ffffcc", "#e5d8bd"};
  if (colour <= 0) return palette[0];
  return palette[1 + (colour - 1) % 7];
}

void write_dot(const std::string& path, const Digraph& d, const Colouring* col) {
  std::ofstream out = open_out(path);
  out << "digraph d {\n  node [style=filled];\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    int c = col && v < static_cast<int>(col->size())
                ? (*col)[static_cast<std::size_t>(v)]
                : 0;
    out << "  " << v << " [fillcolor=\"" << dot_fill(c) << "\"";
    if (c > 0) out << ", label=\"" << v << ":" << c << "\"";
    out << "];\n";
  }
  for (const Arc& a : d.arcs())
    out << "  " << a.first << " -> " << a.second << ";\n";
  out << "}\n";
}

void write_dot(const std::string& path, const Graph& g, const Colouring* col) {
  std::ofstream out = open_out(path);
  out << "graph g {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    int c = col && v < static_cast<int>(col->size())
                ? (*col)[static_cast<std::size_t>(v)]
                : 0;
    out << "  " << v << " [fillcolor=\"" << dot_fill(c) << "\"";
    if (c > 0) out << ", label=\"" << v << ":" << c << "\"";
    out << "];\n";
  }
  for (const Arc& e : g.edges())
    out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
}

// Prints certificate entries and returns 0 when every checked entry holds.
int report_certificate(const std::vector<CertEntry>& cert) {
  bool ok = true;
  for (const CertEntry& e : cert) {
    std::cout << "cert." << e.name << "="
              << (e.checked ? (e.holds ? "holds" : "fails") : "note") << "\n";
    std::cout << "cert." << e.name << ".detail=" << e.detail << "\n";
    if (e.checked && !e.holds) ok = false;
  }
  std::cout << "certificate=" << (ok ? "ok" : "failed") << "\n";
  return ok ? 0 : 1;
}

struct CommonFlags {
  std::uint64_t budget = ExploreLimits{}.max_states;
  int threads = 1;

  ExploreLimits limits() const {
    ExploreLimits l;
    l.max_states = budget;
    l.threads = threads;
    return l;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--budget", flags.budget, "State budget for exhaustive search");
  cmd->add_option("--threads", flags.threads, "Worker threads for the explorer")
      ->check(CLI::Range(1, 256));
}

int run_analyze(const std::string& path, int chi_limit,
                const std::string& dot) {
  Digraph d = load_digraph(path);
  std::cout << "n=" << d.vertex_count() << "\n";
  std::cout << "m=" << d.arc_count() << "\n";
  std::cout << "digons=" << digons(d).size() << "\n";
  std::cout << "oriented=" << bool_str(is_oriented(d)) << "\n";
  std::cout << "bidirected=" << bool_str(is_bidirected(d)) << "\n";
  std::optional<int> dg = digirth(d);
  std::cout << "digirth=" << (dg ? std::to_string(*dg) : "none") << "\n";
  for (DegenMode mode :
       {DegenMode::MIN, DegenMode::OUT, DegenMode::MAX, DegenMode::AVG}) {
    DegeneracyReport rep = degeneracy(d, mode);
    std::cout << "degeneracy." << degen_mode_name(mode) << "="
              << rep.value.str() << "\n";
    std::cout << "degeneracy." << degen_mode_name(mode)
              << ".witness_size=" << rep.witness.size() << "\n";
  }
  DensityReport density = max_average_degree(d);
  std::cout << "mad=" << density.mad.str() << "\n";
  std::cout << "mad.decimal=" << density.mad.to_double() << "\n";
  std::cout << "mad.witness_size=" << density.witness.size() << "\n";
  if (chi_limit > 0) {
    std::optional<int> chi = dichromatic_number(d, chi_limit);
    std::cout << "chi="
              << (chi ? std::to_string(*chi) : ">" + std::to_string(chi_limit))
              << "\n";
  }
  if (!dot.empty()) write_dot(dot, d, nullptr);
  return 0;
}

int run_explore(const std::string& path, int k, bool diameter,
                const CommonFlags& flags) {
  Digraph d = load_digraph(path);
  ComponentSummary summary = components(d, k, diameter, flags.limits());
  std::cout << "states=" << summary.total << "\n";
  std::cout << "components=" << summary.components.size() << "\n";
  std::cout << "mixing=" << bool_str(summary.components.size() <= 1) << "\n";
  for (std::size_t i = 0; i < summary.components.size(); ++i) {
    const ComponentInfo& c = summary.components[i];
    std::cout << "component." << i << ".size=" << c.size << "\n";
    std::cout << "component." << i << ".frozen=" << bool_str(c.frozen) << "\n";
    std::cout << "component." << i
              << ".representative=" << join(c.representative) << "\n";
    if (c.diameter)
      std::cout << "component." << i << ".diameter=" << *c.diameter << "\n";
  }
  return 0;
}

int run_path(const std::string& path, int k, const std::string& from,
             const std::string& to, std::string method,
             const std::string& lists_path, const std::string& out,
             std::uint64_t steps, const CommonFlags& flags) {
  Digraph d = load_digraph(path);
  Colouring a = load_colouring(from, d.vertex_count());
  Colouring b = load_colouring(to, d.vertex_count());
  require(is_dicolouring(d, a, k), errc::precondition,
          "--from is not a valid dicolouring");
  require(is_dicolouring(d, b, k), errc::precondition,
          "--to is not a valid dicolouring");

  std::optional<ListAssignment> lists;
  if (!lists_path.empty())
    lists = load_lists(lists_path, d.vertex_count(), k);

  if (method == "auto") {
    bool subcubic = is_oriented(d) && k == 2;
    for (int v = 0; v < d.vertex_count() && subcubic; ++v)
      subcubic = d.total_degree(v) <= 3;
    Rational min_degen = degeneracy(d, DegenMode::MIN).value;
    if (lists)
      method = "bfs";
    else if (subcubic)
      method = "subcubic";
    else if (Rational(k) >= min_degen + Rational(2))
      method = "min-degen";
    else if (is_oriented(d) &&
             k >= degeneracy(d, DegenMode::AVG).value.ceil() + 1)
      method = "avg-degen";
    else
      method = "bfs";
  }
  require(!lists || method == "bfs", errc::precondition,
          "lists are only supported by the bfs method");

  std::cout << "method=" << method << "\n";
  std::optional<Sequence> seq;
  if (method == "bfs") {
    seq = shortest_path(d, k, a, b, flags.limits(),
                        lists ? &*lists : nullptr);
  } else {
    BuildLimits bl;
    if (steps) bl.max_steps = steps;
    BuildReport rep;
    if (method == "min-degen")
      rep = build_min_degen(d, k, a, b, bl);
    else if (method == "avg-degen")
      rep = build_avg_degen(d, k, a, b, bl);
    else if (method == "linear")
      rep = build_linear(d, k, a, b);
    else if (method == "subcubic")
      rep = build_subcubic(d, a, b);
    else
      fail(errc::precondition, "unknown method " + method);
    std::cout << "bound=" << rep.bound << "\n";
    if (rep.bound_steps) std::cout << "bound_steps=" << *rep.bound_steps << "\n";
    seq = std::move(rep.sequence);
  }
  std::cout << "found=" << bool_str(seq.has_value()) << "\n";
  if (!seq) return 1;
  std::cout << "length=" << seq->size() << "\n";
  if (!out.empty()) write_sequence(out, *seq);
  return 0;
}

int run_frozen(const std::string& path, const std::string& col_path, int k) {
  Digraph d = load_digraph(path);
  Colouring a = load_colouring(col_path, d.vertex_count());
  if (!is_dicolouring(d, a, k)) {
    std::cout << "valid=false\n";
    return 1;
  }
  std::cout << "valid=true\n";
  std::vector<int> blocked = blocked_vertices(d, a, k);
  bool frozen = static_cast<int>(blocked.size()) == d.vertex_count();
  std::cout << "blocked=" << blocked.size() << "\n";
  std::cout << "frozen=" << bool_str(frozen) << "\n";
  return frozen ? 0 : 1;
}

int run_freezable(const std::string& path, int k, const std::string& out,
                  const CommonFlags& flags) {
  Digraph d = load_digraph(path);
  std::optional<Colouring> witness = is_freezable(d, k, flags.limits());
  std::cout << "freezable=" << bool_str(witness.has_value()) << "\n";
  if (!witness) return 1;
  std::cout << "witness=" << join(*witness) << "\n";
  if (!out.empty()) write_colouring(out, *witness);
  return 0;
}

int run_mirror(const std::string& path, const std::string& col_path,
               const CommonFlags& flags) {
  Digraph d = load_digraph(path);
  Colouring a = load_colouring(col_path, d.vertex_count());
  require(is_dicolouring(d, a, 2), errc::precondition,
          "colouring is not a 2-dicolouring");
  bool ok = mirror_reachable(d, a, flags.limits());
  std::cout << "mirror_reachable=" << bool_str(ok) << "\n";
  return ok ? 0 : 1;
}

int run_partition(const std::string& path, const std::string& out_b,
                  const std::string& out_rest) {
  Digraph d = load_digraph(path);
  ArcPartition part = acyclic_arc_partition(d);
  std::cout << "arcs=" << d.arc_count() << "\n";
  std::cout << "part_b=" << part.b.size() << "\n";
  std::cout << "part_rest=" << part.rest.size() << "\n";
  std::cout << "ordering=" << join(part.ordering) << "\n";
  auto dump = [&](const std::string& path2, const std::vector<Arc>& arcs) {
    Digraph sub(d.vertex_count());
    for (const Arc& a : arcs) sub.add_arc(a.first, a.second);
    write_digraph(path2, sub);
  };
  if (!out_b.empty()) dump(out_b, part.b);
  if (!out_rest.empty()) dump(out_rest, part.rest);
  return 0;
}

int run_lift(const std::string& path, const std::string& from,
             const std::string& seq_path, const std::string& out) {
  Digraph d = load_digraph(path);
  Colouring a = load_colouring(from, d.vertex_count());
  Sequence s = load_sequence(seq_path);
  ArcPartition part = acyclic_arc_partition(d);
  Sequence lifted = lift_proper_sequence(d, part, a, s);
  std::cout << "length=" << lifted.size() << "\n";
  if (!out.empty()) write_sequence(out, lifted);
  return 0;
}

struct GenerateArgs {
  std::string kind;
  int n = 4;
  int k = 2;
  std::string base, base_col, wiring;
  std::string out, col_out, dot;
};

int run_generate(const GenerateArgs& g) {
  auto finish_digraph = [&](const DigraphConstruction& c) {
    std::cout << "kind=" << g.kind << "\n";
    std::cout << "n=" << c.digraph.vertex_count() << "\n";
    std::cout << "m=" << c.digraph.arc_count() << "\n";
    std::cout << "k=" << c.k << "\n";
    if (!g.out.empty()) write_digraph(g.out, c.digraph);
    if (!g.col_out.empty()) write_colouring(g.col_out, c.colouring);
    if (!g.dot.empty()) write_dot(g.dot, c.digraph, &c.colouring);
    return report_certificate(c.certificate);
  };
  auto finish_graph = [&](const GraphConstruction& c) {
    std::cout << "kind=" << g.kind << "\n";
    std::cout << "n=" << c.graph.vertex_count() << "\n";
    std::cout << "m=" << c.graph.edge_count() << "\n";
    std::cout << "k=" << c.k << "\n";
    if (!g.out.empty()) write_graph(g.out, c.graph);
    if (!g.col_out.empty()) write_colouring(g.col_out, c.colouring);
    if (!g.dot.empty()) write_dot(g.dot, c.graph, &c.colouring);
    return report_certificate(c.certificate);
  };

  if (g.kind == "frozen4reg") return finish_digraph(frozen_4regular());
  if (g.kind == "fpath") return finish_digraph(freezable_path_pair(g.n));
  if (g.kind == "fpath-k") return finish_digraph(freezable_k(g.n, g.k));
  if (g.kind == "btower") return finish_digraph(out_degenerate_tower(g.k));
  if (g.kind == "gtower") return finish_digraph(non_mixing_tower(g.k));
  if (g.kind == "planar-freeze") return finish_digraph(planar_freeze_gadget());
  if (g.kind == "kbipartite") {
    Graph h = complete_bipartite(g.n);
    std::cout << "kind=kbipartite\n";
    std::cout << "n=" << h.vertex_count() << "\n";
    std::cout << "m=" << h.edge_count() << "\n";
    if (!g.out.empty()) write_graph(g.out, h);
    if (!g.dot.empty()) write_dot(g.dot, h, nullptr);
    return 0;
  }
  if (g.kind == "compose") {
    require(!g.base.empty() && !g.base_col.empty() && !g.wiring.empty(),
            errc::precondition,
            "compose needs --base, --base-col and --wiring");
    Graph base = load_graph(g.base);
    Colouring col = load_colouring(g.base_col, base.vertex_count());
    Graph wiring = load_graph(g.wiring);
    return finish_graph(compose_freezable(base, col, wiring));
  }
  fail(errc::precondition, "unknown construction " + g.kind);
}

int run_ncl_check(const std::string& path) {
  NCLInstance inst = load_ncl(path);
  std::cout << "n=" << inst.g.vertex_count() << "\n";
  std::cout << "m=" << inst.g.edge_count() << "\n";
  bool pa = is_proper_orientation(inst.g, inst.phi, inst.orient_a);
  bool pb = is_proper_orientation(inst.g, inst.phi, inst.orient_b);
  std::cout << "properA=" << bool_str(pa) << "\n";
  std::cout << "properB=" << bool_str(pb) << "\n";
  return pa && pb ? 0 : 1;
}

int run_ncl_solve(const std::string& path, const CommonFlags& flags) {
  NCLInstance inst = load_ncl(path);
  std::optional<std::vector<int>> flips = ncl_reachable(inst, flags.limits());
  std::cout << "reachable=" << bool_str(flips.has_value()) << "\n";
  if (!flips) return 1;
  std::cout << "flips=" << join(*flips) << "\n";
  std::cout << "length=" << flips->size() << "\n";
  return 0;
}

struct ReduceOuts {
  std::string digraph, lists, a, b, col, roles;
};

int run_ncl2list(const std::string& path, bool planar, const ReduceOuts& o) {
  NCLInstance inst = load_ncl(path);
  ListPathInstance p = ncl_to_list_instance(inst, planar);
  std::cout << "n=" << p.digraph.vertex_count() << "\n";
  std::cout << "m=" << p.digraph.arc_count() << "\n";
  std::cout << "k=" << p.lists.k << "\n";
  std::cout << "planar=" << bool_str(p.planar) << "\n";
  int forced = 0;
  for (const auto& list : p.lists.lists)
    if (list.size() == 1) ++forced;
  std::cout << "forced=" << forced << "\n";
  if (!o.digraph.empty()) write_digraph(o.digraph, p.digraph);
  if (!o.lists.empty()) {
    std::ofstream out = open_out(o.lists);
    serialize_lists(p.lists, out);
  }
  if (!o.a.empty()) write_colouring(o.a, p.a);
  if (!o.b.empty()) write_colouring(o.b, p.b);
  if (!o.roles.empty()) {
    std::ofstream out = open_out(o.roles);
    for (std::size_t v = 0; v < p.roles.size(); ++v)
      out << v << " " << p.roles[v] << "\n";
  }
  return 0;
}

int run_list2plain(const std::string& digraph, const std::string& lists_path,
                   const std::string& from, const std::string& to, int k,
                   bool planar, const ReduceOuts& o) {
  ListPathInstance p;
  p.digraph = load_digraph(digraph);
  p.lists = load_lists(lists_path, p.digraph.vertex_count(), k);
  p.a = load_colouring(from, p.digraph.vertex_count());
  p.b = load_colouring(to, p.digraph.vertex_count());
  p.planar = planar;
  ReducedInstance red = list_to_plain(p, k);
  std::cout << "n=" << red.digraph.vertex_count() << "\n";
  std::cout << "m=" << red.digraph.arc_count() << "\n";
  std::cout << "k=" << red.k << "\n";
  if (!o.digraph.empty()) write_digraph(o.digraph, red.digraph);
  if (!o.a.empty()) write_colouring(o.a, red.a);
  if (!o.b.empty()) write_colouring(o.b, red.b);
  return report_certificate(red.certificate);
}

int run_orient(const std::string& digraph, const std::string& from,
               const std::string& to, int k, const ReduceOuts& o) {
  Digraph d = load_digraph(digraph);
  Colouring a = load_colouring(from, d.vertex_count());
  Colouring b = load_colouring(to, d.vertex_count());
  ReducedInstance red = eliminate_digons(d, k, a, b);
  std::cout << "n=" << red.digraph.vertex_count() << "\n";
  std::cout << "m=" << red.digraph.arc_count() << "\n";
  std::cout << "digons_removed=" << digons(d).size() << "\n";
  std::cout << "oriented=" << bool_str(is_oriented(red.digraph)) << "\n";
  if (!o.digraph.empty()) write_digraph(o.digraph, red.digraph);
  if (!o.a.empty()) write_colouring(o.a, red.a);
  if (!o.b.empty()) write_colouring(o.b, red.b);
  return report_certificate(red.certificate);
}

int run_freeze(const std::string& digraph, const std::string& col_path, int v,
               int colour, const ReduceOuts& o) {
  Digraph d = load_digraph(digraph);
  Colouring a = load_colouring(col_path, d.vertex_count());
  DigraphConstruction res = freeze_vertex_oriented_planar(d, a, v, colour);
  std::cout << "n=" << res.digraph.vertex_count() << "\n";
  std::cout << "m=" << res.digraph.arc_count() << "\n";
  if (!o.digraph.empty()) write_digraph(o.digraph, res.digraph);
  if (!o.col.empty()) write_colouring(o.col, res.colouring);
  return report_certificate(res.certificate);
}

std::vector<int> load_flips(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::vector<int> flips;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    try {
      flips.push_back(std::stoi(token));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad edge index '" + token + "' in " + path);
    }
  }
  return flips;
}

int run_translate(bool forward, const std::string& ncl_path, bool planar,
                  const std::string& in_path, const std::string& out) {
  NCLInstance inst = load_ncl(ncl_path);
  ListPathInstance p = ncl_to_list_instance(inst, planar);
  if (forward) {
    std::vector<int> flips = load_flips(in_path);
    Sequence seq = translate_reorienting_to_redicolouring(inst, p, flips);
    std::cout << "steps=" << seq.size() << "\n";
    if (!out.empty()) write_sequence(out, seq);
  } else {
    Sequence seq = load_sequence(in_path);
    std::vector<int> flips = translate_redicolouring_to_reorienting(inst, p, seq);
    std::cout << "flips=" << join(flips) << "\n";
    std::cout << "length=" << flips.size() << "\n";
    if (!out.empty()) {
      std::ofstream f = open_out(out);
      for (int e : flips) f << e << "\n";
    }
  }
  return 0;
}

int run_check(const std::string& path, int k, const std::string& from,
              const std::string& seq_path, const std::string& lists_path,
              const std::string& to) {
  Digraph d = load_digraph(path);
  Colouring a = load_colouring(from, d.vertex_count());
  Sequence s = load_sequence(seq_path);
  std::optional<ListAssignment> lists;
  if (!lists_path.empty())
    lists = load_lists(lists_path, d.vertex_count(), k);
  ValidationResult vr =
      validate_sequence(d, k, a, s, lists ? &*lists : nullptr);
  std::cout << "valid=" << bool_str(vr.ok) << "\n";
  if (!vr.ok) {
    std::cout << "failed_step=" << vr.failed_step << "\n";
    std::cout << "reason=" << vr.reason << "\n";
    if (!vr.witness.empty())
      std::cout << "witness=" << join(vr.witness) << "\n";
    return 1;
  }
  if (!to.empty()) {
    Colouring b = load_colouring(to, d.vertex_count());
    bool match = vr.final == b;
    std::cout << "end_matches=" << bool_str(match) << "\n";
    if (!match) return 1;
  }
  return 0;
}

int run_random(const std::string& kind, int n, double density,
               std::uint64_t seed, const std::string& out) {
  require(n >= 1, errc::precondition, "need n >= 1");
  require(density >= 0.0 && density <= 1.0, errc::precondition,
          "density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution half(0.5);
  Digraph d(n);
  if (kind == "digraph") {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) d.add_arc(u, v);
  } else if (kind == "oriented") {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) {
          if (half(rng))
            d.add_arc(u, v);
          else
            d.add_arc(v, u);
        }
  } else if (kind == "subcubic") {
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const Arc& e : pairs) {
      if (!coin(rng)) continue;
      if (d.total_degree(e.first) >= 3 || d.total_degree(e.second) >= 3)
        continue;
      if (half(rng))
        d.add_arc(e.first, e.second);
      else
        d.add_arc(e.second, e.first);
    }
  } else {
    fail(errc::precondition, "unknown random kind " + kind);
  }
  std::cout << "n=" << d.vertex_count() << "\n";
  std::cout << "m=" << d.arc_count() << "\n";
  if (!out.empty()) write_digraph(out, d);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph dicolouring reconfiguration toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // analyze
  std::string an_path, an_dot;
  int an_chi = 0;
  auto* analyze = app.add_subcommand("analyze", "Structural report for a digraph");
  analyze->add_option("digraph", an_path)->required();
  analyze->add_option("--chi-limit", an_chi,
                      "Search the dichromatic number up to this bound");
  analyze->add_option("--dot", an_dot, "Write a DOT rendering");
  analyze->callback([&] { rc = run_analyze(an_path, an_chi, an_dot); });

  // explore
  std::string ex_path;
  int ex_k = 2;
  bool ex_diam = false;
  CommonFlags ex_flags;
  auto* explore = app.add_subcommand("explore", "Enumerate the dicolouring graph");
  explore->add_option("digraph", ex_path)->required();
  explore->add_option("-k,--colours", ex_k)->required();
  explore->add_flag("--diameter", ex_diam, "Also compute component diameters");
  add_common(explore, ex_flags);
  explore->callback([&] { rc = run_explore(ex_path, ex_k, ex_diam, ex_flags); });

  // path
  std::string pa_path, pa_from, pa_to, pa_method = "auto", pa_lists, pa_out;
  int pa_k = 2;
  std::uint64_t pa_steps = 0;
  CommonFlags pa_flags;
  auto* pathc = app.add_subcommand("path", "Find a redicolouring sequence");
  pathc->add_option("digraph", pa_path)->required();
  pathc->add_option("-k,--colours", pa_k)->required();
  pathc->add_option("--from", pa_from)->required();
  pathc->add_option("--to", pa_to)->required();
  pathc->add_option("--method", pa_method)
      ->check(CLI::IsMember(
          {"auto", "bfs", "min-degen", "avg-degen", "linear", "subcubic"}));
  pathc->add_option("--lists", pa_lists, "List assignment (bfs only)");
  pathc->add_option("--out", pa_out, "Write the sequence to this file");
  pathc->add_option("--steps", pa_steps, "Step budget for the builders");
  add_common(pathc, pa_flags);
  pathc->callback([&] {
    rc = run_path(pa_path, pa_k, pa_from, pa_to, pa_method, pa_lists, pa_out,
                  pa_steps, pa_flags);
  });

  // frozen
  std::string fr_path, fr_col;
  int fr_k = 2;
  auto* frozen = app.add_subcommand("frozen", "Is the colouring frozen?");
  frozen->add_option("digraph", fr_path)->required();
  frozen->add_option("colouring", fr_col)->required();
  frozen->add_option("-k,--colours", fr_k)->required();
  frozen->callback([&] { rc = run_frozen(fr_path, fr_col, fr_k); });

  // freezable
  std::string fz_path, fz_out;
  int fz_k = 2;
  CommonFlags fz_flags;
  auto* freezable = app.add_subcommand("freezable", "Search for a frozen colouring");
  freezable->add_option("digraph", fz_path)->required();
  freezable->add_option("-k,--colours", fz_k)->required();
  freezable->add_option("--out", fz_out, "Write the witness colouring");
  add_common(freezable, fz_flags);
  freezable->callback([&] { rc = run_freezable(fz_path, fz_k, fz_out, fz_flags); });

  // mirror
  std::string mi_path, mi_col;
  CommonFlags mi_flags;
  auto* mirror = app.add_subcommand("mirror", "Can the 2-colouring reach its flip?");
  mirror->add_option("digraph", mi_path)->required();
  mirror->add_option("colouring", mi_col)->required();
  add_common(mirror, mi_flags);
  mirror->callback([&] { rc = run_mirror(mi_path, mi_col, mi_flags); });

  // partition
  std::string pt_path, pt_out_b, pt_out_rest;
  auto* partition =
      app.add_subcommand("partition", "Split the arcs into two acyclic parts");
  partition->add_option("digraph", pt_path)->required();
  partition->add_option("--out-b", pt_out_b);
  partition->add_option("--out-rest", pt_out_rest);
  partition->callback([&] { rc = run_partition(pt_path, pt_out_b, pt_out_rest); });

  // lift
  std::string li_path, li_from, li_seq, li_out;
  auto* lift = app.add_subcommand(
      "lift", "Replay a proper recolouring sequence on the digraph");
  lift->add_option("digraph", li_path)->required();
  lift->add_option("--from", li_from)->required();
  lift->add_option("--sequence", li_seq)->required();
  lift->add_option("--out", li_out);
  lift->callback([&] { rc = run_lift(li_path, li_from, li_seq, li_out); });

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a named construction");
  generate->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"frozen4reg", "fpath", "fpath-k", "btower", "gtower",
                             "planar-freeze", "kbipartite", "compose"}));
  generate->add_option("-n,--size", gen.n);
  generate->add_option("-k,--parameter", gen.k);
  generate->add_option("--base", gen.base, "Base graph for compose");
  generate->add_option("--base-col", gen.base_col, "Base colouring for compose");
  generate->add_option("--wiring", gen.wiring, "Bipartite wiring graph for compose");
  generate->add_option("--out", gen.out);
  generate->add_option("--col-out", gen.col_out);
  generate->add_option("--dot", gen.dot);
  generate->callback([&] { rc = run_generate(gen); });

  // ncl
  auto* ncl = app.add_subcommand("ncl", "Constraint-logic instances");
  ncl->require_subcommand(1);
  std::string ncl_path;
  CommonFlags ncl_flags;
  auto* ncl_check = ncl->add_subcommand("check", "Validate an instance file");
  ncl_check->add_option("file", ncl_path)->required();
  ncl_check->callback([&] { rc = run_ncl_check(ncl_path); });
  auto* ncl_solve = ncl->add_subcommand("solve", "Search a reorienting sequence");
  ncl_solve->add_option("file", ncl_path)->required();
  add_common(ncl_solve, ncl_flags);
  ncl_solve->callback([&] { rc = run_ncl_solve(ncl_path, ncl_flags); });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Reduction pipeline");
  reduce->require_subcommand(1);
  ReduceOuts red_out;
  std::string red_in, red_lists, red_from, red_to;
  bool red_planar = false;
  int red_k = 2, red_v = 0, red_c = 2;

  auto* ncl2list = reduce->add_subcommand(
      "ncl2list", "Orientation instance to list-redicolouring instance");
  ncl2list->add_option("file", red_in)->required();
  ncl2list->add_flag("--planar", red_planar, "Use the planar vertex gadgets");
  ncl2list->add_option("--out-digraph", red_out.digraph);
  ncl2list->add_option("--out-lists", red_out.lists);
  ncl2list->add_option("--out-a", red_out.a);
  ncl2list->add_option("--out-b", red_out.b);
  ncl2list->add_option("--out-roles", red_out.roles);
  ncl2list->callback([&] { rc = run_ncl2list(red_in, red_planar, red_out); });

  auto* list2plain =
      reduce->add_subcommand("list2plain", "Replace colour lists by gadgets");
  list2plain->add_option("--digraph", red_in)->required();
  list2plain->add_option("--lists", red_lists)->required();
  list2plain->add_option("--from", red_from)->required();
  list2plain->add_option("--to", red_to)->required();
  list2plain->add_option("-k,--colours", red_k)->required();
  list2plain->add_flag("--planar", red_planar,
                       "Input uses the planar gadget layout");
  list2plain->add_option("--out-digraph", red_out.digraph);
  list2plain->add_option("--out-a", red_out.a);
  list2plain->add_option("--out-b", red_out.b);
  list2plain->callback([&] {
    rc = run_list2plain(red_in, red_lists, red_from, red_to, red_k, red_planar,
                        red_out);
  });

  auto* orient = reduce->add_subcommand("orient", "Eliminate digons");
  orient->add_option("--digraph", red_in)->required();
  orient->add_option("--from", red_from)->required();
  orient->add_option("--to", red_to)->required();
  orient->add_option("-k,--colours", red_k)->required();
  orient->add_option("--out-digraph", red_out.digraph);
  orient->add_option("--out-a", red_out.a);
  orient->add_option("--out-b", red_out.b);
  orient->callback(
      [&] { rc = run_orient(red_in, red_from, red_to, red_k, red_out); });

  auto* freeze = reduce->add_subcommand("freeze", "Pin one vertex's colour");
  freeze->add_option("--digraph", red_in)->required();
  freeze->add_option("--col", red_lists)->required();
  freeze->add_option("-v,--vertex", red_v)->required();
  freeze->add_option("-c,--colour", red_c)->required();
  freeze->add_option("--out-digraph", red_out.digraph);
  freeze->add_option("--out-col", red_out.col);
  freeze->callback(
      [&] { rc = run_freeze(red_in, red_lists, red_v, red_c, red_out); });

  // translate
  auto* translate = app.add_subcommand("translate", "Move between the two sides");
  translate->require_subcommand(1);
  std::string tr_ncl, tr_in, tr_out;
  bool tr_planar = false;
  auto* fwd = translate->add_subcommand("fwd", "Edge flips to recolouring steps");
  fwd->add_option("file", tr_ncl)->required();
  fwd->add_option("--flips", tr_in)->required();
  fwd->add_flag("--planar", tr_planar);
  fwd->add_option("--out", tr_out);
  fwd->callback([&] { rc = run_translate(true, tr_ncl, tr_planar, tr_in, tr_out); });
  auto* bwd = translate->add_subcommand("bwd", "Recolouring steps to edge flips");
  bwd->add_option("file", tr_ncl)->required();
  bwd->add_option("--seq", tr_in)->required();
  bwd->add_flag("--planar", tr_planar);
  bwd->add_option("--out", tr_out);
  bwd->callback([&] { rc = run_translate(false, tr_ncl, tr_planar, tr_in, tr_out); });

  // check
  std::string ch_path, ch_from, ch_seq, ch_lists, ch_to;
  int ch_k = 2;
  auto* checkc = app.add_subcommand("check", "Validate a recolouring sequence");
  checkc->add_option("digraph", ch_path)->required();
  checkc->add_option("-k,--colours", ch_k)->required();
  checkc->add_option("--from", ch_from)->required();
  checkc->add_option("--sequence", ch_seq)->required();
  checkc->add_option("--lists", ch_lists);
  checkc->add_option("--to", ch_to, "Also require the sequence to end here");
  checkc->callback(
      [&] { rc = run_check(ch_path, ch_k, ch_from, ch_seq, ch_lists, ch_to); });

  // random
  std::string rd_kind, rd_out;
  int rd_n = 6;
  double rd_density = 0.3;
  std::uint64_t rd_seed = 1;
  auto* random = app.add_subcommand("random", "Sample a test digraph");
  random->add_option("kind", rd_kind)
      ->required()
      ->check(CLI::IsMember({"digraph", "oriented", "subcubic"}));
  random->add_option("-n,--size", rd_n)->required();
  random->add_option("--density", rd_density);
  random->add_option("--seed", rd_seed);
  random->add_option("--out", rd_out);
  random->callback(
      [&] { rc = run_random(rd_kind, rd_n, rd_density, rd_seed, rd_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::parse_error:
      case errc::precondition:
        return 2;
      default:
        return 1;
    }
  }
  return rc;
}
