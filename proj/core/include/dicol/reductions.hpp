#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dicol/certificate.hpp"
#include "dicol/colouring.hpp"
#include "dicol/constructions.hpp"
#include "dicol/digraph.hpp"
#include "dicol/explorer.hpp"

namespace dicol {

// Direction of each edge of a Graph, aligned with Graph::edges(): 0 keeps
// the stored (u, v) with u < v as the arc u->v, 1 reverses it.
using Orientation = std::vector<char>;

// Constraint-logic instance: a cubic graph, per-vertex in-degree demands
// in {1, 2}, and two orientations to connect by single-edge reversals.
struct NCLInstance {
  Graph g;
  std::vector<int> phi;
  Orientation orient_a;
  Orientation orient_b;
};

NCLInstance parse_ncl(std::istream& in);
NCLInstance load_ncl(const std::string& path);
void serialize_ncl(const NCLInstance& inst, std::ostream& out);

// True iff every vertex has in-degree at least phi(v) under orient.
bool is_proper_orientation(const Graph& g, const std::vector<int>& phi,
                           const Orientation& orient);

// Breadth-first search over proper orientations, one edge reversed per
// step. Returns the edge indices reversed on a shortest route from
// orient_a to orient_b, or nullopt when unreachable.
std::optional<std::vector<int>> ncl_reachable(const NCLInstance& inst,
                                              const ExploreLimits& limits = {});

// Output of the orientation-to-recolouring reduction. Vertex ids: slot r
// of original vertex i is 3i + r, slots ordered by the other endpoint of
// the corresponding edge; forced gadget vertices and per-edge anchors
// follow. roles[v] describes each vertex ("x i r", "z i t" or "a u v").
struct ListPathInstance {
  Digraph digraph;
  ListAssignment lists;
  Colouring a;
  Colouring b;
  bool planar = false;
  std::vector<std::string> roles;
  std::vector<std::array<int, 3>> vertex_slots;
  std::vector<std::pair<int, int>> edge_slots;
  std::vector<int> edge_anchor;
};

ListPathInstance ncl_to_list_instance(const NCLInstance& inst,
                                      bool planar = false);

// Expands each edge reversal into the two recolouring steps that move the
// corresponding slot vertices; the result is validated against the lists.
Sequence translate_reorienting_to_redicolouring(const NCLInstance& inst,
                                                const ListPathInstance& p,
                                                const std::vector<int>& flips);

// Reads the edge orientations off the slot colours after every step,
// keeping the previous direction while an edge shows colour 2 on both
// slots, and drops steps that change no orientation.
std::vector<int> translate_redicolouring_to_reorienting(
    const NCLInstance& inst, const ListPathInstance& p, const Sequence& seq);

struct ReducedInstance {
  Digraph digraph;
  Colouring a;
  Colouring b;
  int k = 0;
  std::vector<CertEntry> certificate;
};

// Removes the lists by attaching a bidirected K_k to every vertex and a
// digon from v to the gadget vertex of each colour outside L(v).
ReducedInstance list_to_plain(const ListPathInstance& p, int k);

// Replaces each digon [u, v] (u < v) by the arc u->v plus a fresh tower
// with dichromatic number k wired from v into the tower and from the
// tower into u. Both colourings extend by the tower's canonical colouring.
ReducedInstance eliminate_digons(const Digraph& d, int k, const Colouring& a,
                                 const Colouring& b);

// Attaches a fresh copy of planar_freeze_gadget through a triangle at v so
// that v can never leave the given colour. Input must be oriented and a
// must be a 2-dicolouring with a[v] == colour.
DigraphConstruction freeze_vertex_oriented_planar(const Digraph& d,
                                                  const Colouring& a, int v,
                                                  int colour);

}  // namespace dicol
