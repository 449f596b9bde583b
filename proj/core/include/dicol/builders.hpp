#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicol/colouring.hpp"
#include "dicol/digraph.hpp"

namespace dicol {

// The recursive builders have no polynomial length guarantee, so they run
// under a step budget and report how far they got when it runs out.
struct BuildLimits {
  std::uint64_t max_steps = std::uint64_t{1} << 20;
};

struct BuildReport {
  Sequence sequence;
  std::vector<std::uint64_t> recolour_counts;  // per vertex
  std::string bound;                           // instantiated bound, human readable
  std::optional<std::uint64_t> bound_steps;    // numeric bound when one is guaranteed
};

// Peel-and-replay scheme: remove a vertex v with min(d+,d-) small, transform
// the rest recursively, and patch v out of the way whenever a replayed step
// collides with it. Needs k >= min-degeneracy + 2.
BuildReport build_min_degen(const Digraph& d, int k, const Colouring& a, const Colouring& b,
                            const BuildLimits& limits = {});

// Variant for oriented graphs peeling by total degree; needs
// k >= ceil(avg-degeneracy) + 1. Handles the tight d+ = d- = k-1 case by
// dodging the colours on the side where the conflict sits.
BuildReport build_avg_degen(const Digraph& d, int k, const Colouring& a, const Colouring& b,
                            const BuildLimits& limits = {});

// Linear-length scheme: needs k >= 2*min-degeneracy + 2 and returns a
// sequence of length <= (min-degeneracy+1)*n in which every vertex moves at
// most min-degeneracy+1 times. The peeled vertex picks colours that stay
// clear of the next min-degeneracy+1 planned moves of its chosen side.
BuildReport build_linear(const Digraph& d, int k, const Colouring& a, const Colouring& b);

// k = 2, oriented, total degree <= 3: length <= 2 * |{v : a(v) != b(v)}|.
// Each round fixes the lowest mismatched vertex directly, via a cycle vertex
// wanting the opposite colour, or with a four-step swap through a helper.
BuildReport build_subcubic(const Digraph& d, const Colouring& a, const Colouring& b);

struct ArcPartition {
  std::vector<Arc> b;       // arcs assigned to the first acyclic part
  std::vector<Arc> rest;    // the complement, also acyclic
  std::vector<int> ordering;  // min-degeneracy elimination order used
};

// Splits the arc set into two acyclic parts along a min-degeneracy ordering:
// each vertex contributes either all its arcs towards later vertices or all
// arcs from later vertices, whichever side has at most min-degeneracy arcs.
ArcPartition acyclic_arc_partition(const Digraph& d);

// Checks that s is a proper-colouring walk on the underlying graph of (V,B)
// and that it is simultaneously a valid redicolouring sequence on d (which
// the partition guarantees: every directed cycle of d crosses a B arc).
// Returns s unchanged.
Sequence lift_proper_sequence(const Digraph& d, const ArcPartition& p, const Colouring& a,
                              const Sequence& s);

}  // namespace dicol
