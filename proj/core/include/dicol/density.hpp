#pragma once

#include <optional>
#include <vector>

#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace dicol {

struct DensityReport {
  // Maximum of 2|A(H)|/|V(H)| over non-empty induced subdigraphs, in lowest
  // terms (2|E(H)|/|V(H)| for graphs).
  Rational mad;
  std::vector<int> witness;
};

// Exact maximum average degree via iterated maximum-density tests: each round
// solves a min-cut feasibility problem for the current candidate density and
// either certifies optimality or jumps to the strictly denser witness.
DensityReport max_average_degree(const Digraph& d);
DensityReport max_average_degree(const Graph& g);

// Exact dichromatic number by backtracking, or nullopt when it exceeds limit.
// Vertices are assigned in degree-descending order, colours tried ascending
// and capped at one above the largest colour used so far.
std::optional<int> dichromatic_number(const Digraph& d, int limit);

}  // namespace dicol
