#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace dicol {

// Key functions for greedy peeling: min(d+,d-), d+, max(d+,d-), (d+ + d-)/2.
enum class DegenMode { MIN, OUT, MAX, AVG };

const char* degen_mode_name(DegenMode mode);
std::optional<DegenMode> degen_mode_from_name(const std::string& name);

struct DegeneracyReport {
  DegenMode mode = DegenMode::MIN;
  Rational value;
  // Elimination order: vertices in the order they were peeled.
  std::vector<int> ordering;
  // Vertex set whose induced subdigraph has every key >= value.
  std::vector<int> witness;
};

// Greedy smallest-key-first peeling, ties broken by lowest vertex index.
// value is the maximum key seen at a removal step; the witness is the
// remaining vertex set at the first step attaining it.
DegeneracyReport degeneracy(const Digraph& d, DegenMode mode);

}  // namespace dicol
