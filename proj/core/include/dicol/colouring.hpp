#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicol/digraph.hpp"

namespace dicol {

/// Colours are the integers 1..k; vertex v's colour sits at index v.
/// Validity against a digraph is a separate check.
using Colouring = std::vector<int>;

struct Step {
  int v;
  int c;
  friend bool operator==(const Step& a, const Step& b) { return a.v == b.v && a.c == b.c; }
};
using Sequence = std::vector<Step>;

struct ListAssignment {
  int k = 0;
  std::vector<std::vector<int>> lists;  // per vertex, sorted, non-empty
};

/// True iff every colour class induces an acyclic subdigraph and every entry
/// lies in [1,k]. On failure via the witness overload, `witness` holds one
/// monochromatic directed cycle (minimal-rotation order).
bool is_dicolouring(const Digraph& d, const Colouring& a, int k);
bool is_dicolouring(const Digraph& d, const Colouring& a, int k, std::vector<int>& witness);

/// True iff recolouring v to c keeps a valid dicolouring. Requires c != a[v].
/// Only the target colour class is inspected: the recolouring is illegal iff
/// some out-neighbour of v coloured c reaches an in-neighbour of v coloured c
/// inside the class.
bool recolour_legal(const Digraph& d, const Colouring& a, int v, int c, int k);

namespace detail {
// Same legality test without precondition validation; callers guarantee
// that a is a dicolouring, v is in range and c != a[v]. Hot-loop variant
// for the explorer and the sequence builders.
bool recolour_ok(const Digraph& d, const Colouring& a, int v, int c);
}  // namespace detail

/// Witness for an illegal recolouring: the monochromatic cycle that would be
/// created, rotated so the smallest vertex comes first. nullopt when legal.
std::optional<std::vector<int>> recolour_witness(const Digraph& d, const Colouring& a, int v,
                                                 int c, int k);

/// As recolour_witness but the cycle starts at v, which the sequence builders
/// rely on ({v, out-neighbour, ..., in-neighbour} in traversal order).
std::optional<std::vector<int>> recolour_witness_from(const Digraph& d, const Colouring& a,
                                                      int v, int c, int k);

std::vector<int> blocked_vertices(const Digraph& d, const Colouring& a, int k);
std::vector<int> admissible_colours(const Digraph& d, const Colouring& a, int v, int k);
bool is_frozen_colouring(const Digraph& d, const Colouring& a, int k);

bool respects_lists(const Colouring& a, const ListAssignment& l);

struct ValidationResult {
  bool ok = false;
  int failed_step = -1;      // 1-based index of the first failing step
  std::string reason;        // empty when ok
  std::vector<int> witness;  // monochromatic cycle if that was the failure
  Colouring final;           // colouring after the last successful prefix
};

/// Applies steps in order. Every step must change its vertex's colour and
/// every intermediate colouring must be a dicolouring (and respect `l` when
/// given). Never throws on invalid sequences; inspect `ok`.
ValidationResult validate_sequence(const Digraph& d, int k, const Colouring& a0,
                                   const Sequence& s, const ListAssignment* l = nullptr);

// --- file formats -----------------------------------------------------------
//
// Colouring file: n lines "v c", each vertex exactly once. Sequence file:
// lines "v c" applied top to bottom. List file: lines "v c1 c2 ...". All
// 1-based colours; '#' comments allowed.

Colouring parse_colouring(std::istream& is, int n);
Colouring load_colouring(const std::string& path, int n);
void serialize_colouring(const Colouring& a, std::ostream& os);

Sequence parse_sequence(std::istream& is);
Sequence load_sequence(const std::string& path);
void serialize_sequence(const Sequence& s, std::ostream& os);

ListAssignment parse_lists(std::istream& is, int n, int k);
ListAssignment load_lists(const std::string& path, int n, int k);
void serialize_lists(const ListAssignment& l, std::ostream& os);

}  // namespace dicol
