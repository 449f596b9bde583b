#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dicol/colouring.hpp"
#include "dicol/digraph.hpp"

namespace dicol {

// The colouring graph has k^n candidate states (or the product of list sizes
// under a list assignment); every operation below refuses to start when that
// exceeds max_states and reports the required budget instead.
struct ExploreLimits {
  std::uint64_t max_states = std::uint64_t{1} << 26;
  int threads = 1;
};

// Counts the valid k-dicolourings, visiting them in ascending state-code
// order (code = sum over v of (colour(v)-1) * k^v). The sink, when set,
// receives every valid colouring.
std::uint64_t enumerate_dicolourings(const Digraph& d, int k, const ExploreLimits& limits = {},
                                     const std::function<void(const Colouring&)>& sink = {});

struct ComponentInfo {
  std::uint64_t size = 0;
  Colouring representative;  // smallest state code in the component
  bool frozen = false;
  std::optional<std::uint64_t> diameter;
};

struct ComponentSummary {
  std::uint64_t total = 0;  // number of valid dicolourings
  std::vector<ComponentInfo> components;
};

ComponentSummary components(const Digraph& d, int k, bool with_diameter = false,
                            const ExploreLimits& limits = {});

// Shortest redicolouring sequence from a to b, or nullopt when unreachable.
// Ties are broken deterministically: breadth-first levels are expanded in
// ascending code order and each state keeps the smallest predecessor code.
// With a list assignment, every intermediate colouring must respect it.
std::optional<Sequence> shortest_path(const Digraph& d, int k, const Colouring& a,
                                      const Colouring& b, const ExploreLimits& limits = {},
                                      const ListAssignment* lists = nullptr);

// Single component? Vacuously true when there is at most one dicolouring.
bool is_mixing(const Digraph& d, int k, const ExploreLimits& limits = {});

// k = 2 only: can a reach the colouring with both colours swapped?
bool mirror_reachable(const Digraph& d, const Colouring& a, const ExploreLimits& limits = {});

// Vertices whose colour is constant across the whole component of a.
std::vector<int> frozen_vertices(const Digraph& d, int k, const Colouring& a,
                                 const ExploreLimits& limits = {});

// First frozen k-dicolouring in code order, if any exists.
std::optional<Colouring> is_freezable(const Digraph& d, int k, const ExploreLimits& limits = {});

}  // namespace dicol
