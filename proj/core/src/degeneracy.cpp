#include "dicol/degeneracy.hpp"

#include <algorithm>
#include <limits>

namespace dicol {

const char* degen_mode_name(DegenMode mode) {
  switch (mode) {
    case DegenMode::MIN: return "min";
    case DegenMode::OUT: return "out";
    case DegenMode::MAX: return "max";
    case DegenMode::AVG: return "avg";
  }
  return "?";
}

std::optional<DegenMode> degen_mode_from_name(const std::string& name) {
  if (name == "min") return DegenMode::MIN;
  if (name == "out") return DegenMode::OUT;
  if (name == "max") return DegenMode::MAX;
  if (name == "avg") return DegenMode::AVG;
  return std::nullopt;
}

namespace {

// Keys doubled so the half-integral AVG mode stays in integers.
int doubled_key(DegenMode mode, int dout, int din) {
  switch (mode) {
    case DegenMode::MIN: return 2 * std::min(dout, din);
    case DegenMode::OUT: return 2 * dout;
    case DegenMode::MAX: return 2 * std::max(dout, din);
    case DegenMode::AVG: return dout + din;
  }
  return 0;
}

}  // namespace

DegeneracyReport degeneracy(const Digraph& d, DegenMode mode) {
  int n = d.vertex_count();
  require(n >= 1, errc::precondition, "degeneracy needs a non-empty digraph");

  std::vector<int> dout(n), din(n);
  for (int v = 0; v < n; ++v) {
    dout[v] = d.out_degree(v);
    din[v] = d.in_degree(v);
  }
  std::vector<char> alive(n, 1);

  DegeneracyReport r;
  r.mode = mode;
  r.ordering.reserve(n);
  int best = -1;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_key = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int key = doubled_key(mode, dout[v], din[v]);
      if (key < pick_key) {
        pick_key = key;
        pick = v;
      }
    }
    if (pick_key > best) {
      best = pick_key;
      r.witness.clear();
      for (int v = 0; v < n; ++v)
        if (alive[v]) r.witness.push_back(v);
    }
    alive[pick] = 0;
    r.ordering.push_back(pick);
    for (int w : d.out(pick))
      if (alive[w]) --din[w];
    for (int w : d.in(pick))
      if (alive[w]) --dout[w];
  }
  r.value = Rational(best, 2);
  return r;
}

}  // namespace dicol
