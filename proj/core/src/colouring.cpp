#include "dicol/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dicol {

namespace {

void check_colouring_shape(const Digraph& d, const Colouring& a, int k) {
  if (static_cast<int>(a.size()) != d.vertex_count())
    fail(errc::precondition, "colouring length " + std::to_string(a.size()) +
                                 " does not match vertex count " +
                                 std::to_string(d.vertex_count()));
  if (k < 1) fail(errc::precondition, "colour budget must be at least 1");
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] < 1 || a[v] > k)
      fail(errc::precondition, "vertex " + std::to_string(v) + " has colour " +
                                   std::to_string(a[v]) + " outside [1," + std::to_string(k) +
                                   "]");
}

std::vector<int> rotate_min_first(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

// Reusable search buffers; recolour_legal runs millions of times inside the
// explorer, so per-call allocation is worth avoiding.
struct Scratch {
  std::vector<int> stamp;
  std::vector<int> parent;
  std::vector<int> queue;
  int epoch = 0;

  void reset(int n) {
    if (static_cast<int>(stamp.size()) < n) {
      stamp.assign(n, 0);
      parent.assign(n, -1);
      epoch = 0;
    }
    ++epoch;
    queue.clear();
  }
};

thread_local Scratch scratch;

// Core of the legality check: BFS inside colour class c from the
// c-coloured out-neighbours of v, looking for a c-coloured in-neighbour of v.
// Returns the cycle {v, ...path...} that recolouring v to c would close, or
// nullopt when the recolouring is legal.
std::optional<std::vector<int>> closing_cycle(const Digraph& d, const Colouring& a, int v,
                                              int c) {
  Scratch& s = scratch;
  s.reset(d.vertex_count());
  for (int w : d.out(v)) {
    if (a[w] == c) {
      s.stamp[w] = s.epoch;
      s.parent[w] = -1;
      s.queue.push_back(w);
    }
  }
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    int w = s.queue[head];
    if (d.has_arc(w, v)) {
      std::vector<int> cycle;
      for (int x = w; x != -1; x = s.parent[x]) cycle.push_back(x);
      cycle.push_back(v);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
    for (int x : d.out(w)) {
      if (a[x] == c && s.stamp[x] != s.epoch) {
        s.stamp[x] = s.epoch;
        s.parent[x] = w;
        s.queue.push_back(x);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_dicolouring(const Digraph& d, const Colouring& a, int k) {
  std::vector<int> ignored;
  return is_dicolouring(d, a, k, ignored);
}

bool is_dicolouring(const Digraph& d, const Colouring& a, int k, std::vector<int>& witness) {
  check_colouring_shape(d, a, k);
  witness.clear();
  int n = d.vertex_count();
  // Iterative DFS per colour class with an explicit stack; a back edge inside
  // the class yields the witness cycle.
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<int> via(n, -1);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    int c = a[root];
    stack.clear();
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      const auto& next = d.out(v);
      bool descended = false;
      while (idx < next.size()) {
        int w = next[idx++];
        if (a[w] != c) continue;
        if (state[w] == 1) {
          // Cycle: walk the stack back from v to w.
          witness.push_back(w);
          for (int x = v; x != w; x = via[x]) witness.push_back(x);
          std::reverse(witness.begin(), witness.end());
          witness = rotate_min_first(witness);
          return false;
        }
        if (state[w] == 0) {
          state[w] = 1;
          via[w] = v;
          stack.emplace_back(w, 0);
          descended = true;
          break;
        }
      }
      if (!descended && idx >= next.size()) {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

namespace detail {

bool recolour_ok(const Digraph& d, const Colouring& a, int v, int c) {
  return !closing_cycle(d, a, v, c).has_value();
}

}  // namespace detail

bool recolour_legal(const Digraph& d, const Colouring& a, int v, int c, int k) {
  check_colouring_shape(d, a, k);
  require(v >= 0 && v < d.vertex_count(), errc::precondition, "vertex out of range");
  require(c >= 1 && c <= k, errc::precondition, "colour out of range");
  require(c != a[v], errc::precondition,
          "recolouring vertex " + std::to_string(v) + " to its current colour " +
              std::to_string(c) + " is not a move");
  return !closing_cycle(d, a, v, c).has_value();
}

std::optional<std::vector<int>> recolour_witness(const Digraph& d, const Colouring& a, int v,
                                                 int c, int k) {
  auto cycle = recolour_witness_from(d, a, v, c, k);
  if (!cycle) return std::nullopt;
  return rotate_min_first(*cycle);
}

std::optional<std::vector<int>> recolour_witness_from(const Digraph& d, const Colouring& a,
                                                      int v, int c, int k) {
  check_colouring_shape(d, a, k);
  require(v >= 0 && v < d.vertex_count(), errc::precondition, "vertex out of range");
  require(c >= 1 && c <= k, errc::precondition, "colour out of range");
  require(c != a[v], errc::precondition, "witness requested for a non-move");
  return closing_cycle(d, a, v, c);
}

std::vector<int> blocked_vertices(const Digraph& d, const Colouring& a, int k) {
  check_colouring_shape(d, a, k);
  std::vector<int> blocked;
  for (int v = 0; v < d.vertex_count(); ++v) {
    bool stuck = true;
    for (int c = 1; c <= k && stuck; ++c)
      if (c != a[v] && !closing_cycle(d, a, v, c)) stuck = false;
    if (stuck) blocked.push_back(v);
  }
  return blocked;
}

std::vector<int> admissible_colours(const Digraph& d, const Colouring& a, int v, int k) {
  check_colouring_shape(d, a, k);
  require(v >= 0 && v < d.vertex_count(), errc::precondition, "vertex out of range");
  std::vector<int> result;
  for (int c = 1; c <= k; ++c)
    if (c == a[v] || !closing_cycle(d, a, v, c)) result.push_back(c);
  return result;
}

bool is_frozen_colouring(const Digraph& d, const Colouring& a, int k) {
  check_colouring_shape(d, a, k);
  for (int v = 0; v < d.vertex_count(); ++v)
    for (int c = 1; c <= k; ++c)
      if (c != a[v] && !closing_cycle(d, a, v, c)) return false;
  return true;
}

bool respects_lists(const Colouring& a, const ListAssignment& l) {
  require(a.size() == l.lists.size(), errc::precondition,
          "colouring and list assignment sizes differ");
  for (std::size_t v = 0; v < a.size(); ++v)
    if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), a[v])) return false;
  return true;
}

ValidationResult validate_sequence(const Digraph& d, int k, const Colouring& a0,
                                   const Sequence& s, const ListAssignment* l) {
  check_colouring_shape(d, a0, k);
  ValidationResult r;
  r.final = a0;
  std::vector<int> witness;
  if (!is_dicolouring(d, a0, k, witness)) {
    r.failed_step = 0;
    r.reason = "initial colouring is not a dicolouring";
    r.witness = witness;
    return r;
  }
  if (l && !respects_lists(a0, *l)) {
    r.failed_step = 0;
    r.reason = "initial colouring violates the list assignment";
    return r;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    int step_no = static_cast<int>(i) + 1;
    const Step& st = s[i];
    if (st.v < 0 || st.v >= d.vertex_count()) {
      r.failed_step = step_no;
      r.reason = "vertex " + std::to_string(st.v) + " out of range";
      return r;
    }
    if (st.c < 1 || st.c > k) {
      r.failed_step = step_no;
      r.reason = "colour " + std::to_string(st.c) + " outside [1," + std::to_string(k) + "]";
      return r;
    }
    if (st.c == r.final[st.v]) {
      r.failed_step = step_no;
      r.reason = "step recolours vertex " + std::to_string(st.v) + " to its current colour";
      return r;
    }
    if (l && !std::binary_search(l->lists[st.v].begin(), l->lists[st.v].end(), st.c)) {
      r.failed_step = step_no;
      r.reason = "colour " + std::to_string(st.c) + " not in the list of vertex " +
                 std::to_string(st.v);
      return r;
    }
    if (auto cycle = closing_cycle(d, r.final, st.v, st.c)) {
      r.failed_step = step_no;
      r.reason = "monochromatic cycle on colour " + std::to_string(st.c);
      r.witness = rotate_min_first(*cycle);
      return r;
    }
    r.final[st.v] = st.c;
  }
  r.ok = true;
  return r;
}

// --- file formats -----------------------------------------------------------

namespace {

struct LineReader {
  std::istream& is;
  int line_no = 0;

  bool next(std::string& line) {
    while (std::getline(is, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail_at(const std::string& what) {
    fail(errc::parse_error, what + " at line " + std::to_string(line_no));
  }
};

}  // namespace

Colouring parse_colouring(std::istream& is, int n) {
  LineReader reader{is};
  Colouring a(n, 0);
  std::string line;
  int seen = 0;
  while (reader.next(line)) {
    std::istringstream ss(line);
    int v = 0, c = 0;
    std::string extra;
    if (!(ss >> v >> c) || (ss >> extra)) reader.fail_at("malformed colouring line");
    if (v < 0 || v >= n) reader.fail_at("vertex " + std::to_string(v) + " out of range");
    if (c < 1) reader.fail_at("colours are 1-based");
    if (a[v] != 0) reader.fail_at("vertex " + std::to_string(v) + " coloured twice");
    a[v] = c;
    ++seen;
  }
  require(seen == n, errc::parse_error,
          "colouring file covers " + std::to_string(seen) + " of " + std::to_string(n) +
              " vertices");
  return a;
}

Colouring load_colouring(const std::string& path, int n) {
  std::ifstream f(path);
  require(f.good(), errc::parse_error, "cannot open colouring file: " + path);
  return parse_colouring(f, n);
}

void serialize_colouring(const Colouring& a, std::ostream& os) {
  for (std::size_t v = 0; v < a.size(); ++v) os << v << ' ' << a[v] << '\n';
}

Sequence parse_sequence(std::istream& is) {
  LineReader reader{is};
  Sequence s;
  std::string line;
  while (reader.next(line)) {
    std::istringstream ss(line);
    int v = 0, c = 0;
    std::string extra;
    if (!(ss >> v >> c) || (ss >> extra)) reader.fail_at("malformed sequence line");
    if (v < 0) reader.fail_at("negative vertex");
    if (c < 1) reader.fail_at("colours are 1-based");
    s.push_back({v, c});
  }
  return s;
}

Sequence load_sequence(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), errc::parse_error, "cannot open sequence file: " + path);
  return parse_sequence(f);
}

void serialize_sequence(const Sequence& s, std::ostream& os) {
  for (const Step& st : s) os << st.v << ' ' << st.c << '\n';
}

ListAssignment parse_lists(std::istream& is, int n, int k) {
  LineReader reader{is};
  ListAssignment l;
  l.k = k;
  l.lists.assign(n, {});
  std::vector<bool> seen(n, false);
  std::string line;
  while (reader.next(line)) {
    std::istringstream ss(line);
    int v = 0;
    if (!(ss >> v)) reader.fail_at("malformed list line");
    if (v < 0 || v >= n) reader.fail_at("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) reader.fail_at("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    int c = 0;
    while (ss >> c) {
      if (c < 1 || c > k) reader.fail_at("colour " + std::to_string(c) + " outside [1,k]");
      l.lists[v].push_back(c);
    }
    if (!ss.eof()) reader.fail_at("malformed list line");
    if (l.lists[v].empty()) reader.fail_at("empty list for vertex " + std::to_string(v));
    std::sort(l.lists[v].begin(), l.lists[v].end());
    l.lists[v].erase(std::unique(l.lists[v].begin(), l.lists[v].end()), l.lists[v].end());
  }
  for (int v = 0; v < n; ++v)
    require(seen[v], errc::parse_error, "vertex " + std::to_string(v) + " missing a list");
  return l;
}

ListAssignment load_lists(const std::string& path, int n, int k) {
  std::ifstream f(path);
  require(f.good(), errc::parse_error, "cannot open list file: " + path);
  return parse_lists(f, n, k);
}

void serialize_lists(const ListAssignment& l, std::ostream& os) {
  for (std::size_t v = 0; v < l.lists.size(); ++v) {
    os << v;
    for (int c : l.lists[v]) os << ' ' << c;
    os << '\n';
  }
}

}  // namespace dicol
