#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicol {

// Error categories, kept coarse on purpose: the CLI maps them onto exit codes
// (parse/precondition -> 2, budget -> 3, everything else -> 1).
enum class errc {
  parse_error,      // malformed input text
  precondition,     // caller violated an operation contract
  not_oriented,     // operation requires a digon-free digraph
  degree_exceeded,  // operation requires a degree bound the input breaks
  budget_exceeded,  // state or step budget ran out
  internal,         // a proof-backed invariant failed; indicates a bug
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Budget overruns carry the budget that would have been needed, so callers can
// report "rerun with --budget N".
class budget_error : public error {
public:
  budget_error(const std::string& what, std::uint64_t required)
      : error(errc::budget_exceeded, what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

private:
  std::uint64_t required_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace dicol
