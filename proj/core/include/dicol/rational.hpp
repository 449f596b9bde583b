#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "dicol/error.hpp"

namespace dicol {

// Exact rational with 64-bit numerator/denominator, always normalised
// (gcd 1, denominator positive). Large enough for every density and
// degeneracy value this library produces: numerators stay below n^3.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalise(); }

  void normalise() {
    require(den != 0, errc::precondition, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Smallest integer >= value.
  std::int64_t ceil() const {
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
  }
  std::int64_t floor() const {
    if (num >= 0) return num / den;
    return -(((-num) + den - 1) / den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num) + "/1";
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num != 0, errc::precondition, "rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace dicol
