#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittray/ring.hpp"

namespace wittray {

/// Sparse monomial: sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Multivariate polynomial with rational coefficients. Used to derive the
/// universal Witt polynomials, whose coefficients must end up integral.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(std::uint32_t var);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integral() const;
  std::uint32_t max_variable() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  /// Evaluates at ring values; `values[v]` is the value of variable v.
  /// Coefficients must be integral (they are mapped through Z -> ring).
  Elem evaluate(const CoefficientRing& ring, std::span<const Elem> values) const;

  /// Human readable form using `namer(var)` for variable names.
  template <class Namer>
  std::string to_string(Namer namer) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

template <class Namer>
std::string MultiPoly::to_string(Namer namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const bool unit = (c == 1) && !mono.empty();
    if (!unit) out += c.get_str();
    bool first_factor = true;
    for (const auto& [var, exp] : mono) {
      if (!unit || !first_factor) out += "*";
      first_factor = false;
      out += namer(var);
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

}  // namespace wittray
