#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wittray {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of a CoefficientRing. Scalars use at most one coefficient;
/// polynomial elements store coefficients from low to high degree.
/// The zero element has no coefficients. Only the owning ring may build
/// normalized elements; equality is structural on normalized values.
class Elem {
 public:
  Elem() = default;

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  friend bool operator==(const Elem&, const Elem&) = default;

 private:
  friend class CoefficientRing;
  explicit Elem(std::vector<Rational> c) : coeffs_(std::move(c)) {}
  std::vector<Rational> coeffs_;
};

enum class RingKind { Integers, Rationals, PrimeField, Polynomial };

/// Exact commutative coefficient ring: Z, Q, Z/p, or a univariate
/// polynomial ring over one of these, optionally modulo a monic polynomial
/// (e.g. Q[y]/(y^2)).
class CoefficientRing {
 public:
  static CoefficientRing integers();
  static CoefficientRing rationals();
  static CoefficientRing prime_field(std::uint64_t p);
  /// `base` must be a scalar ring. `modulus`, when nonempty, lists the
  /// coefficients (low to high) of a monic polynomial of degree >= 1.
  static CoefficientRing polynomial(const CoefficientRing& base,
                                    std::vector<Rational> modulus = {},
                                    std::string variable = "y");

  RingKind kind() const noexcept { return kind_; }
  /// Kind of the scalar coefficients (equals kind() for scalar rings).
  RingKind scalar_kind() const noexcept { return scalar_kind_; }
  std::uint64_t prime() const noexcept { return prime_; }
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }
  const std::string& variable() const noexcept { return variable_; }
  bool is_field() const noexcept;
  bool contains_rationals() const noexcept { return scalar_kind_ == RingKind::Rationals; }
  bool is_torsion_free() const noexcept { return scalar_kind_ != RingKind::PrimeField; }
  CoefficientRing scalar_ring() const;

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem from_integer(const Integer& n) const;
  Elem from_rational(const Rational& q) const;  // throws if not representable
  Elem variable_element() const;                // polynomial rings only
  Elem from_coefficients(std::vector<Rational> coeffs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned long e) const;
  Elem scale(const Elem& a, const Integer& n) const;
  /// a / n when the quotient exists (and is unique) in the ring.
  std::optional<Elem> divide_exact(const Elem& a, const Integer& n) const;
  /// Multiplicative inverse in a field; throws otherwise.
  Elem inverse(const Elem& a) const;

  /// Ring homomorphism from `source`: the canonical map Z -> anything,
  /// Z/Q -> Z/p (reduction), scalar -> polynomial (inclusion), and the
  /// coefficientwise extension of these to polynomial rings.
  Elem convert(const CoefficientRing& source, const Elem& a) const;

  std::string to_string(const Elem& a) const;
  /// Parses a scalar "n", "a/b" (rationals), or a polynomial written as a
  /// coefficient list via from_coefficients.
  Elem parse_scalar(const std::string& text) const;

  std::string describe() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing() = default;
  Rational normalize_scalar(const Rational& c) const;
  Elem normalize(std::vector<Rational> c) const;

  RingKind kind_ = RingKind::Integers;
  RingKind scalar_kind_ = RingKind::Integers;
  std::uint64_t prime_ = 0;
  std::vector<Rational> modulus_;
  std::string variable_;
};

}  // namespace wittray
