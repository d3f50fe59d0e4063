#pragma once

#include <memory>
#include <optional>
#include <random>

#include "wittray/monoid.hpp"
#include "wittray/witt.hpp"

namespace test {

using namespace wittray;

// The cone 0 <= y <= 2x, generated by (1,0),(1,1),(1,2).
inline AffineMonoid cone_monoid_by_generators() { return AffineMonoid::from_generators({{1, 0}, {1, 1}, {1, 2}}); }
inline AffineMonoid cone_monoid_by_inequalities() { return AffineMonoid::from_inequalities({{0, 1}, {2, -1}}); }

inline std::shared_ptr<const AffineMonoid> shared(AffineMonoid m) {
  return std::make_shared<const AffineMonoid>(std::move(m));
}

inline TruncationSetPtr line_truncation(std::int64_t bound) {
  return TruncatedMonoid(shared(AffineMonoid::orthant(1)), std::nullopt, {1}, bound).elements();
}

inline TruncatedMonoid random_truncation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<std::int64_t> bound(1, 6);
  switch (pick(rng)) {
    case 0:
      return TruncatedMonoid(shared(AffineMonoid::orthant(1)), std::nullopt, {1}, bound(rng));
    case 1: {
      std::uniform_int_distribution<std::int64_t> w(1, 2);
      return TruncatedMonoid(shared(AffineMonoid::orthant(2)), std::nullopt, {w(rng), w(rng)}, bound(rng));
    }
    default:
      return TruncatedMonoid(shared(cone_monoid_by_generators()), std::nullopt, {1, 0}, std::min<std::int64_t>(bound(rng), 4));
  }
}

inline Elem random_elem(std::mt19937_64& rng, const CoefficientRing& ring, std::int64_t spread = 5) {
  std::uniform_int_distribution<std::int64_t> d(-spread, spread);
  if (ring.kind() == RingKind::Polynomial) {
    return ring.from_coefficients({Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
  }
  return ring.from_integer(d(rng));
}

inline WittVector random_witt(std::mt19937_64& rng, const TruncationSetPtr& base, const CoefficientRing& ring,
                              std::int64_t spread = 5) {
  WittVector a(base, ring);
  for (std::size_t i = 0; i < base->size(); ++i) a.set(i, random_elem(rng, ring, spread));
  return a;
}

}  // namespace test

#include "wittray/algebra.hpp"

namespace test {

// k0[x]/(x^a) as the monoid algebra of N / (a).
inline std::shared_ptr<const GradedAlgebra> truncated_line_algebra(std::int64_t a, const FiniteAlgebra& r) {
  auto n1 = shared(AffineMonoid::orthant(1));
  TruncatedMonoid t(n1, MonoidIdeal(n1, {{a}}), {1}, a - 1);
  return std::make_shared<const GradedAlgebra>(GradedAlgebra::monoid_algebra(t, r));
}

inline std::shared_ptr<const GradedAlgebra> truncated_line_algebra(std::int64_t a) {
  return truncated_line_algebra(a, FiniteAlgebra::ground(Field::rationals()));
}

// The cone 0 <= y <= 2x modulo the ideal generated by (2,2), cut at x <= bound.
inline TruncatedMonoid cone_truncation(std::int64_t bound) {
  auto cone = shared(cone_monoid_by_generators());
  return TruncatedMonoid(cone, MonoidIdeal(cone, {{2, 2}}), {1, 0}, bound);
}

inline std::shared_ptr<const GradedAlgebra> cone_algebra(std::int64_t bound) {
  return std::make_shared<const GradedAlgebra>(
      GradedAlgebra::monoid_algebra(cone_truncation(bound), FiniteAlgebra::ground(Field::rationals())));
}

inline FiniteAlgebra dual_numbers() {
  return FiniteAlgebra::truncated_polynomial(Field::rationals(), {Rational(0), Rational(0), Rational(1)});
}

}  // namespace test
