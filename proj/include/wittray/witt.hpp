#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "wittray/monoid.hpp"
#include "wittray/polynomial.hpp"
#include "wittray/ring.hpp"

namespace wittray {

/// Pointed function T -> k on a truncation set, stored densely in the
/// element order of T. The tag separates Witt coordinates from ghost
/// components at the type level.
template <class Tag>
class PointedVector {
 public:
  PointedVector(TruncationSetPtr base, CoefficientRing ring)
      : base_(std::move(base)), ring_(std::move(ring)), coords_(base_->size()) {}
  PointedVector(TruncationSetPtr base, CoefficientRing ring, std::vector<Elem> coords)
      : base_(std::move(base)), ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.size() != base_->size()) coords_.resize(base_->size());
  }

  const TruncationSetPtr& base() const noexcept { return base_; }
  const CoefficientRing& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coords() const noexcept { return coords_; }
  const Elem& operator[](std::size_t i) const { return coords_[i]; }
  /// Value at gamma; zero for gamma outside the support.
  Elem at(const Point& gamma) const {
    auto i = base_->index_of(gamma);
    return i ? coords_[*i] : ring_.zero();
  }
  void set(std::size_t i, Elem value) { coords_[i] = std::move(value); }

  friend bool operator==(const PointedVector& a, const PointedVector& b) {
    return (a.base_ == b.base_ || *a.base_ == *b.base_) && a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

 private:
  TruncationSetPtr base_;
  CoefficientRing ring_;
  std::vector<Elem> coords_;
};

using WittVector = PointedVector<struct WittCoordinatesTag>;
using GhostVector = PointedVector<struct GhostComponentsTag>;

/// Integral polynomials realizing the classical big Witt operations on a
/// single ray. Variable a_d is numbered 2(d-1), b_d is 2(d-1)+1. Each
/// family is derived once by solving the ghost equations over Q and then
/// checked for integrality; the cache is shared between threads.
class UniversalPolynomials {
 public:
  static UniversalPolynomials& instance();

  static std::uint32_t a(std::int64_t d) { return static_cast<std::uint32_t>(2 * (d - 1)); }
  static std::uint32_t b(std::int64_t d) { return static_cast<std::uint32_t>(2 * (d - 1) + 1); }

  const MultiPoly& sum(std::int64_t e);
  const MultiPoly& product(std::int64_t e);
  const MultiPoly& negation(std::int64_t e);
  /// Coordinate e of F_m(a): gh(F_m a)_e = gh(a)_{m e}.
  const MultiPoly& frobenius(std::int64_t m, std::int64_t e);

  struct Family {
    std::vector<std::int64_t> truncation_set;
    std::map<std::int64_t, MultiPoly> sums;
    std::map<std::int64_t, MultiPoly> products;
  };
  /// Addition and multiplication polynomials for a divisor-closed S.
  Family family(std::span<const std::int64_t> truncation_set);

  /// Ghost polynomial w_n = sum_{d | n} d x_d^{n/d} in the a- or b-variables.
  static MultiPoly ghost_polynomial(std::int64_t n, bool second_vector);

 private:
  UniversalPolynomials() = default;
  using Target = std::function<MultiPoly(std::int64_t)>;
  const MultiPoly& solve(std::map<std::int64_t, MultiPoly>& cache, std::int64_t n, const Target& target);

  std::recursive_mutex mutex_;
  std::map<std::int64_t, MultiPoly> sums_, products_, negations_;
  std::map<std::int64_t, std::map<std::int64_t, MultiPoly>> frobenius_;
};

WittVector zero_vector(TruncationSetPtr base, const CoefficientRing& ring);
/// The multiplicative identity: 1 on primitive elements, 0 elsewhere.
WittVector delta_prim(TruncationSetPtr base, const CoefficientRing& ring);
/// r[gamma]: r at gamma, 0 elsewhere.
WittVector teichmuller(TruncationSetPtr base, const CoefficientRing& ring, const Elem& r, const Point& gamma);
/// Image of the integer n under Z -> W_T(k).
WittVector witt_integer(TruncationSetPtr base, const CoefficientRing& ring, const Integer& n);

GhostVector ghost(const WittVector& a);
/// Inverse of the ghost map, solved ray by ray in weight order; throws
/// NonExactDivision naming the first component that has no solution.
WittVector from_ghost(const GhostVector& g);
GhostVector ghost_add(const GhostVector& x, const GhostVector& y);
GhostVector ghost_mul(const GhostVector& x, const GhostVector& y);

WittVector add(const WittVector& a, const WittVector& b);
WittVector neg(const WittVector& a);
WittVector sub(const WittVector& a, const WittVector& b);
WittVector mul(const WittVector& a, const WittVector& b);

/// F_m : W_T -> W_{T/m}, where T/m = {gamma : m*gamma in T}.
WittVector frobenius(std::int64_t m, const WittVector& a);
/// V_m : W_S -> W_target, moving the coordinate at gamma to m*gamma and
/// dropping coordinates that leave target. Requires target/m to lie in S.
WittVector verschiebung(std::int64_t m, const WittVector& a, const TruncationSetPtr& target);
WittVector verschiebung(std::int64_t m, const WittVector& a);

/// Quotient map W_T -> W_S for a truncation subset S of T.
WittVector restrict_to(const WittVector& a, const TruncationSetPtr& subset);
/// Coordinatewise ring homomorphism W_T(k) -> W_T(k').
WittVector map_ring(const WittVector& a, const CoefficientRing& target);

/// V_m([r]) along the ray: the Witt vector of the series 1 - r t^m.
WittVector witt_one_minus(TruncationSetPtr base, const CoefficientRing& ring, const Elem& r, std::int64_t m,
                          const Ray& ray);

/// The idempotent [v] projecting onto the ray N v.
WittVector ray_idempotent(TruncationSetPtr base, const CoefficientRing& ring, const Ray& ray);
/// Splits a into classical Witt vectors on the ray truncation sets.
std::map<Ray, WittVector> ray_decompose(const WittVector& a);
WittVector ray_assemble(const std::map<Ray, WittVector>& parts, TruncationSetPtr base, const CoefficientRing& ring);

/// Scalar by which omega acts on a homogeneous element of degree eta of a
/// graded module: gh(omega)_eta. Throws for eta = 0 or eta outside T.
Elem act_on_graded(const WittVector& omega, const Point& eta);
std::vector<Elem> act_on_graded(const WittVector& omega, const Point& eta, std::span<const Elem> element);

/// Scalar by which r[gamma] acts in degree eta, via a minimal truncation
/// containing eta: c(gamma) r^e if eta = e*gamma, else 0.
Elem teichmuller_action(const std::shared_ptr<const AffineMonoid>& monoid, const CoefficientRing& ring,
                        const Elem& r, const Point& gamma, const Point& eta);

}  // namespace wittray
