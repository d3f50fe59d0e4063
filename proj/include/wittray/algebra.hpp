#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittray/linalg.hpp"
#include "wittray/monoid.hpp"
#include "wittray/ring.hpp"

namespace wittray {

/// Finite-dimensional commutative algebra over a field, by structure
/// constants on a basis whose element 0 is the unit.
class FiniteAlgebra {
 public:
  static FiniteAlgebra ground(const Field& field);
  /// k0[y]/(f) for a monic f of degree >= 1 (coefficients low to high).
  static FiniteAlgebra truncated_polynomial(const Field& field, std::vector<Rational> modulus,
                                            std::string variable = "y");

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  /// The algebra as a CoefficientRing (k0 itself, or k0[y]/(f)).
  CoefficientRing as_ring() const;
  /// Coordinates of a ring element in the basis 1, y, ..., y^{d-1}.
  SparseVec coordinates(const Elem& r) const;

 private:
  FiniteAlgebra(Field f) : field_(std::move(f)) {}
  Field field_;
  std::vector<Rational> modulus_;
  std::string variable_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

/// Finite-dimensional algebra graded by an affine monoid, with structure
/// constants on a homogeneous basis. Degrees add under multiplication.
class GradedAlgebra {
 public:
  using Table = std::vector<std::vector<SparseVec>>;

  /// R[Gamma/I] cut at the weight bound of t: basis r_j x^gamma with gamma
  /// in {0} and t, products leaving the truncation set to zero.
  static GradedAlgebra monoid_algebra(const TruncatedMonoid& t, const FiniteAlgebra& degree0);
  /// A finite algebra placed in degree 0 of `monoid`.
  static GradedAlgebra concentrated_in_degree_zero(const FiniteAlgebra& b, std::shared_ptr<const AffineMonoid> monoid,
                                                   Point weight);
  /// General constructor; verifies unit, grading and associativity.
  GradedAlgebra(Field field, std::shared_ptr<const AffineMonoid> monoid, Point weight, std::vector<Point> degrees,
                std::vector<std::string> labels, Table table, std::size_t unit);

  /// This algebra tensored with b, which sits in degree 0.
  GradedAlgebra tensor_with(const FiniteAlgebra& b) const;

  const Field& field() const noexcept { return field_; }
  const AffineMonoid& monoid() const noexcept { return *monoid_; }
  const std::shared_ptr<const AffineMonoid>& monoid_ptr() const noexcept { return monoid_; }
  const Point& weight() const noexcept { return weight_; }
  std::size_t dim() const noexcept { return degrees_.size(); }
  std::size_t unit() const noexcept { return unit_; }
  const Point& degree(std::size_t i) const { return degrees_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  bool is_commutative() const noexcept { return commutative_; }
  /// Largest weight degree of a basis element.
  std::int64_t top_weight() const noexcept { return top_weight_; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// Coefficient ring R of the degree-0 part for monoid algebras (k0 otherwise).
  const CoefficientRing& scalar_ring() const noexcept { return scalar_ring_; }
  /// Image of r in A_0 under R -> A_0.
  SparseVec scalar(const Elem& r) const;

 private:
  GradedAlgebra() : field_(Field::rationals()), scalar_ring_(CoefficientRing::rationals()) {}
  void finish();

  Field field_;
  std::shared_ptr<const AffineMonoid> monoid_;
  Point weight_;
  std::vector<Point> degrees_;
  std::vector<std::string> labels_;
  Table table_;
  std::size_t unit_ = 0;
  bool commutative_ = true;
  std::int64_t top_weight_ = 0;
  CoefficientRing scalar_ring_;
  std::optional<FiniteAlgebra> scalars_;
  std::vector<std::size_t> scalar_index_;  // basis index of r_j in degree 0
};

}  // namespace wittray
