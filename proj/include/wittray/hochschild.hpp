#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittray/algebra.hpp"
#include "wittray/linalg.hpp"
#include "wittray/witt.hpp"

namespace wittray {

/// Normalized Hochschild chains of a graded algebra, split into cells by
/// Gamma-degree, with the mixed-complex differentials b and B.
///
/// A chain basis element is a tuple (a_0, ..., a_n) of algebra basis indices
/// with a_1..a_n different from the unit. Cells are the members eta of the
/// grading monoid with w.eta <= cell_bound; the relative complex omits
/// eta = 0.
class MixedComplex {
 public:
  using Tensor = std::vector<std::uint32_t>;
  static constexpr std::size_t kDefaultCellCap = 20'000;

  /// Builds chains in degrees 0..top_degree. cell_bound defaults to the
  /// top weight of the algebra.
  MixedComplex(std::shared_ptr<const GradedAlgebra> algebra, bool relative, int top_degree,
               std::optional<std::int64_t> cell_bound = std::nullopt, std::size_t cell_cap = kDefaultCellCap);

  const GradedAlgebra& algebra() const noexcept { return *algebra_; }
  const Field& field() const noexcept { return algebra_->field(); }
  bool relative() const noexcept { return relative_; }
  int top_degree() const noexcept { return top_degree_; }
  std::int64_t cell_bound() const noexcept { return cell_bound_; }
  const std::vector<Point>& cells() const noexcept { return cell_degrees_; }
  bool has_cell(const Point& eta) const { return cell_index_.count(eta) > 0; }

  const std::vector<Tensor>& chains(int n, const Point& eta) const;
  std::size_t dimension(int n, const Point& eta) const { return chains(n, eta).size(); }
  std::optional<std::size_t> chain_index(int n, const Point& eta, const Tensor& t) const;

  /// b : C_n -> C_{n-1} on the cell (zero map out of C_0).
  SparseMatrix b(int n, const Point& eta) const;
  /// Normalized Connes operator B : C_n -> C_{n+1}; needs n < top_degree.
  SparseMatrix B(int n, const Point& eta) const;
  /// Multiplication of a_0 by the degree-0 element s.
  SparseMatrix left_multiplication(int n, const Point& eta, const SparseVec& s) const;

  std::string format_chain(int n, const Point& eta, const SparseVec& v) const;

 private:
  struct Cell {
    std::vector<std::vector<Tensor>> chains;
    std::vector<std::map<Tensor, std::uint32_t>> index;
  };
  const Cell& cell(const Point& eta) const;
  void check_degree(int n) const;
  Cell build_cell(const Point& eta) const;

  std::shared_ptr<const GradedAlgebra> algebra_;
  bool relative_;
  int top_degree_;
  std::int64_t cell_bound_;
  std::size_t cell_cap_;
  std::vector<Point> cell_degrees_;
  std::map<Point, std::size_t> cell_index_;
  std::vector<Cell> cells_;
};

struct HomologyCell {
  int n = 0;
  Point eta;
  std::size_t dim = 0;
  std::vector<SparseVec> basis;  // representative cycles, when requested
};

struct HomologyReport {
  enum class Kind { Hochschild, Cyclic };
  Kind kind = Kind::Hochschild;
  bool relative = true;
  int n_max = 0;
  std::int64_t cell_bound = 0;
  std::vector<HomologyCell> cells;  // ordered by (n, eta)

  std::size_t dim(int n, const Point& eta) const;
  std::size_t total(int n) const;
};

/// HH_n for 0 <= n <= n_max; the complex must reach degree n_max + 1.
HomologyReport hochschild_homology(const MixedComplex& c, int n_max, bool with_basis = false);

/// Total complex of the (b, B) bicomplex: Tot_n = sum_p C_{n-2p}.
std::size_t total_dimension(const MixedComplex& c, int n, const Point& eta);
SparseMatrix total_differential(const MixedComplex& c, int n, const Point& eta);
/// S : Tot_n -> Tot_{n-2}, dropping the column of C_n.
SparseMatrix periodicity(const MixedComplex& c, int n, const Point& eta);

/// HC_n over Q for 0 <= n <= n_max.
HomologyReport cyclic_homology(const MixedComplex& c, int n_max, bool with_basis = false);
/// True when S maps every HC_n class of the cell to a boundary.
bool periodicity_vanishes(const MixedComplex& c, int n, const Point& eta);

/// Matrix of omega acting on C_n(eta): multiplication of a_0 by gh(omega)_eta.
/// omega must live over the degree-0 coefficient ring and contain eta.
SparseMatrix witt_action(const MixedComplex& c, int n, const Point& eta, const WittVector& omega);
/// Matrix of r[gamma] acting on C_n(eta); valid for every cell.
SparseMatrix teichmuller_action_matrix(const MixedComplex& c, int n, const Point& eta, const Elem& r,
                                       const Point& gamma);

struct DecompositionCheck {
  int n = 0;
  Point eta;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// dim HH_n(A (x) B) on cells eta != 0 against sum_i dim HH_i(B) dim HH_{n-i}(A, A_0)_eta.
std::vector<DecompositionCheck> kunneth_check(const GradedAlgebra& a, const FiniteAlgebra& b, int n_max,
                                              std::optional<std::int64_t> cell_bound = std::nullopt);
/// dim HC_n(R[Gamma/I], R) against sum_i dim HH_i(R) dim HC_{n-i}(k0[Gamma/I], k0), per cell.
std::vector<DecompositionCheck> kassel_check(const TruncatedMonoid& t, const FiniteAlgebra& r, int n_max,
                                             std::optional<std::int64_t> cell_bound = std::nullopt);

}  // namespace wittray
