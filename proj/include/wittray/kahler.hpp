#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "wittray/algebra.hpp"
#include "wittray/linalg.hpp"

namespace wittray {

/// Graded Kahler forms of a commutative graded algebra over its ground
/// field, presented as A (x) Lambda^n(A / k0) modulo the Leibniz relations
/// a * (d(e_i e_j) - e_i de_j - e_j de_i) ^ de_J.
///
/// A form in cell (n, eta) is a SparseVec over the generators a de_J listed
/// by generators(n, eta); equality of forms is decided via normal_form.
class KahlerForms {
 public:
  struct Generator {
    std::uint32_t coefficient;
    std::vector<std::uint32_t> wedge;  // strictly increasing, no unit

    friend auto operator<=>(const Generator&, const Generator&) = default;
  };

  KahlerForms(std::shared_ptr<const GradedAlgebra> algebra, int top_degree,
              std::optional<std::int64_t> cell_bound = std::nullopt);

  const GradedAlgebra& algebra() const noexcept { return *algebra_; }
  int top_degree() const noexcept { return top_degree_; }
  const std::vector<Point>& cells() const noexcept { return cell_degrees_; }

  const std::vector<Generator>& generators(int n, const Point& eta) const;
  /// dim of Omega^n in degree eta.
  std::size_t dimension(int n, const Point& eta) const;
  SparseVec normal_form(int n, const Point& eta, const SparseVec& form) const;
  bool equal(int n, const Point& eta, const SparseVec& x, const SparseVec& y) const;

  /// de Rham differential on generators, Omega^n(eta) -> Omega^{n+1}(eta).
  SparseMatrix d(int n, const Point& eta) const;
  SparseVec d(int n, const Point& eta, const SparseVec& form) const;

  /// The 0-form given by a homogeneous algebra element; also returns its degree.
  std::pair<Point, SparseVec> function(const SparseVec& a) const;
  /// a * form, landing in degree deg(a) + eta.
  std::pair<Point, SparseVec> multiply(const SparseVec& a, int n, const Point& eta, const SparseVec& form) const;

  std::string format(int n, const Point& eta, const SparseVec& form) const;

 private:
  struct Cell {
    std::vector<std::vector<Generator>> generators;
    std::vector<std::map<Generator, std::uint32_t>> index;
    std::vector<std::unique_ptr<Echelon>> relations;
  };
  const Cell& cell(const Point& eta) const;
  std::uint32_t index_of(int n, const Point& eta, const Generator& g) const;
  void build_generators(Cell& c, const Point& eta) const;
  void build_relations(Cell& c, const Point& eta) const;
  Point homogeneous_degree(const SparseVec& a) const;

  std::shared_ptr<const GradedAlgebra> algebra_;
  int top_degree_;
  std::int64_t cell_bound_;
  std::vector<Point> cell_degrees_;
  std::map<Point, std::size_t> cell_index_;
  std::vector<Cell> cells_;
};

}  // namespace wittray
