#include "wittray/algebra.hpp"

#include <algorithm>

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "graded-hochschild";

std::string monomial_label(const Point& g) {
  if (is_zero_point(g)) return "1";
  if (g.size() == 1) return g[0] == 1 ? "x" : "x^" + std::to_string(g[0]);
  std::string s = "x^(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteAlgebra FiniteAlgebra::ground(const Field& field) {
  FiniteAlgebra a(field);
  a.labels_ = {"1"};
  a.table_ = {SparseVec{{0, Rational(1)}}};
  return a;
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(const Field& field, std::vector<Rational> modulus,
                                                  std::string variable) {
  const auto ring = CoefficientRing::polynomial(field.ring(), modulus, variable);
  FiniteAlgebra a(field);
  a.modulus_ = ring.modulus();
  a.variable_ = variable;
  const std::size_t d = a.modulus_.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    a.labels_.push_back(i == 0 ? "1" : i == 1 ? variable : variable + "^" + std::to_string(i));
  }
  const Elem y = ring.variable_element();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.table_.push_back(a.coordinates(ring.pow(y, i + j)));
  return a;
}

CoefficientRing FiniteAlgebra::as_ring() const {
  if (modulus_.empty()) return field_.ring();
  return CoefficientRing::polynomial(field_.ring(), modulus_, variable_);
}

SparseVec FiniteAlgebra::coordinates(const Elem& r) const {
  if (r.coeffs().size() > dim()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "element is not reduced in the degree-0 algebra");
  }
  SparseVec v;
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
    Rational c = field_.normalize(r.coeffs()[i]);
    if (c != 0) v.emplace_back(static_cast<std::uint32_t>(i), c);
  }
  return v;
}

// ---------------------------------------------------------------------------

GradedAlgebra GradedAlgebra::monoid_algebra(const TruncatedMonoid& t, const FiniteAlgebra& degree0) {
  GradedAlgebra a;
  a.field_ = degree0.field();
  a.monoid_ = t.parent_ptr();
  a.weight_ = t.weight();
  std::vector<Point> monomials{Point(t.parent().rank(), 0)};
  for (const auto& g : t.enumerate()) monomials.push_back(g);
  const std::size_t r = degree0.dim();
  for (const auto& g : monomials) {
    for (std::size_t j = 0; j < r; ++j) {
      a.degrees_.push_back(g);
      a.labels_.push_back(join_labels(degree0.label(j), monomial_label(g)));
    }
  }
  const auto& elems = t.elements();
  auto monomial_index = [&](const Point& g) -> std::optional<std::size_t> {
    if (is_zero_point(g)) return 0;
    auto i = elems->index_of(g);
    if (!i) return std::nullopt;
    return *i + 1;
  };
  const std::size_t n = a.degrees_.size();
  a.table_.assign(n, std::vector<SparseVec>(n));
  for (std::size_t p = 0; p < monomials.size(); ++p) {
    for (std::size_t q = 0; q < monomials.size(); ++q) {
      auto s = monomial_index(add_points(monomials[p], monomials[q]));
      if (!s) continue;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          SparseVec out;
          for (const auto& [l, c] : degree0.product(j, k))
            out.emplace_back(static_cast<std::uint32_t>(*s * r + l), c);
          a.table_[p * r + j][q * r + k] = std::move(out);
        }
    }
  }
  a.unit_ = 0;
  a.scalars_ = degree0;
  a.scalar_ring_ = degree0.as_ring();
  for (std::size_t j = 0; j < r; ++j) a.scalar_index_.push_back(j);
  a.finish();
  return a;
}

GradedAlgebra GradedAlgebra::concentrated_in_degree_zero(const FiniteAlgebra& b,
                                                         std::shared_ptr<const AffineMonoid> monoid, Point weight) {
  GradedAlgebra a;
  a.field_ = b.field();
  a.monoid_ = std::move(monoid);
  a.weight_ = std::move(weight);
  const std::size_t n = b.dim();
  a.table_.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    a.degrees_.push_back(Point(a.monoid_->rank(), 0));
    a.labels_.push_back(b.label(i));
    for (std::size_t j = 0; j < n; ++j) a.table_[i][j] = b.product(i, j);
  }
  a.scalars_ = b;
  a.scalar_ring_ = b.as_ring();
  for (std::size_t j = 0; j < n; ++j) a.scalar_index_.push_back(j);
  a.finish();
  return a;
}

GradedAlgebra::GradedAlgebra(Field field, std::shared_ptr<const AffineMonoid> monoid, Point weight,
                             std::vector<Point> degrees, std::vector<std::string> labels, Table table,
                             std::size_t unit)
    : field_(std::move(field)),
      monoid_(std::move(monoid)),
      weight_(std::move(weight)),
      degrees_(std::move(degrees)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(unit),
      scalar_ring_(field_.ring()) {
  const std::size_t n = degrees_.size();
  if (labels_.size() != n || table_.size() != n || unit_ >= n) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "structure constant table has inconsistent size");
  }
  for (const auto& row : table_)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, kModule, "structure constant table is not square");
  if (!is_zero_point(degrees_[unit_])) throw Error(ErrorCode::InvalidArgument, kModule, "unit must have degree 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (!monoid_->contains(degrees_[i])) {
      throw Error(ErrorCode::NotMember, kModule, "basis degree outside the grading monoid");
    }
    const SparseVec ei{{static_cast<std::uint32_t>(i), Rational(1)}};
    if (table_[unit_][i] != ei || table_[i][unit_] != ei) {
      throw Error(ErrorCode::InvalidArgument, kModule, "basis element " + labels_[i] + " is not fixed by the unit");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Point d = add_points(degrees_[i], degrees_[j]);
      for (auto& [k, c] : table_[i][j]) {
        c = field_.normalize(c);
        if (degrees_[k] != d) throw Error(ErrorCode::InvalidArgument, kModule, "product is not homogeneous");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVec ek{{static_cast<std::uint32_t>(k), Rational(1)}};
        if (multiply(table_[i][j], ek) != multiply(SparseVec{{static_cast<std::uint32_t>(i), Rational(1)}}, table_[j][k])) {
          throw Error(ErrorCode::InvalidArgument, kModule, "multiplication table is not associative");
        }
      }
  finish();
}

void GradedAlgebra::finish() {
  commutative_ = true;
  for (std::size_t i = 0; i < dim() && commutative_; ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (table_[i][j] != table_[j][i]) {
        commutative_ = false;
        break;
      }
  top_weight_ = 0;
  for (const auto& d : degrees_) top_weight_ = std::max(top_weight_, dot(weight_, d));
}

GradedAlgebra GradedAlgebra::tensor_with(const FiniteAlgebra& b) const {
  if (!(b.field() == field_)) throw Error(ErrorCode::RingMismatch, kModule, "tensor factors over different fields");
  GradedAlgebra out;
  out.field_ = field_;
  out.monoid_ = monoid_;
  out.weight_ = weight_;
  const std::size_t m = b.dim();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      out.degrees_.push_back(degrees_[i]);
      out.labels_.push_back(join_labels(labels_[i], b.label(j)));
    }
  const std::size_t n = out.degrees_.size();
  out.table_.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        for (std::size_t l = 0; l < m; ++l) {
          SparseBuilder acc(field_);
          for (const auto& [p, x] : table_[i][k])
            for (const auto& [q, y] : b.product(j, l)) acc.add(static_cast<std::uint32_t>(p * m + q), x * y);
          out.table_[i * m + j][k * m + l] = acc.finish();
        }
  out.unit_ = unit_ * m;
  out.scalars_ = scalars_;
  out.scalar_ring_ = scalar_ring_;
  for (auto s : scalar_index_) out.scalar_index_.push_back(s * m);
  out.finish();
  return out;
}

SparseVec GradedAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseBuilder acc(field_);
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) acc.add(table_[i][j], field_.mul(x, y));
  return acc.finish();
}

SparseVec GradedAlgebra::scalar(const Elem& r) const {
  if (!scalars_) {
    if (r.coeffs().size() > 1) throw Error(ErrorCode::InvalidArgument, kModule, "scalar outside the ground field");
    if (r.is_zero()) return {};
    return {{static_cast<std::uint32_t>(unit_), field_.normalize(r.coeffs()[0])}};
  }
  SparseVec out;
  for (const auto& [j, c] : scalars_->coordinates(r))
    out.emplace_back(static_cast<std::uint32_t>(scalar_index_[j]), c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wittray
