#include "wittray/hochschild.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"
#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "graded-hochschild";

std::string format_point(const Point& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

// Places a matrix block with the given row/column offsets into `out`.
void place_block(SparseMatrix& out, const SparseMatrix& block, std::size_t row_offset, std::size_t col_offset) {
  for (std::size_t j = 0; j < block.cols; ++j) {
    auto& col = out.columns[col_offset + j];
    for (const auto& [i, x] : block.columns[j]) col.emplace_back(static_cast<std::uint32_t>(row_offset + i), x);
  }
}

void sort_columns(SparseMatrix& m) {
  for (auto& c : m.columns) std::sort(c.begin(), c.end());
}

// Offsets of the blocks C_{n-2p} inside Tot_n.
std::vector<std::size_t> block_offsets(const MixedComplex& c, int n, const Point& eta) {
  std::vector<std::size_t> offsets{0};
  for (int m = n; m >= 0; m -= 2) offsets.push_back(offsets.back() + c.dimension(m, eta));
  return offsets;
}

}  // namespace

// ---------------------------------------------------------------------------
// Chains

MixedComplex::MixedComplex(std::shared_ptr<const GradedAlgebra> algebra, bool relative, int top_degree,
                           std::optional<std::int64_t> cell_bound, std::size_t cell_cap)
    : algebra_(std::move(algebra)),
      relative_(relative),
      top_degree_(top_degree),
      cell_bound_(cell_bound.value_or(algebra_->top_weight())),
      cell_cap_(cell_cap) {
  if (top_degree_ < 0) throw Error(ErrorCode::InvalidArgument, kModule, "homological degree bound must be >= 0");
  if (cell_bound_ < 0) throw Error(ErrorCode::InvalidArgument, kModule, "cell bound must be >= 0");
  if (cell_cap_ == 0) throw Error(ErrorCode::InvalidArgument, kModule, "cell cap must be positive");
  auto members = algebra_->monoid().members_up_to(algebra_->weight(), cell_bound_);
  std::sort(members.begin(), members.end(),
            [&](const Point& a, const Point& b) { return weighted_less(algebra_->weight(), a, b); });
  for (auto& eta : members) {
    if (relative_ && is_zero_point(eta)) continue;
    cell_index_.emplace(eta, cell_degrees_.size());
    cell_degrees_.push_back(std::move(eta));
  }
  cells_.resize(cell_degrees_.size());
  detail::parallel_for(cells_.size(), [&](std::size_t i) { cells_[i] = build_cell(cell_degrees_[i]); });
}

MixedComplex::Cell MixedComplex::build_cell(const Point& eta) const {
  const auto& a = *algebra_;
  std::map<Point, std::vector<std::uint32_t>> by_degree;
  for (std::size_t i = 0; i < a.dim(); ++i) by_degree[a.degree(i)].push_back(static_cast<std::uint32_t>(i));
  const auto members = a.monoid().members_up_to(a.weight(), dot(a.weight(), eta));
  const std::set<Point> member_set(members.begin(), members.end());

  Cell cell;
  cell.chains.resize(top_degree_ + 1);
  cell.index.resize(top_degree_ + 1);
  for (int n = 0; n <= top_degree_; ++n) {
    auto& out = cell.chains[n];
    Tensor t(n + 1);
    // Depth-first over positions; `rest` is the degree still to be placed.
    auto fill = [&](auto&& self, int pos, const Point& rest) -> void {
      for (const auto& [deg, indices] : by_degree) {
        const Point left = sub_points(rest, deg);
        if (pos == n ? !is_zero_point(left) : !member_set.count(left)) continue;
        for (auto i : indices) {
          if (pos > 0 && i == a.unit()) continue;
          t[pos] = i;
          if (pos == n) {
            out.push_back(t);
            if (out.size() > cell_cap_) {
              throw Error(ErrorCode::ResourceLimit, kModule,
                          "cell " + format_point(eta) + " in degree " + std::to_string(n) + " exceeds " +
                              std::to_string(cell_cap_) + " chains");
            }
          } else {
            self(self, pos + 1, left);
          }
        }
      }
    };
    fill(fill, 0, eta);
    std::sort(out.begin(), out.end());
    for (std::size_t k = 0; k < out.size(); ++k) cell.index[n].emplace(out[k], static_cast<std::uint32_t>(k));
  }
  return cell;
}

const MixedComplex::Cell& MixedComplex::cell(const Point& eta) const {
  auto it = cell_index_.find(eta);
  if (it == cell_index_.end()) {
    throw Error(ErrorCode::NotMember, kModule, "no chain cell in degree " + format_point(eta));
  }
  return cells_[it->second];
}

void MixedComplex::check_degree(int n) const {
  if (n < 0 || n > top_degree_) {
    throw Error(ErrorCode::InvalidArgument, kModule,
                "chains in degree " + std::to_string(n) + " were not built (top degree " +
                    std::to_string(top_degree_) + ")");
  }
}

const std::vector<MixedComplex::Tensor>& MixedComplex::chains(int n, const Point& eta) const {
  check_degree(n);
  return cell(eta).chains[n];
}

std::optional<std::size_t> MixedComplex::chain_index(int n, const Point& eta, const Tensor& t) const {
  check_degree(n);
  const auto& idx = cell(eta).index[n];
  auto it = idx.find(t);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

SparseMatrix MixedComplex::b(int n, const Point& eta) const {
  const auto& a = *algebra_;
  const auto& f = field();
  const auto& source = chains(n, eta);
  if (n == 0) return SparseMatrix::zero(0, source.size());
  SparseMatrix m = SparseMatrix::zero(dimension(n - 1, eta), source.size());
  auto target = [&](const Tensor& t) {
    auto i = chain_index(n - 1, eta, t);
    if (!i) throw Error(ErrorCode::Internal, kModule, "boundary left its cell");
    return static_cast<std::uint32_t>(*i);
  };
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Tensor& t = source[j];
    SparseBuilder acc(f);
    Tensor u(n);
    for (int i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product(t[i], t[i + 1])) {
        if (i > 0 && k == a.unit()) continue;
        std::copy(t.begin(), t.begin() + i, u.begin());
        u[i] = k;
        std::copy(t.begin() + i + 2, t.end(), u.begin() + i + 1);
        acc.add(target(u), c * sign(i));
      }
    }
    for (const auto& [k, c] : a.product(t[n], t[0])) {
      u[0] = k;
      std::copy(t.begin() + 1, t.begin() + n, u.begin() + 1);
      acc.add(target(u), c * sign(n));
    }
    m.columns[j] = acc.finish();
  }
  return m;
}

SparseMatrix MixedComplex::B(int n, const Point& eta) const {
  check_degree(n + 1);
  const auto& a = *algebra_;
  const auto& source = chains(n, eta);
  SparseMatrix m = SparseMatrix::zero(dimension(n + 1, eta), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Tensor& t = source[j];
    if (t[0] == a.unit()) continue;
    SparseBuilder acc(field());
    Tensor u(n + 2);
    u[0] = static_cast<std::uint32_t>(a.unit());
    for (int i = 0; i <= n; ++i) {
      std::copy(t.begin() + i, t.end(), u.begin() + 1);
      std::copy(t.begin(), t.begin() + i, u.begin() + 1 + (n + 1 - i));
      auto k = chain_index(n + 1, eta, u);
      if (!k) throw Error(ErrorCode::Internal, kModule, "Connes operator left its cell");
      acc.add(static_cast<std::uint32_t>(*k), Rational(sign(static_cast<long long>(n) * i)));
    }
    m.columns[j] = acc.finish();
  }
  return m;
}

SparseMatrix MixedComplex::left_multiplication(int n, const Point& eta, const SparseVec& s) const {
  const auto& a = *algebra_;
  for (const auto& [i, x] : s)
    if (!is_zero_point(a.degree(i))) throw Error(ErrorCode::InvalidArgument, kModule, "multiplier must have degree 0");
  const auto& source = chains(n, eta);
  SparseMatrix m = SparseMatrix::zero(source.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    Tensor u = source[j];
    SparseBuilder acc(field());
    for (const auto& [k, c] : a.multiply(s, SparseVec{{source[j][0], Rational(1)}})) {
      u[0] = k;
      auto idx = chain_index(n, eta, u);
      if (!idx) throw Error(ErrorCode::Internal, kModule, "degree-0 multiplication left its cell");
      acc.add(static_cast<std::uint32_t>(*idx), c);
    }
    m.columns[j] = acc.finish();
  }
  return m;
}

std::string MixedComplex::format_chain(int n, const Point& eta, const SparseVec& v) const {
  if (v.empty()) return "0";
  const auto& basis = chains(n, eta);
  std::string out;
  for (const auto& [i, c] : v) {
    Rational x = c;
    if (!out.empty()) {
      out += x < 0 ? " - " : " + ";
      if (x < 0) x = -x;
    } else if (x < 0) {
      out += "-";
      x = -x;
    }
    if (x != 1) out += x.get_str() + "*";
    out += "[";
    for (std::size_t k = 0; k < basis[i].size(); ++k) out += (k ? "|" : "") + algebra_->label(basis[i][k]);
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homology

std::size_t HomologyReport::dim(int n, const Point& eta) const {
  for (const auto& c : cells)
    if (c.n == n && c.eta == eta) return c.dim;
  return 0;
}

std::size_t HomologyReport::total(int n) const {
  std::size_t s = 0;
  for (const auto& c : cells)
    if (c.n == n) s += c.dim;
  return s;
}

namespace {

void sort_report(HomologyReport& r, const Point& w) {
  std::sort(r.cells.begin(), r.cells.end(), [&](const HomologyCell& a, const HomologyCell& b) {
    if (a.n != b.n) return a.n < b.n;
    return weighted_less(w, a.eta, b.eta);
  });
}

void require_range(const MixedComplex& c, int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, kModule, "n_max must be >= 0");
  if (n_max + 1 > c.top_degree()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "complex must be built through degree n_max + 1");
  }
}

}  // namespace

HomologyReport hochschild_homology(const MixedComplex& c, int n_max, bool with_basis) {
  require_range(c, n_max);
  HomologyReport report{HomologyReport::Kind::Hochschild, c.relative(), n_max, c.cell_bound(), {}};
  std::vector<std::vector<HomologyCell>> per_cell(c.cells().size());
  detail::parallel_for(c.cells().size(), [&](std::size_t k) {
    const Point& eta = c.cells()[k];
    std::vector<SparseMatrix> bs;
    for (int n = 0; n <= n_max + 1; ++n) bs.push_back(c.b(n, eta));
    for (int n = 0; n <= n_max; ++n) {
      HomologyCell h{n, eta, 0, {}};
      if (with_basis) {
        h.basis = homology_basis(c.field(), bs[n], bs[n + 1]);
        h.dim = h.basis.size();
      } else {
        h.dim = c.dimension(n, eta) - rank(c.field(), bs[n]) - rank(c.field(), bs[n + 1]);
      }
      if (h.dim > 0) per_cell[k].push_back(std::move(h));
    }
  });
  for (auto& v : per_cell)
    for (auto& h : v) report.cells.push_back(std::move(h));
  sort_report(report, c.algebra().weight());
  return report;
}

std::size_t total_dimension(const MixedComplex& c, int n, const Point& eta) {
  if (n < 0) return 0;
  return block_offsets(c, n, eta).back();
}

SparseMatrix total_differential(const MixedComplex& c, int n, const Point& eta) {
  const auto src = block_offsets(c, n, eta);
  const auto dst = n >= 1 ? block_offsets(c, n - 1, eta) : std::vector<std::size_t>{0};
  SparseMatrix d = SparseMatrix::zero(dst.back(), src.back());
  for (int p = 0; 2 * p <= n; ++p) {
    const int m = n - 2 * p;
    if (m >= 1) place_block(d, c.b(m, eta), dst[p], src[p]);
    if (p >= 1) place_block(d, c.B(m, eta), dst[p - 1], src[p]);
  }
  sort_columns(d);
  return d;
}

SparseMatrix periodicity(const MixedComplex& c, int n, const Point& eta) {
  const auto src = block_offsets(c, n, eta);
  const std::size_t rows = total_dimension(c, n - 2, eta);
  SparseMatrix s = SparseMatrix::zero(rows, src.back());
  for (int p = 1; 2 * p <= n; ++p) {
    const auto dst = block_offsets(c, n - 2, eta);
    place_block(s, SparseMatrix::identity(c.dimension(n - 2 * p, eta)), dst[p - 1], src[p]);
  }
  return s;
}

namespace {

void require_characteristic_zero(const MixedComplex& c) {
  if (!c.field().is_rationals()) {
    throw Error(ErrorCode::Unsupported, kModule, "cyclic homology is computed in characteristic 0 only");
  }
}

}  // namespace

HomologyReport cyclic_homology(const MixedComplex& c, int n_max, bool with_basis) {
  require_characteristic_zero(c);
  require_range(c, n_max);
  HomologyReport report{HomologyReport::Kind::Cyclic, c.relative(), n_max, c.cell_bound(), {}};
  std::vector<std::vector<HomologyCell>> per_cell(c.cells().size());
  detail::parallel_for(c.cells().size(), [&](std::size_t k) {
    const Point& eta = c.cells()[k];
    std::vector<SparseMatrix> ds;
    for (int n = 0; n <= n_max + 1; ++n) ds.push_back(total_differential(c, n, eta));
    for (int n = 0; n <= n_max; ++n) {
      HomologyCell h{n, eta, 0, {}};
      if (with_basis) {
        h.basis = homology_basis(c.field(), ds[n], ds[n + 1]);
        h.dim = h.basis.size();
      } else {
        h.dim = total_dimension(c, n, eta) - rank(c.field(), ds[n]) - rank(c.field(), ds[n + 1]);
      }
      if (h.dim > 0) per_cell[k].push_back(std::move(h));
    }
  });
  for (auto& v : per_cell)
    for (auto& h : v) report.cells.push_back(std::move(h));
  sort_report(report, c.algebra().weight());
  return report;
}

bool periodicity_vanishes(const MixedComplex& c, int n, const Point& eta) {
  require_characteristic_zero(c);
  if (n + 1 > c.top_degree()) throw Error(ErrorCode::InvalidArgument, kModule, "complex too short for HC_n");
  if (n < 2) return true;
  const auto classes = homology_basis(c.field(), total_differential(c, n, eta), total_differential(c, n + 1, eta));
  const auto s = periodicity(c, n, eta);
  Echelon boundaries(c.field());
  for (const auto& col : total_differential(c, n - 1, eta).columns) boundaries.insert(col);
  for (const auto& z : classes)
    if (!boundaries.contains(apply(c.field(), s, z))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Witt action

SparseMatrix witt_action(const MixedComplex& c, int n, const Point& eta, const WittVector& omega) {
  if (!(omega.ring() == c.algebra().scalar_ring())) {
    throw Error(ErrorCode::RingMismatch, kModule,
                "Witt vector over " + omega.ring().describe() + " cannot act on a module over " +
                    c.algebra().scalar_ring().describe());
  }
  const Elem s = act_on_graded(omega, eta);
  return c.left_multiplication(n, eta, c.algebra().scalar(s));
}

SparseMatrix teichmuller_action_matrix(const MixedComplex& c, int n, const Point& eta, const Elem& r,
                                       const Point& gamma) {
  const auto& a = c.algebra();
  const Elem s = teichmuller_action(a.monoid_ptr(), a.scalar_ring(), r, gamma, eta);
  return c.left_multiplication(n, eta, a.scalar(s));
}

// ---------------------------------------------------------------------------
// Decomposition checks

std::vector<DecompositionCheck> kunneth_check(const GradedAlgebra& a, const FiniteAlgebra& b, int n_max,
                                              std::optional<std::int64_t> cell_bound) {
  const auto bound = cell_bound.value_or(a.top_weight());
  auto ab = std::make_shared<const GradedAlgebra>(a.tensor_with(b));
  auto pa = std::make_shared<const GradedAlgebra>(a);
  auto pb = std::make_shared<const GradedAlgebra>(GradedAlgebra::concentrated_in_degree_zero(b, a.monoid_ptr(), a.weight()));
  const auto hab = hochschild_homology(MixedComplex(ab, true, n_max + 1, bound), n_max);
  const auto ha = hochschild_homology(MixedComplex(pa, true, n_max + 1, bound), n_max);
  const Point zero(a.monoid().rank(), 0);
  const auto hb = hochschild_homology(MixedComplex(pb, false, n_max + 1, 0), n_max);
  std::vector<DecompositionCheck> out;
  MixedComplex cells(pa, true, 0, bound);
  for (int n = 0; n <= n_max; ++n)
    for (const auto& eta : cells.cells()) {
      DecompositionCheck d{n, eta, hab.dim(n, eta), 0};
      for (int i = 0; i <= n; ++i) d.rhs += hb.dim(i, zero) * ha.dim(n - i, eta);
      out.push_back(d);
    }
  return out;
}

std::vector<DecompositionCheck> kassel_check(const TruncatedMonoid& t, const FiniteAlgebra& r, int n_max,
                                             std::optional<std::int64_t> cell_bound) {
  auto ar = std::make_shared<const GradedAlgebra>(GradedAlgebra::monoid_algebra(t, r));
  auto ak = std::make_shared<const GradedAlgebra>(GradedAlgebra::monoid_algebra(t, FiniteAlgebra::ground(r.field())));
  auto pr = std::make_shared<const GradedAlgebra>(GradedAlgebra::concentrated_in_degree_zero(r, t.parent_ptr(), t.weight()));
  const auto bound = cell_bound.value_or(ar->top_weight());
  const auto lhs = cyclic_homology(MixedComplex(ar, true, n_max + 1, bound), n_max);
  const auto hc = cyclic_homology(MixedComplex(ak, true, n_max + 1, bound), n_max);
  const Point zero(t.parent().rank(), 0);
  const auto hh = hochschild_homology(MixedComplex(pr, false, n_max + 1, 0), n_max);
  std::vector<DecompositionCheck> out;
  MixedComplex cells(ak, true, 0, bound);
  for (int n = 0; n <= n_max; ++n)
    for (const auto& eta : cells.cells()) {
      DecompositionCheck d{n, eta, lhs.dim(n, eta), 0};
      for (int i = 0; i <= n; ++i) d.rhs += hh.dim(i, zero) * hc.dim(n - i, eta);
      out.push_back(d);
    }
  return out;
}

}  // namespace wittray
