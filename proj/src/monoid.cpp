#include "wittray/monoid.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "monoid-core";

constexpr std::size_t kMembershipSearchBudget = 20'000'000;

std::string format_point(const Point& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Row reduction over Q of a small integer matrix. Returns the pivot columns
// and leaves `m` in reduced row echelon form.
std::vector<std::size_t> rref(std::vector<std::vector<mpq_class>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> to_rational(const std::vector<Point>& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = mpq_class(static_cast<long>(rows[i][j]));
  return m;
}

std::size_t matrix_rank(const std::vector<Point>& rows, std::size_t cols) {
  auto m = to_rational(rows, cols);
  return rref(m, cols).size();
}

// Primitive integral vector spanning a one-dimensional nullspace.
std::optional<Point> nullspace_line(const std::vector<Point>& rows, std::size_t cols) {
  auto m = to_rational(rows, cols);
  const auto pivots = rref(m, cols);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<mpq_class> x(cols);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
  mpz_class den = 1;
  for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  Point v(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    mpz_class z = x[c].get_num() * (den / x[c].get_den());
    v[c] = z.get_si();
  }
  const std::int64_t g = coordinate_gcd(v);
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_box_point(std::size_t n, const Point& lo, const Point& hi, const std::function<void(const Point&)>& f) {
  Point v = lo;
  if (n == 0) {
    f(v);
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi[i]) {
      v[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++v[i];
  }
}

// Normal vectors u (in the given coordinates) of the facets of the cone
// spanned by `gens`, assumed full dimensional in those coordinates.
std::vector<Point> facets_of(const std::vector<Point>& gens, std::size_t dim) {
  std::set<Point> found;
  if (dim == 0) return {};
  for_each_subset(gens.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<Point> rows;
    for (auto i : subset) rows.push_back(gens[i]);
    auto u = nullspace_line(rows, dim);
    if (!u) return;
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      const auto s = dot(*u, g);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) *u = scale_point(*u, -1);
    found.insert(*u);
  });
  return {found.begin(), found.end()};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Point helpers

Point add_points(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub_points(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale_point(const Point& a, std::int64_t k) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_point(const Point& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t coordinate_gcd(const Point& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

bool weighted_less(const Point& w, const Point& a, const Point& b) {
  const auto da = dot(w, a), db = dot(w, b);
  if (da != db) return da < db;
  return a < b;
}

// ---------------------------------------------------------------------------
// AffineMonoid

AffineMonoid AffineMonoid::from_inequalities(std::vector<Point> inequalities) {
  if (inequalities.empty()) {
    throw Error(ErrorCode::InvalidMonoid, kModule, "at least one inequality is required");
  }
  AffineMonoid m;
  m.rank_ = inequalities.front().size();
  if (m.rank_ == 0) throw Error(ErrorCode::InvalidMonoid, kModule, "ambient rank must be positive");
  for (const auto& w : inequalities) m.check_dimension(w);
  m.inequalities_ = std::move(inequalities);
  m.representation_ = Representation::Inequalities;
  m.derive_cone_data();
  return m;
}

AffineMonoid AffineMonoid::from_generators(std::vector<Point> generators, std::int64_t normality_window) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidMonoid, kModule, "at least one generator is required");
  }
  AffineMonoid m;
  m.rank_ = generators.front().size();
  if (m.rank_ == 0) throw Error(ErrorCode::InvalidMonoid, kModule, "ambient rank must be positive");
  for (const auto& g : generators) {
    m.check_dimension(g);
    if (is_zero_point(g)) throw Error(ErrorCode::InvalidMonoid, kModule, "zero generator");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  m.generators_ = std::move(generators);
  m.representation_ = Representation::Generators;
  m.derive_cone_data();
  m.verify_generator_monoid(normality_window);
  return m;
}

AffineMonoid AffineMonoid::from_both(std::vector<Point> inequalities, std::vector<Point> generators,
                                     Representation authoritative, std::int64_t normality_window) {
  AffineMonoid by_gens = from_generators(generators, normality_window);
  AffineMonoid by_ineq = from_inequalities(inequalities);
  if (by_gens.rank_ != by_ineq.rank_) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "generators and inequalities live in different ranks");
  }
  AffineMonoid m = authoritative == Representation::Generators ? by_gens : by_ineq;
  m.inequalities_ = by_ineq.inequalities_;
  m.generators_ = by_gens.generators_;
  if (!m.descriptions_agree(std::min<std::int64_t>(normality_window, 8))) {
    throw Error(ErrorCode::InvalidMonoid, kModule, "generator and inequality descriptions disagree");
  }
  return m;
}

AffineMonoid AffineMonoid::orthant(std::size_t n) {
  std::vector<Point> ineq;
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    ineq.push_back(e);
  }
  return from_inequalities(std::move(ineq));
}

void AffineMonoid::check_dimension(const Point& v) const {
  if (v.size() != rank_) {
    throw Error(ErrorCode::DimensionMismatch, kModule,
                "vector " + format_point(v) + " has dimension " + std::to_string(v.size()) + ", expected " +
                    std::to_string(rank_));
  }
}

void AffineMonoid::derive_cone_data() {
  if (representation_ == Representation::Inequalities) {
    if (matrix_rank(inequalities_, rank_) != rank_) {
      throw Error(ErrorCode::InvalidMonoid, kModule,
                  "inequalities have rank < n: the cone contains a line (invertible elements)");
    }
    std::set<Point> rays;
    for_each_subset(inequalities_.size(), rank_ - 1, [&](const std::vector<std::size_t>& subset) {
      std::vector<Point> rows;
      for (auto i : subset) rows.push_back(inequalities_[i]);
      auto r = nullspace_line(rows, rank_);
      if (!r) return;
      for (const Point& cand : {*r, scale_point(*r, -1)}) {
        bool ok = std::all_of(inequalities_.begin(), inequalities_.end(),
                              [&](const Point& w) { return dot(w, cand) >= 0; });
        if (ok) rays.insert(cand);
      }
    });
    extreme_rays_.assign(rays.begin(), rays.end());
    grading_.assign(rank_, 0);
    for (const auto& w : inequalities_) grading_ = add_points(grading_, w);
    cone_dimension_ = extreme_rays_.empty() ? 0 : matrix_rank(extreme_rays_, rank_);
    return;
  }

  // Generator representation: work in coordinates where the projection of
  // the span is injective.
  auto m = to_rational(generators_, rank_);
  const auto pivots = rref(m, rank_);
  cone_dimension_ = pivots.size();
  std::vector<Point> projected;
  for (const auto& g : generators_) {
    Point p;
    for (auto c : pivots) p.push_back(g[c]);
    projected.push_back(p);
  }
  const auto facets = facets_of(projected, cone_dimension_);
  facet_normals_.clear();
  grading_.assign(rank_, 0);
  for (const auto& u : facets) {
    Point lifted(rank_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) lifted[pivots[i]] = u[i];
    facet_normals_.push_back(lifted);
    grading_ = add_points(grading_, lifted);
  }
  for (const auto& g : generators_) {
    if (dot(grading_, g) <= 0) {
      throw Error(ErrorCode::InvalidMonoid, kModule,
                  "generated monoid contains a line (has invertible elements other than 0)");
    }
  }
  extreme_rays_.clear();
}

void AffineMonoid::verify_generator_monoid(std::int64_t window) const {
  if (window <= 0) return;
  const Point lo(rank_, -window), hi(rank_, window);
  for_each_box_point(rank_, lo, hi, [&](const Point& v) {
    if (is_zero_point(v) || !in_cone(v)) return;
    if (!contains_by_generators(v)) {
      throw Error(ErrorCode::InvalidMonoid, kModule,
                  "monoid is not normal: " + format_point(v) + " lies in the cone but is not generated");
    }
  });
}

bool AffineMonoid::contains_by_inequalities(const Point& v) const {
  return std::all_of(inequalities_.begin(), inequalities_.end(), [&](const Point& w) { return dot(w, v) >= 0; });
}

bool AffineMonoid::in_cone(const Point& v) const {
  check_dimension(v);
  if (representation_ == Representation::Inequalities) return contains_by_inequalities(v);
  // Generator monoid: v must lie in the span and on the positive side of
  // every facet.
  std::vector<Point> rows = generators_;
  rows.push_back(v);
  if (matrix_rank(rows, rank_) != cone_dimension_) return false;
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const Point& u) { return dot(u, v) >= 0; });
}

bool AffineMonoid::in_interior(const Point& v) const {
  check_dimension(v);
  if (representation_ == Representation::Inequalities) {
    return std::all_of(inequalities_.begin(), inequalities_.end(), [&](const Point& w) { return dot(w, v) > 0; });
  }
  if (!in_cone(v)) return false;
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const Point& u) { return dot(u, v) > 0; });
}

bool AffineMonoid::contains_by_generators(const Point& v) const {
  if (is_zero_point(v)) return true;
  const std::int64_t total = dot(grading_, v);
  if (total <= 0) return false;
  if (!in_cone(v)) return false;
  // Each coefficient c_i satisfies c_i * (grading . g_i) <= grading . v.
  std::size_t budget = kMembershipSearchBudget;
  const std::size_t k = generators_.size();
  std::function<bool(std::size_t, const Point&)> search = [&](std::size_t i, const Point& rest) -> bool {
    if (is_zero_point(rest)) return true;
    if (i == k) return false;
    if (budget-- == 0) {
      throw Error(ErrorCode::Undecidable, kModule,
                  "membership of " + format_point(v) + " is undecidable under the search bounds");
    }
    const std::int64_t gd = dot(grading_, generators_[i]);
    const std::int64_t rd = dot(grading_, rest);
    if (rd < 0) return false;
    const std::int64_t max_c = rd / gd;
    Point cur = rest;
    for (std::int64_t c = 0; c <= max_c; ++c) {
      if (search(i + 1, cur)) return true;
      cur = sub_points(cur, generators_[i]);
    }
    return false;
  };
  return search(0, v);
}

bool AffineMonoid::contains(const Point& v) const {
  check_dimension(v);
  if (representation_ == Representation::Inequalities) return contains_by_inequalities(v);
  return contains_by_generators(v);
}

bool AffineMonoid::descriptions_agree(std::int64_t window) const {
  if (inequalities_.empty() || generators_.empty()) return true;
  bool agree = true;
  const Point lo(rank_, -window), hi(rank_, window);
  for_each_box_point(rank_, lo, hi, [&](const Point& v) {
    if (!agree) return;
    if (contains_by_inequalities(v) != contains_by_generators(v)) agree = false;
  });
  return agree;
}

std::int64_t AffineMonoid::content(const Point& gamma) const {
  check_dimension(gamma);
  if (is_zero_point(gamma)) throw Error(ErrorCode::ZeroElement, kModule, "content of 0 is undefined");
  if (!contains(gamma)) throw Error(ErrorCode::NotMember, kModule, format_point(gamma) + " is not a member");
  return coordinate_gcd(gamma);
}

bool AffineMonoid::is_primitive(const Point& gamma) const { return content(gamma) == 1; }

Ray AffineMonoid::ray_of(const Point& gamma) const {
  const auto c = content(gamma);
  Point v = gamma;
  for (auto& x : v) x /= c;
  return Ray{std::move(v)};
}

std::int64_t AffineMonoid::content_by_divisors(const Point& gamma) const {
  check_dimension(gamma);
  if (is_zero_point(gamma)) throw Error(ErrorCode::ZeroElement, kModule, "content of 0 is undefined");
  std::int64_t bound = 0;
  for (auto x : gamma) bound = std::max<std::int64_t>(bound, x < 0 ? -x : x);
  std::int64_t l = 1;
  for (std::int64_t e = 1; e <= bound; ++e) {
    bool divisible = std::all_of(gamma.begin(), gamma.end(), [&](std::int64_t x) { return x % e == 0; });
    if (!divisible) continue;
    Point q = gamma;
    for (auto& x : q) x /= e;
    if (contains(q)) l = std::lcm(l, e);
  }
  return l;
}

bool AffineMonoid::is_positive_weight(const Point& w) const {
  check_dimension(w);
  if (representation_ == Representation::Inequalities) {
    return std::all_of(extreme_rays_.begin(), extreme_rays_.end(), [&](const Point& r) { return dot(w, r) > 0; });
  }
  return std::all_of(generators_.begin(), generators_.end(), [&](const Point& g) { return dot(w, g) > 0; });
}

std::vector<Point> AffineMonoid::members_up_to(const Point& w, std::int64_t bound) const {
  if (!is_positive_weight(w)) {
    throw Error(ErrorCode::InvalidWeight, kModule, "weight " + format_point(w) + " is not positive on the monoid");
  }
  std::vector<Point> out;
  if (bound < 0) return out;
  if (representation_ == Representation::Inequalities) {
    Point lo(rank_, 0), hi(rank_, 0);
    for (const auto& r : extreme_rays_) {
      const std::int64_t wr = dot(w, r);
      for (std::size_t i = 0; i < rank_; ++i) {
        const std::int64_t mag = r[i] < 0 ? -r[i] : r[i];
        const std::int64_t b = floor_div(bound * mag, wr);
        if (r[i] > 0) hi[i] = std::max(hi[i], b);
        if (r[i] < 0) lo[i] = std::min(lo[i], -b);
      }
    }
    for_each_box_point(rank_, lo, hi, [&](const Point& v) {
      if (dot(w, v) <= bound && contains_by_inequalities(v)) out.push_back(v);
    });
  } else {
    std::set<Point> seen{Point(rank_, 0)};
    std::vector<Point> frontier{Point(rank_, 0)};
    while (!frontier.empty()) {
      std::vector<Point> next;
      for (const auto& p : frontier) {
        for (const auto& g : generators_) {
          Point q = add_points(p, g);
          if (dot(w, q) > bound) continue;
          if (seen.insert(q).second) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) { return weighted_less(w, a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// MonoidIdeal

MonoidIdeal::MonoidIdeal(std::shared_ptr<const AffineMonoid> parent, std::vector<Point> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::InvalidArgument, kModule, "ideal needs a generator");
  for (const auto& g : generators_) {
    if (is_zero_point(g)) throw Error(ErrorCode::InvalidArgument, kModule, "ideal generator must be nonzero");
    if (!parent_->contains(g)) {
      throw Error(ErrorCode::NotMember, kModule, "ideal generator " + format_point(g) + " is not a member");
    }
  }
}

bool MonoidIdeal::contains(const Point& gamma) const {
  if (gamma.size() != parent_->rank()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "dimension mismatch in ideal membership");
  }
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Point& g) { return parent_->contains(sub_points(gamma, g)); });
}

// ---------------------------------------------------------------------------
// TruncationSet

TruncationSet::TruncationSet(std::shared_ptr<const AffineMonoid> monoid, Point weight, std::vector<Point> elements)
    : monoid_(std::move(monoid)), weight_(std::move(weight)) {
  std::sort(elements.begin(), elements.end(),
            [&](const Point& a, const Point& b) { return weighted_less(weight_, a, b); });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (is_zero_point(elements_[i])) {
      throw Error(ErrorCode::InvalidArgument, kModule, "truncation sets never contain 0");
    }
    index_.emplace(elements_[i], i);
  }
  std::map<Point, std::size_t> slice_index;
  positions_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& g = elements_[i];
    const std::int64_t c = coordinate_gcd(g);
    Point v = g;
    for (auto& x : v) x /= c;
    for (std::int64_t d = 1; d < c; ++d) {
      if (c % d == 0 && !index_.count(scale_point(v, d))) {
        throw Error(ErrorCode::InvalidArgument, kModule,
                    "not a truncation set: " + format_point(g) + " present but its divisor " +
                        format_point(scale_point(v, d)) + " is missing");
      }
    }
    auto [it, inserted] = slice_index.emplace(v, slices_.size());
    if (inserted) slices_.push_back(RaySlice{Ray{v}, {}, {}});
    slices_[it->second].multiples.push_back(c);
    slices_[it->second].indices.push_back(i);
    positions_[i] = {it->second, c};
  }
}

TruncationSetPtr TruncationSet::classical(std::vector<std::int64_t> s) {
  static const auto naturals = std::make_shared<const AffineMonoid>(AffineMonoid::orthant(1));
  std::vector<Point> elements;
  for (auto e : s) {
    if (e <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "classical truncation sets hold positive integers");
    elements.push_back(Point{e});
  }
  return std::make_shared<const TruncationSet>(naturals, Point{1}, std::move(elements));
}

std::optional<std::size_t> TruncationSet::index_of(const Point& gamma) const {
  auto it = index_.find(gamma);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TruncationSet::slice_of(const Ray& ray) const {
  for (std::size_t s = 0; s < slices_.size(); ++s)
    if (slices_[s].ray == ray) return s;
  return std::nullopt;
}

TruncationSetPtr TruncationSet::divided_by(std::int64_t m) const {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "divisor must be positive");
  std::vector<Point> kept;
  for (const auto& g : elements_)
    if (index_.count(scale_point(g, m))) kept.push_back(g);
  return std::make_shared<const TruncationSet>(monoid_, weight_, std::move(kept));
}

bool TruncationSet::is_subset_of(const TruncationSet& other) const {
  if (!(*monoid_ == *other.monoid_)) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Point& g) { return other.contains(g); });
}

// ---------------------------------------------------------------------------
// TruncatedMonoid

TruncatedMonoid::TruncatedMonoid(std::shared_ptr<const AffineMonoid> parent, std::optional<MonoidIdeal> ideal,
                                 Point weight, std::int64_t degree_bound)
    : parent_(std::move(parent)), ideal_(std::move(ideal)), weight_(std::move(weight)), degree_bound_(degree_bound) {
  if (weight_.size() != parent_->rank()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "weight has the wrong dimension");
  }
  if (degree_bound_ < 0) throw Error(ErrorCode::InvalidArgument, kModule, "degree bound must be non-negative");
  if (ideal_ && !(ideal_->parent() == *parent_)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "ideal belongs to a different monoid");
  }
  std::vector<Point> kept;
  for (auto& v : parent_->members_up_to(weight_, degree_bound_)) {
    if (is_zero_point(v)) continue;
    if (ideal_ && ideal_->contains(v)) continue;
    kept.push_back(std::move(v));
  }
  elements_ = std::make_shared<const TruncationSet>(parent_, weight_, std::move(kept));
}

bool TruncatedMonoid::contains(const Point& gamma) const { return elements_->contains(gamma); }

std::vector<Ray> TruncatedMonoid::rays() const {
  std::vector<Ray> out;
  for (const auto& s : elements_->rays()) out.push_back(s.ray);
  return out;
}

std::vector<std::int64_t> TruncatedMonoid::ray_truncation_set(const Ray& ray) const {
  if (ray.primitive.size() != parent_->rank()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "ray has the wrong dimension");
  }
  if (is_zero_point(ray.primitive) || !parent_->contains(ray.primitive) || coordinate_gcd(ray.primitive) != 1) {
    throw Error(ErrorCode::NotMember, kModule, format_point(ray.primitive) + " is not a ray of the monoid");
  }
  if (auto s = elements_->slice_of(ray)) return elements_->rays()[*s].multiples;
  return {};
}

bool TruncatedMonoid::ideal_contains(const Point& gamma) const { return ideal_ && ideal_->contains(gamma); }

}  // namespace wittray
