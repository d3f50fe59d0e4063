#include "wittray/witt.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "witt-ring";

std::string format_point(const Point& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void require_same_shape(const WittVector& a, const WittVector& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch, kModule,
                "ring mismatch: " + a.ring().describe() + " vs " + b.ring().describe());
  }
  if (a.base() != b.base() && !(*a.base() == *b.base())) {
    throw Error(ErrorCode::BaseMismatch, kModule, "Witt vectors live on different truncation sets");
  }
}

// Values of the variables a_d (and b_d) along one ray slice.
std::vector<Elem> slice_values(const TruncationSet::RaySlice& slice, const WittVector& a, const WittVector* b) {
  const std::int64_t top = slice.multiples.empty() ? 0 : slice.multiples.back();
  std::vector<Elem> vals(static_cast<std::size_t>(2 * top));
  for (std::size_t k = 0; k < slice.multiples.size(); ++k) {
    const auto e = slice.multiples[k];
    vals[UniversalPolynomials::a(e)] = a[slice.indices[k]];
    if (b) vals[UniversalPolynomials::b(e)] = (*b)[slice.indices[k]];
  }
  return vals;
}

enum class BinaryOp { Sum, Product };

WittVector apply_binary(const WittVector& a, const WittVector& b, BinaryOp op) {
  require_same_shape(a, b);
  auto& polys = UniversalPolynomials::instance();
  WittVector out(a.base(), a.ring());
  for (const auto& slice : a.base()->rays()) {
    const auto vals = slice_values(slice, a, &b);
    for (std::size_t k = 0; k < slice.multiples.size(); ++k) {
      const auto e = slice.multiples[k];
      const MultiPoly& p = op == BinaryOp::Sum ? polys.sum(e) : polys.product(e);
      out.set(slice.indices[k], p.evaluate(a.ring(), vals));
    }
  }
  return out;
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t k = 1; k < n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Universal polynomials

UniversalPolynomials& UniversalPolynomials::instance() {
  static UniversalPolynomials polys;
  return polys;
}

MultiPoly UniversalPolynomials::ghost_polynomial(std::int64_t n, bool second_vector) {
  MultiPoly w;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto var = second_vector ? b(d) : a(d);
    w += MultiPoly::variable(var).pow(static_cast<unsigned>(n / d)).scaled(Rational(d));
  }
  return w;
}

const MultiPoly& UniversalPolynomials::solve(std::map<std::int64_t, MultiPoly>& cache, std::int64_t n,
                                             const Target& target) {
  std::lock_guard lock(mutex_);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  MultiPoly rhs = target(n);
  for (auto d : proper_divisors(n)) {
    const MultiPoly& pd = solve(cache, d, target);
    rhs -= pd.pow(static_cast<unsigned>(n / d)).scaled(Rational(d));
  }
  MultiPoly pn = rhs.scaled(Rational(1, 1) / Rational(n));
  if (!pn.is_integral()) {
    throw Error(ErrorCode::Internal, kModule,
                "universal Witt polynomial of index " + std::to_string(n) + " has a non-integral coefficient");
  }
  return cache.emplace(n, std::move(pn)).first->second;
}

const MultiPoly& UniversalPolynomials::sum(std::int64_t e) {
  return solve(sums_, e, [](std::int64_t n) { return ghost_polynomial(n, false) + ghost_polynomial(n, true); });
}

const MultiPoly& UniversalPolynomials::product(std::int64_t e) {
  return solve(products_, e, [](std::int64_t n) { return ghost_polynomial(n, false) * ghost_polynomial(n, true); });
}

const MultiPoly& UniversalPolynomials::negation(std::int64_t e) {
  return solve(negations_, e, [](std::int64_t n) { return ghost_polynomial(n, false).scaled(Rational(-1)); });
}

const MultiPoly& UniversalPolynomials::frobenius(std::int64_t m, std::int64_t e) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "Frobenius index must be positive");
  std::lock_guard lock(mutex_);
  auto& cache = frobenius_[m];
  return solve(cache, e, [m](std::int64_t n) { return ghost_polynomial(m * n, false); });
}

UniversalPolynomials::Family UniversalPolynomials::family(std::span<const std::int64_t> truncation_set) {
  std::set<std::int64_t> s(truncation_set.begin(), truncation_set.end());
  for (auto e : s) {
    if (e <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "truncation sets hold positive integers");
    for (auto d : proper_divisors(e)) {
      if (!s.count(d)) {
        throw Error(ErrorCode::InvalidArgument, kModule,
                    "set is not divisor closed: " + std::to_string(e) + " without " + std::to_string(d));
      }
    }
  }
  Family f;
  f.truncation_set.assign(s.begin(), s.end());
  for (auto e : s) {
    f.sums.emplace(e, sum(e));
    f.products.emplace(e, product(e));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Special vectors

WittVector zero_vector(TruncationSetPtr base, const CoefficientRing& ring) { return WittVector(std::move(base), ring); }

WittVector delta_prim(TruncationSetPtr base, const CoefficientRing& ring) {
  WittVector out(base, ring);
  for (std::size_t i = 0; i < base->size(); ++i)
    if (base->ray_position(i).second == 1) out.set(i, ring.one());
  return out;
}

WittVector teichmuller(TruncationSetPtr base, const CoefficientRing& ring, const Elem& r, const Point& gamma) {
  if (is_zero_point(gamma)) throw Error(ErrorCode::ZeroElement, kModule, "r[0] is not a pointed function");
  auto i = base->index_of(gamma);
  if (!i) throw Error(ErrorCode::NotMember, kModule, format_point(gamma) + " is not in the truncation set");
  WittVector out(base, ring);
  out.set(*i, r);
  return out;
}

WittVector witt_integer(TruncationSetPtr base, const CoefficientRing& ring, const Integer& n) {
  const auto integers = CoefficientRing::integers();
  GhostVector g(base, integers, std::vector<Elem>(base->size(), integers.from_integer(n)));
  return map_ring(from_ghost(g), ring);
}

// ---------------------------------------------------------------------------
// Ghost map

GhostVector ghost(const WittVector& a) {
  const auto& ring = a.ring();
  GhostVector out(a.base(), ring);
  for (const auto& slice : a.base()->rays()) {
    for (std::size_t k = 0; k < slice.multiples.size(); ++k) {
      const auto n = slice.multiples[k];
      Elem acc = ring.zero();
      for (std::size_t j = 0; j <= k; ++j) {
        const auto d = slice.multiples[j];
        if (n % d != 0) continue;
        const Elem& ad = a[slice.indices[j]];
        if (ad.is_zero()) continue;
        acc = ring.add(acc, ring.scale(ring.pow(ad, static_cast<unsigned long>(n / d)), Integer(d)));
      }
      out.set(slice.indices[k], std::move(acc));
    }
  }
  return out;
}

WittVector from_ghost(const GhostVector& g) {
  const auto& ring = g.ring();
  WittVector out(g.base(), ring);
  for (const auto& slice : g.base()->rays()) {
    for (std::size_t k = 0; k < slice.multiples.size(); ++k) {
      const auto n = slice.multiples[k];
      Elem rest = g[slice.indices[k]];
      for (std::size_t j = 0; j < k; ++j) {
        const auto d = slice.multiples[j];
        if (n % d != 0) continue;
        const Elem& ad = out[slice.indices[j]];
        if (ad.is_zero()) continue;
        rest = ring.sub(rest, ring.scale(ring.pow(ad, static_cast<unsigned long>(n / d)), Integer(d)));
      }
      auto q = ring.divide_exact(rest, Integer(n));
      if (!q) {
        const auto& eta = g.base()->elements()[slice.indices[k]];
        throw Error(ErrorCode::NonExactDivision, kModule,
                    "ghost inversion fails at component " + format_point(eta) + ": " + std::to_string(n) +
                        "*a = " + ring.to_string(rest) + " has no unique solution in " + ring.describe());
      }
      out.set(slice.indices[k], std::move(*q));
    }
  }
  return out;
}

GhostVector ghost_add(const GhostVector& x, const GhostVector& y) {
  GhostVector out(x.base(), x.ring());
  for (std::size_t i = 0; i < x.coords().size(); ++i) out.set(i, x.ring().add(x[i], y[i]));
  return out;
}

GhostVector ghost_mul(const GhostVector& x, const GhostVector& y) {
  GhostVector out(x.base(), x.ring());
  for (std::size_t i = 0; i < x.coords().size(); ++i) out.set(i, x.ring().mul(x[i], y[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Ring operations

WittVector add(const WittVector& a, const WittVector& b) { return apply_binary(a, b, BinaryOp::Sum); }

WittVector mul(const WittVector& a, const WittVector& b) { return apply_binary(a, b, BinaryOp::Product); }

WittVector neg(const WittVector& a) {
  auto& polys = UniversalPolynomials::instance();
  WittVector out(a.base(), a.ring());
  for (const auto& slice : a.base()->rays()) {
    const auto vals = slice_values(slice, a, nullptr);
    for (std::size_t k = 0; k < slice.multiples.size(); ++k)
      out.set(slice.indices[k], polys.negation(slice.multiples[k]).evaluate(a.ring(), vals));
  }
  return out;
}

WittVector sub(const WittVector& a, const WittVector& b) { return add(a, neg(b)); }

// ---------------------------------------------------------------------------
// Operators

WittVector frobenius(std::int64_t m, const WittVector& a) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "Frobenius index must be positive");
  auto& polys = UniversalPolynomials::instance();
  const auto& source = *a.base();
  auto target = source.divided_by(m);
  WittVector out(target, a.ring());
  for (const auto& slice : target->rays()) {
    const auto s = source.slice_of(slice.ray);
    const auto vals = slice_values(source.rays()[*s], a, nullptr);
    for (std::size_t k = 0; k < slice.multiples.size(); ++k)
      out.set(slice.indices[k], polys.frobenius(m, slice.multiples[k]).evaluate(a.ring(), vals));
  }
  return out;
}

WittVector verschiebung(std::int64_t m, const WittVector& a, const TruncationSetPtr& target) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "Verschiebung index must be positive");
  if (!(target->monoid() == a.base()->monoid())) {
    throw Error(ErrorCode::BaseMismatch, kModule, "Verschiebung target lives over a different monoid");
  }
  if (!target->divided_by(m)->is_subset_of(*a.base())) {
    throw Error(ErrorCode::BaseMismatch, kModule, "Verschiebung source does not cover target/m");
  }
  WittVector out(target, a.ring());
  const auto& elems = a.base()->elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (auto j = target->index_of(scale_point(elems[i], m))) out.set(*j, a[i]);
  }
  return out;
}

WittVector verschiebung(std::int64_t m, const WittVector& a) { return verschiebung(m, a, a.base()); }

WittVector restrict_to(const WittVector& a, const TruncationSetPtr& subset) {
  if (!subset->is_subset_of(*a.base())) {
    throw Error(ErrorCode::BaseMismatch, kModule, "restriction target is not a subset of the base");
  }
  WittVector out(subset, a.ring());
  for (std::size_t i = 0; i < subset->size(); ++i) out.set(i, a.at(subset->elements()[i]));
  return out;
}

WittVector map_ring(const WittVector& a, const CoefficientRing& target) {
  WittVector out(a.base(), target);
  for (std::size_t i = 0; i < a.coords().size(); ++i) out.set(i, target.convert(a.ring(), a[i]));
  return out;
}

WittVector witt_one_minus(TruncationSetPtr base, const CoefficientRing& ring, const Elem& r, std::int64_t m,
                          const Ray& ray) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "m must be positive");
  if (!base->contains(ray.primitive)) {
    // The whole ray is truncated away.
    return zero_vector(std::move(base), ring);
  }
  return verschiebung(m, teichmuller(base, ring, r, ray.primitive));
}

// ---------------------------------------------------------------------------
// Ray decomposition

WittVector ray_idempotent(TruncationSetPtr base, const CoefficientRing& ring, const Ray& ray) {
  return teichmuller(std::move(base), ring, ring.one(), ray.primitive);
}

std::map<Ray, WittVector> ray_decompose(const WittVector& a) {
  std::map<Ray, WittVector> parts;
  for (const auto& slice : a.base()->rays()) {
    auto classical = TruncationSet::classical(slice.multiples);
    std::vector<Elem> coords;
    for (auto i : slice.indices) coords.push_back(a[i]);
    parts.emplace(slice.ray, WittVector(classical, a.ring(), std::move(coords)));
  }
  return parts;
}

WittVector ray_assemble(const std::map<Ray, WittVector>& parts, TruncationSetPtr base, const CoefficientRing& ring) {
  WittVector out(base, ring);
  for (const auto& [ray, part] : parts) {
    auto s = base->slice_of(ray);
    if (!s) throw Error(ErrorCode::BaseMismatch, kModule, "ray " + format_point(ray.primitive) + " not in base");
    const auto& slice = base->rays()[*s];
    if (!(part.ring() == ring)) throw Error(ErrorCode::RingMismatch, kModule, "component ring mismatch");
    std::vector<std::int64_t> multiples;
    for (const auto& p : part.base()->elements()) multiples.push_back(p.front());
    if (multiples != slice.multiples) {
      throw Error(ErrorCode::BaseMismatch, kModule,
                  "component for ray " + format_point(ray.primitive) + " has the wrong truncation set");
    }
    for (std::size_t k = 0; k < slice.indices.size(); ++k) out.set(slice.indices[k], part[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Module action

Elem act_on_graded(const WittVector& omega, const Point& eta) {
  if (is_zero_point(eta)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "graded modules here have no degree-0 term");
  }
  auto i = omega.base()->index_of(eta);
  if (!i) {
    throw Error(ErrorCode::NotMember, kModule,
                "degree " + format_point(eta) + " lies outside the truncation of the acting Witt vector");
  }
  // Only the ray of eta contributes; compute that ghost component directly.
  const auto [s, n] = omega.base()->ray_position(*i);
  const auto& slice = omega.base()->rays()[s];
  const auto& ring = omega.ring();
  Elem acc = ring.zero();
  for (std::size_t j = 0; j < slice.multiples.size(); ++j) {
    const auto d = slice.multiples[j];
    if (d > n) break;
    if (n % d != 0) continue;
    const Elem& ad = omega[slice.indices[j]];
    if (ad.is_zero()) continue;
    acc = ring.add(acc, ring.scale(ring.pow(ad, static_cast<unsigned long>(n / d)), Integer(d)));
  }
  return acc;
}

std::vector<Elem> act_on_graded(const WittVector& omega, const Point& eta, std::span<const Elem> element) {
  const Elem scalar = act_on_graded(omega, eta);
  std::vector<Elem> out;
  out.reserve(element.size());
  for (const auto& x : element) out.push_back(omega.ring().mul(scalar, x));
  return out;
}

Elem teichmuller_action(const std::shared_ptr<const AffineMonoid>& monoid, const CoefficientRing& ring,
                        const Elem& r, const Point& gamma, const Point& eta) {
  if (is_zero_point(eta)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "graded modules here have no degree-0 term");
  }
  if (is_zero_point(gamma)) throw Error(ErrorCode::ZeroElement, kModule, "r[0] is not a pointed function");
  const auto n = monoid->content(eta);
  const auto ray = monoid->ray_of(eta);
  std::vector<Point> segment;
  for (std::int64_t d = 1; d <= n; ++d) segment.push_back(scale_point(ray.primitive, d));
  auto base = std::make_shared<const TruncationSet>(monoid, ray.primitive, std::move(segment));
  if (!base->contains(gamma)) return ring.zero();
  return act_on_graded(teichmuller(base, ring, r, gamma), eta);
}

}  // namespace wittray
