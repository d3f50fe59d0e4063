#include "doctest.h"

#include <random>

#include "oracles/witt_oracle.hpp"
#include "support.hpp"
#include "wittray/error.hpp"
#include "wittray/witt.hpp"

using namespace wittray;

namespace {

MultiPoly var(std::uint32_t v) { return MultiPoly::variable(v); }
MultiPoly a(std::int64_t d) { return var(UniversalPolynomials::a(d)); }
MultiPoly b(std::int64_t d) { return var(UniversalPolynomials::b(d)); }

std::vector<mpq_class> as_rationals(const WittVector& x) {
  std::vector<mpq_class> out;
  for (const auto& c : x.coords()) out.push_back(c.is_zero() ? mpq_class(0) : c.coeffs()[0]);
  return out;
}

WittVector from_rationals(const TruncationSetPtr& base, const CoefficientRing& ring, const std::vector<mpq_class>& v) {
  WittVector out(base, ring);
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, ring.from_rational(v[i]));
  return out;
}

}  // namespace

TEST_CASE("universal polynomials in low degree") {
  auto& u = UniversalPolynomials::instance();
  CHECK(u.sum(1) == a(1) + b(1));
  CHECK(u.product(1) == a(1) * b(1));
  CHECK(u.sum(2) == a(2) + b(2) - a(1) * b(1));
  CHECK(u.product(2) == a(1).pow(2) * b(2) + a(2) * b(1).pow(2) + (a(2) * b(2)).scaled(2));
  for (std::int64_t e = 1; e <= 12; ++e) {
    CHECK(u.sum(e).is_integral());
    CHECK(u.product(e).is_integral());
    CHECK(u.negation(e).is_integral());
  }
  const std::int64_t s[] = {1, 2, 3};
  auto fam = u.family(s);
  CHECK(fam.sums.at(3).is_integral());
  const std::int64_t bad[] = {1, 4};
  CHECK_THROWS_AS(u.family(bad), Error);
}

TEST_CASE("ghost components on a line") {
  auto z = CoefficientRing::integers();
  auto base = test::line_truncation(2);
  WittVector x(base, z, {z.from_integer(3), z.from_integer(5)});
  auto g = ghost(x);
  CHECK(g[0] == z.from_integer(3));
  CHECK(g[1] == z.from_integer(9 + 10));
  CHECK(ghost(delta_prim(base, z)) == GhostVector(base, z, {z.one(), z.one()}));
}

TEST_CASE("ghost of a Teichmuller vector") {
  auto z = CoefficientRing::integers();
  auto cone = test::shared(test::cone_monoid_by_generators());
  auto base = TruncatedMonoid(cone, std::nullopt, {1, 0}, 6).elements();
  auto g = ghost(teichmuller(base, z, z.from_integer(3), {2, 2}));
  for (std::size_t i = 0; i < base->size(); ++i) {
    const auto& eta = base->elements()[i];
    if (eta == Point{2, 2}) CHECK(g[i] == z.from_integer(6));
    else if (eta == Point{4, 4}) CHECK(g[i] == z.from_integer(18));
    else if (eta == Point{6, 6}) CHECK(g[i] == z.from_integer(54));
    else CHECK(g[i].is_zero());
  }
  CHECK_THROWS_AS(teichmuller(base, z, z.one(), {0, 0}), Error);
  CHECK_THROWS_AS(teichmuller(base, z, z.one(), {0, 1}), Error);
  CHECK(teichmuller(base, z, z.zero(), {1, 1}) == zero_vector(base, z));
}

TEST_CASE("inverse ghost map") {
  auto q = CoefficientRing::rationals();
  auto z = CoefficientRing::integers();
  auto base = test::line_truncation(2);
  auto x = from_ghost(GhostVector(base, q, {q.zero(), q.from_integer(2)}));
  CHECK(x == WittVector(base, q, {q.zero(), q.one()}));
  CHECK(from_ghost(GhostVector(base, z, {z.one(), z.one()})) == delta_prim(base, z));
  CHECK_THROWS_AS(from_ghost(GhostVector(base, z, {z.zero(), z.one()})), Error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = test::random_truncation(rng);
    auto y = test::random_witt(rng, t.elements(), z);
    CHECK(from_ghost(ghost(y)) == y);
  }
}

TEST_CASE("sum and product in length two") {
  auto z = CoefficientRing::integers();
  auto base = test::line_truncation(2);
  auto w = [&](int p, int r) { return WittVector(base, z, {z.from_integer(p), z.from_integer(r)}); };
  CHECK(add(w(2, 3), w(5, 7)) == w(7, 3 + 7 - 10));
  CHECK(mul(w(2, 3), w(5, 7)) == w(10, 4 * 7 + 3 * 25 + 2 * 21));
}

TEST_CASE("ring operations match the ghost-inversion reference") {
  auto z = CoefficientRing::integers();
  auto q = CoefficientRing::rationals();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = test::random_truncation(rng);
    const auto& elems = t.elements()->elements();
    auto x = test::random_witt(rng, t.elements(), z);
    auto y = test::random_witt(rng, t.elements(), z);
    auto sum = oracle::add(elems, as_rationals(x), as_rationals(y));
    auto prod = oracle::mul(elems, as_rationals(x), as_rationals(y));
    CHECK(add(x, y) == from_rationals(t.elements(), z, sum));
    CHECK(mul(x, y) == from_rationals(t.elements(), z, prod));
    CHECK(map_ring(sub(x, y), q) == sub(map_ring(x, q), map_ring(y, q)));
  }
}

TEST_CASE("ring axioms and functoriality in the coefficients") {
  auto z = CoefficientRing::integers();
  auto f5 = CoefficientRing::prime_field(5);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = test::random_truncation(rng);
    auto base = t.elements();
    auto x = test::random_witt(rng, base, z);
    auto y = test::random_witt(rng, base, z);
    auto w = test::random_witt(rng, base, z);
    CHECK(add(x, y) == add(y, x));
    CHECK(mul(x, y) == mul(y, x));
    CHECK(mul(x, add(y, w)) == add(mul(x, y), mul(x, w)));
    CHECK(mul(mul(x, y), w) == mul(x, mul(y, w)));
    CHECK(add(x, neg(x)) == zero_vector(base, z));
    CHECK(mul(x, delta_prim(base, z)) == x);
    CHECK(map_ring(mul(x, y), f5) == mul(map_ring(x, f5), map_ring(y, f5)));
    CHECK(map_ring(add(x, y), f5) == add(map_ring(x, f5), map_ring(y, f5)));
    auto xp = map_ring(x, f5);
    CHECK(mul(xp, delta_prim(base, f5)) == xp);
  }
}

TEST_CASE("operations reject mismatched operands") {
  auto z = CoefficientRing::integers();
  auto q = CoefficientRing::rationals();
  auto base = test::line_truncation(3);
  CHECK_THROWS_AS(add(delta_prim(base, z), delta_prim(base, q)), Error);
  CHECK_THROWS_AS(mul(delta_prim(base, z), delta_prim(test::line_truncation(4), z)), Error);
}

TEST_CASE("integers embed through the ghost map") {
  auto z = CoefficientRing::integers();
  auto base = test::line_truncation(6);
  auto three = witt_integer(base, z, 3);
  CHECK(three == add(add(delta_prim(base, z), delta_prim(base, z)), delta_prim(base, z)));
}

TEST_CASE("ray idempotents split the ring") {
  auto z = CoefficientRing::integers();
  auto n2 = test::shared(AffineMonoid::orthant(2));
  auto base = TruncatedMonoid(n2, std::nullopt, {1, 1}, 5).elements();
  WittVector total = zero_vector(base, z);
  std::vector<WittVector> idem;
  for (const auto& s : base->rays()) idem.push_back(ray_idempotent(base, z, s.ray));
  for (std::size_t i = 0; i < idem.size(); ++i) {
    total = add(total, idem[i]);
    for (std::size_t j = 0; j < idem.size(); ++j)
      CHECK(mul(idem[i], idem[j]) == (i == j ? idem[i] : zero_vector(base, z)));
  }
  CHECK(total == delta_prim(base, z));

  std::mt19937_64 rng(8);
  auto x = test::random_witt(rng, base, z);
  CHECK(ray_assemble(ray_decompose(x), base, z) == x);
  // [v] x keeps exactly the ray of v.
  const auto& first = base->rays().front();
  auto px = mul(idem.front(), x);
  for (std::size_t i = 0; i < base->size(); ++i) {
    const bool on_ray = base->ray_position(i).first == 0;
    CHECK(px[i] == (on_ray ? x[i] : z.zero()));
  }
  CHECK(ray_decompose(x).at(first.ray).base()->size() == first.multiples.size());
}

TEST_CASE("Frobenius and Verschiebung identities") {
  for (auto ring : {CoefficientRing::integers(), CoefficientRing::prime_field(7)}) {
    auto base = test::line_truncation(12);
    std::mt19937_64 rng(41);
    for (std::int64_t m : {2, 3, 4}) {
      auto x = test::random_witt(rng, base, ring);
      auto y = test::random_witt(rng, base, ring);
      auto small = base->divided_by(m);
      auto xs = restrict_to(x, small);
      // F_m V_m = m on W_{T/m}.
      CHECK(frobenius(m, verschiebung(m, xs, base)) == mul(witt_integer(small, ring, m), xs));
      // Projection formula.
      CHECK(mul(verschiebung(m, xs, base), y) == verschiebung(m, mul(xs, frobenius(m, y)), base));
      CHECK(frobenius(m, mul(x, y)) == mul(frobenius(m, x), frobenius(m, y)));
      for (std::int64_t n : {2, 3, 4}) {
        auto fmn = frobenius(m * n, x);
        CHECK(frobenius(m, frobenius(n, x)) == restrict_to(fmn, base->divided_by(m)->divided_by(n)));
        CHECK(verschiebung(m, verschiebung(n, x)) == verschiebung(m * n, x));
      }
      auto r = test::random_elem(rng, ring);
      auto one_minus = witt_one_minus(base, ring, r, m, {{1}});
      auto tr = restrict_to(teichmuller(base, ring, r, {1}), small);
      CHECK(mul(one_minus, x) == verschiebung(m, mul(tr, frobenius(m, x)), base));
    }
  }
  auto z = CoefficientRing::integers();
  CHECK_THROWS_AS(frobenius(0, delta_prim(test::line_truncation(3), z)), Error);
}

TEST_CASE("ghost identities for the operators") {
  auto z = CoefficientRing::integers();
  auto base = test::line_truncation(12);
  std::mt19937_64 rng(2);
  auto x = test::random_witt(rng, base, z);
  auto gx = ghost(x);
  for (std::int64_t m : {2, 3}) {
    auto gv = ghost(verschiebung(m, x));
    auto gf = ghost(frobenius(m, x));
    for (std::int64_t e = 1; e <= 12; ++e) {
      const auto expected = e % m == 0 ? z.scale(gx[e / m - 1], m) : z.zero();
      CHECK(gv[e - 1] == expected);
      if (m * e <= 12) CHECK(gf[e - 1] == gx[m * e - 1]);
    }
  }
}

TEST_CASE("action on graded pieces") {
  auto z = CoefficientRing::integers();
  auto cone = test::shared(test::cone_monoid_by_generators());
  auto base = TruncatedMonoid(cone, std::nullopt, {1, 0}, 4).elements();
  auto r = z.from_integer(5);
  CHECK(act_on_graded(teichmuller(base, z, r, {2, 2}), {4, 4}) == z.from_integer(2 * 25));
  CHECK(act_on_graded(teichmuller(base, z, r, {2, 2}), {2, 1}).is_zero());
  CHECK(act_on_graded(delta_prim(base, z), {3, 2}) == z.one());
  CHECK_THROWS_AS(act_on_graded(delta_prim(base, z), {0, 0}), Error);
  CHECK(teichmuller_action(cone, z, r, {1, 1}, {3, 3}) == z.from_integer(125));
  CHECK(teichmuller_action(cone, z, r, {1, 1}, {3, 2}).is_zero());
  // Continuity: only divisors of eta act on it.
  std::size_t nonzero = 0;
  for (const auto& g : base->elements())
    if (!act_on_graded(teichmuller(base, z, z.one(), g), {4, 2}).is_zero()) ++nonzero;
  CHECK(nonzero == 2);
}
