#include <doctest.h>

#include <numeric>
#include <random>
#include <regex>

#include "wittray/error.hpp"
#include "wittray/kgroup.hpp"

using namespace wittray;
using namespace wittray::kgroup;

namespace {

std::string normalize_latex(std::string s) {
  s = std::regex_replace(s, std::regex("[\\s~]+"), "");
  return std::regex_replace(s, std::regex("_\\{([A-Za-z0-9])\\}"), "_$1");
}

RenderOptions with_k() {
  RenderOptions o;
  o.with_ring = true;
  return o;
}

Expr nk(int shift, const Integer& c = 1) { return Expr::atom(Atom{1, shift}, c); }
Expr k(int shift, const Integer& c = 1) { return Expr::atom(Atom{0, shift}, c); }

std::size_t coprime_pairs(std::int64_t h) {
  std::size_t n = 0;
  for (std::int64_t a = 1; a <= h; ++a)
    for (std::int64_t b = 1; b <= h; ++b) {
      std::int64_t x = a, y = b;
      while (y) {
        x %= y;
        std::swap(x, y);
      }
      n += x == 1;
    }
  return n;
}

}  // namespace

TEST_CASE("fundamental theorem expansions") {
  CHECK(to_text(fundamental_theorem(0)) == "K_q");
  CHECK(to_text(fundamental_theorem(1)) == "K_q ⊕ NK_q");
  CHECK(to_text(fundamental_theorem(3)) == "K_q ⊕ 3·NK_q ⊕ 3·N²K_q ⊕ N³K_q");
}

TEST_CASE("Laurent formula") {
  CHECK(to_text(davis_laurent(1)) == "K_q ⊕ K_{q−1} ⊕ 2·NK_q");
  CHECK(davis_laurent(1) == k(0) + k(1) + nk(0, 2));
  CHECK(to_text(davis_laurent(2)) == "K_q ⊕ 2·K_{q−1} ⊕ K_{q−2} ⊕ ⨁_{ρ⊂ℤ²}(NK_q ⊕ NK_{q−1})");
  CHECK(to_latex(davis_laurent(3)) ==
        "K_q\\oplus 3K_{q-1}\\oplus 3K_{q-2}\\oplus K_{q-3}\\oplus "
        "\\bigoplus\\nolimits_{\\rho\\subset \\Z^3}(NK_q\\oplus 2NK_{q-1}\\oplus NK_{q-2})");
  CHECK_THROWS_AS(davis_laurent(0), Error);
}

TEST_CASE("closed quadrant restriction reproduces the relative display") {
  const Expr rel = restrict_to_closed_orthant(davis_laurent(2));
  CHECK(normalize_latex(to_latex(rel, with_k())) ==
        normalize_latex("\\bigoplus\\nolimits_{\\rho\\subset\\N^2} NK_q(k)\\oplus NK_{q-1}(k)"));
  CHECK(to_text(rel) == "⨁_{ρ⊂ℕ²} NK_q ⊕ NK_{q−1}");
}

TEST_CASE("N^n K as ray families") {
  CHECK(nk_power(1) == nk(0));
  CHECK(normalize_latex(to_latex(nk_power(2), with_k())) ==
        normalize_latex("\\bigoplus\\nolimits_{\\rho\\subset\\No^2} NK_q(k)\\oplus NK_{q-1}(k)"));
  CHECK(to_text(nk_power(3)) == "⨁_{ρ⊂ℕ₊³} NK_q ⊕ 2·NK_{q−1} ⊕ NK_{q−2}");
  CHECK(nk_power(2) == Expr::family(RaySet::positive_orthant(2), {{Atom{1, 0}, 1}, {Atom{1, 1}, 1}}));
}

TEST_CASE("polynomial decomposition displays") {
  CHECK(polynomial_decomposition(1) == k(0) + nk(0));
  CHECK(normalize_latex(to_latex(polynomial_decomposition(2), with_k())) ==
        normalize_latex("K_q(k)\\oplus 2NK_q(k)\\oplus \\bigoplus\\nolimits_{\\rho\\subset\\No^2}"
                        "(NK_q(k)\\oplus NK_{q-1}(k))"));
  CHECK(to_text(polynomial_decomposition(2), with_k()) ==
        "K_q(k) ⊕ 2·NK_q(k) ⊕ ⨁_{ρ⊂ℕ₊²}(NK_q(k) ⊕ NK_{q−1}(k))");

  // Second form: NK_q over the closed quadrant, NK_{q-1} over the open one.
  const Expr second = k(0) + Expr::family(RaySet::closed_orthant(2), {{Atom{1, 0}, 1}}) +
                      Expr::family(RaySet::positive_orthant(2), {{Atom{1, 1}, 1}});
  CHECK(normalize_latex(to_latex(second, with_k())) ==
        normalize_latex("K_q(k)\\oplus \\bigoplus\\nolimits_{\\rho\\subset\\N^2} NK_q(k) ~\\oplus~ "
                        "\\bigoplus\\nolimits_{\\rho\\subset\\No^2}NK_{q-1}(k)"));
  CHECK(split_closed_orthant(second) == polynomial_decomposition(2));
}

TEST_CASE("Bass rebundling") {
  const Expr bass = rebundle(polynomial_decomposition(2));
  CHECK(bass == fundamental_theorem(2));
  CHECK(normalize_latex(to_latex(bass, with_k())) ==
        normalize_latex("K_q(k)\\oplus 2NK_q(k)\\oplus N^2K_{q}(k)"));
  for (int n = 1; n <= 6; ++n) CHECK(rebundle(polynomial_decomposition(n)) == fundamental_theorem(n));
}

TEST_CASE("substitution coherence") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(substitute_nk_powers(fundamental_theorem(n)) == polynomial_decomposition(n));
  }
  CHECK(substitute_nk_powers(Expr::atom(Atom{2, 3}, 2)) ==
        Expr::family(RaySet::positive_orthant(2), {{Atom{1, 3}, 2}, {Atom{1, 4}, 2}}));
}

TEST_CASE("L-polynomial algebra") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(0, 4);
  auto random_poly = [&] {
    LPolynomial p;
    for (int i = 0; i < 3; ++i) p = p + LPolynomial::monomial(small(rng), small(rng));
    return p;
  };
  const Expr base = davis_laurent(2) + Expr::atom(Atom{2, 1}, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const LPolynomial p = random_poly(), r = random_poly();
    CHECK(base.shifted(p * r) == base.shifted(p).shifted(r));
    CHECK(base.shifted(p + r) == base.shifted(p) + base.shifted(r));
  }
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      CHECK(LPolynomial::one_plus_l(a) * LPolynomial::one_plus_l(b) == LPolynomial::one_plus_l(a + b));
      CHECK(base.shifted(LPolynomial::one_plus_l(a)).shifted(LPolynomial::one_plus_l(b)) ==
            base.shifted(LPolynomial::one_plus_l(a + b)));
    }
  auto q = LPolynomial::one_plus_l(5).divide(LPolynomial::one_plus_l(2));
  REQUIRE(q);
  CHECK(*q == LPolynomial::one_plus_l(3));
  CHECK_FALSE(LPolynomial::one_plus_l(1).divide(LPolynomial::one_plus_l(2)));
  CHECK_FALSE((LPolynomial::monomial(0) + LPolynomial::monomial(2)).divide(LPolynomial::one_plus_l(1)));
}

TEST_CASE("canonical form") {
  CHECK(k(0) + nk(1) == nk(1) + k(0));
  CHECK(k(0).scaled(0).is_zero());
  CHECK(to_text(Expr{}) == "0");
  CHECK_THROWS_AS(k(0, -1), Error);
  CHECK(Expr::family(RaySet::lattice(1), {{Atom{1, 0}, 1}}) == nk(0, 2));
  CHECK(Expr::family(RaySet::positive_orthant(1), {{Atom{1, 2}, 3}}) == nk(2, 3));
  // Embedded orthants over distinct coordinate subsets stay distinct.
  const Expr a = Expr::family(RaySet::embedded_positive_orthant(3, {1, 2}), {{Atom{1, 0}, 1}});
  const Expr b = Expr::family(RaySet::embedded_positive_orthant(3, {2, 3}), {{Atom{1, 0}, 1}});
  CHECK(a + b != a.scaled(2));
  CHECK(forget_embedding(a + b) == forget_embedding(a.scaled(2)));
  CHECK(to_text(a) == "⨁_{ρ⊂ℕ₊^{1,2}} NK_q");
}

TEST_CASE("numeric q") {
  RenderOptions o;
  o.q = "1";
  CHECK(to_text(davis_laurent(2), o) == "K_1 ⊕ 2·K_0 ⊕ K_{−1} ⊕ ⨁_{ρ⊂ℤ²}(NK_1 ⊕ NK_0)");
  CHECK(to_latex(davis_laurent(1), o) == "K_1\\oplus K_0\\oplus 2NK_1");
}

TEST_CASE("ray enumeration") {
  CHECK(enumerate_rays(RaySet::positive_orthant(2), 1) == std::vector<Point>{{1, 1}});
  CHECK(enumerate_rays(RaySet::positive_orthant(2), 3) ==
        std::vector<Point>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
  for (std::int64_t h : {1, 2, 7, 40}) CHECK(enumerate_rays(RaySet::lattice(1), h).size() == 2);
  for (std::int64_t h = 1; h <= 50; ++h)
    CHECK(enumerate_rays(RaySet::positive_orthant(2), h).size() == coprime_pairs(h));
  CHECK(enumerate_rays(RaySet::embedded_positive_orthant(3, {1, 3}), 2) ==
        std::vector<Point>{{1, 0, 1}, {1, 0, 2}, {2, 0, 1}});
  CHECK(enumerate_rays(RaySet::single({2, 3}), 2).empty());
  CHECK_THROWS_AS(RaySet::single({2, 4}), Error);
  CHECK_THROWS_AS(enumerate_rays(RaySet::positive_orthant(2), 0), Error);
}

TEST_CASE("quadrant partition of the Laurent rays") {
  for (std::int64_t h = 1; h <= 12; ++h) {
    CAPTURE(h);
    const auto all = enumerate_rays(RaySet::lattice(2), h);
    std::size_t closed = 0, axes = 0, open = 0;
    for (const auto& v : all) {
      if (v[0] < 0 || v[1] < 0) continue;
      ++closed;
      (v[0] > 0 && v[1] > 0 ? open : axes) += 1;
    }
    const auto positive = enumerate_rays(RaySet::positive_orthant(2), h);
    CHECK(axes == 2);
    CHECK(open == positive.size());
    CHECK(closed == enumerate_rays(RaySet::closed_orthant(2), h).size());
    // Four sign quadrants of N_+^2 plus the four axis rays.
    CHECK(all.size() == 4 * positive.size() + 4);

    const Expr inst = instantiate_rays(restrict_to_closed_orthant(davis_laurent(2)), h);
    const Expr blocks = instantiate_rays(
        Expr::family(RaySet::embedded_positive_orthant(2, {1}), {{Atom{1, 0}, 1}, {Atom{1, 1}, 1}}) +
            Expr::family(RaySet::embedded_positive_orthant(2, {2}), {{Atom{1, 0}, 1}, {Atom{1, 1}, 1}}) +
            Expr::family(RaySet::positive_orthant(2), {{Atom{1, 0}, 1}, {Atom{1, 1}, 1}}),
        h);
    CHECK(inst == blocks);
  }
}

TEST_CASE("instantiation keeps atoms and lists rays") {
  const Expr e = instantiate_rays(polynomial_decomposition(2), 2);
  CHECK(e.atoms() == (k(0) + nk(0, 2)).atoms());
  CHECK(e.families().size() == 3);
  CHECK(to_text(instantiate_rays(nk_power(2), 1)) == "⨁_{ρ=(1,1)} NK_q ⊕ NK_{q−1}");
}

TEST_CASE("signed permutations") {
  const auto w3 = wreath_group(3);
  CHECK(w3.size() == 48);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, w3.size() - 1);
  const Point x{3, -1, 7};
  for (int t = 0; t < 100; ++t) {
    const auto& a = w3[pick(rng)];
    const auto& b = w3[pick(rng)];
    const auto& c = w3[pick(rng)];
    CHECK((a * b).apply(x) == a.apply(b.apply(x)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == SignedPermutation::identity(3));
  }
  CHECK(wreath_group(0).size() == 1);
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {1, 1}), Error);
}

TEST_CASE("wreath orbits") {
  auto w = wreath_orbit(2, 1);
  CHECK(w.enumerated);
  CHECK(w.orbit_size == 4);
  CHECK(w.stabilizer_order == 2);
  w = wreath_orbit(3, 0);
  CHECK(w.orbit_size == 1);
  CHECK(w.stabilizer_order == 48);
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const auto o = wreath_orbit(n, r);
      CHECK(o.orbit_size == (binomial(n, r) << r));
      CHECK(o.stabilizer_order == factorial(r) * (factorial(n - r) << (n - r)));
      CHECK(o.orbit_size * o.stabilizer_order == (factorial(n) << n));
      const auto s = symmetric_orbit(n, r);
      CHECK(s.orbit_size == binomial(n, r));
      CHECK(s.stabilizer_order == factorial(r) * factorial(n - r));
    }
  CHECK_FALSE(wreath_orbit(9, 4).enumerated);
  CHECK(wreath_orbit(9, 4).orbit_size * wreath_orbit(9, 4).stabilizer_order == (factorial(9) << 9));
  CHECK_THROWS_AS(wreath_orbit(2, 3), Error);
}
