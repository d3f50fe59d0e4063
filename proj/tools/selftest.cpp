#include "selftest.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

#include "wittray/algebra.hpp"
#include "wittray/hochschild.hpp"
#include "wittray/kgroup.hpp"
#include "wittray/witt.hpp"

namespace wittray::cli {

namespace {

WittVector random_vector(TruncationSetPtr base, const CoefficientRing& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Elem> c;
  for (std::size_t i = 0; i < base->size(); ++i) c.push_back(ring.from_integer(coef(rng)));
  return WittVector(base, ring, std::move(c));
}

bool ghost_homomorphism() {
  std::mt19937_64 rng(1);
  const auto ring = CoefficientRing::integers();
  auto base = TruncatedMonoid(std::make_shared<const AffineMonoid>(AffineMonoid::orthant(2)), std::nullopt, {1, 1}, 4)
                  .elements();
  for (int t = 0; t < 20; ++t) {
    auto a = random_vector(base, ring, rng), b = random_vector(base, ring, rng);
    if (ghost(add(a, b)) != ghost_add(ghost(a), ghost(b))) return false;
    if (ghost(mul(a, b)) != ghost_mul(ghost(a), ghost(b))) return false;
  }
  return true;
}

bool frobenius_verschiebung() {
  std::mt19937_64 rng(2);
  const auto ring = CoefficientRing::integers();
  auto base = TruncatedMonoid(std::make_shared<const AffineMonoid>(AffineMonoid::orthant(1)), std::nullopt, {1}, 12)
                  .elements();
  for (std::int64_t m : {2, 3, 4}) {
    auto small = base->divided_by(m);
    auto x = random_vector(small, ring, rng);
    WittVector expect = zero_vector(small, ring);
    for (std::int64_t i = 0; i < m; ++i) expect = add(expect, x);
    if (frobenius(m, verschiebung(m, x, base)) != expect) return false;
  }
  return true;
}

bool idempotents() {
  const auto ring = CoefficientRing::integers();
  auto t = TruncatedMonoid(std::make_shared<const AffineMonoid>(AffineMonoid::orthant(2)), std::nullopt, {1, 1}, 4);
  WittVector sum = zero_vector(t.elements(), ring);
  for (const auto& r : t.rays()) {
    auto e = ray_idempotent(t.elements(), ring, r);
    if (mul(e, e) != e) return false;
    sum = add(sum, e);
  }
  return sum == delta_prim(t.elements(), ring);
}

std::shared_ptr<const GradedAlgebra> cubic() {
  auto t = TruncatedMonoid(std::make_shared<const AffineMonoid>(AffineMonoid::orthant(1)),
                           MonoidIdeal(std::make_shared<const AffineMonoid>(AffineMonoid::orthant(1)), {{3}}), {1}, 8);
  return std::make_shared<const GradedAlgebra>(
      GradedAlgebra::monoid_algebra(t, FiniteAlgebra::ground(Field::rationals())));
}

bool mixed_complex_identities() {
  MixedComplex c(cubic(), true, 4, 5);
  const Field& f = c.field();
  for (const auto& eta : c.cells()) {
    for (int n = 2; n <= 4; ++n)
      if (!compose(f, c.b(n - 1, eta), c.b(n, eta)).is_zero()) return false;
    for (int n = 0; n + 2 <= 4; ++n)
      if (!compose(f, c.B(n + 1, eta), c.B(n, eta)).is_zero()) return false;
    for (int n = 1; n + 1 <= 4; ++n)
      if (!add(f, compose(f, c.b(n + 1, eta), c.B(n, eta)), compose(f, c.B(n - 1, eta), c.b(n, eta))).is_zero())
        return false;
  }
  return true;
}

bool truncated_polynomial_homology() {
  MixedComplex c(cubic(), true, 3, 5);
  auto hh = hochschild_homology(c, 2);
  auto hc = cyclic_homology(c, 2);
  // Classes in degrees 1, 2 (n = 0, 1) and 4, 5 (n = 2); odd HC vanishes.
  return hh.total(0) == 2 && hh.total(1) == 2 && hh.total(2) == 2 && hh.dim(2, {4}) == 1 && hc.total(0) == 2 &&
         hc.total(1) == 0 && hc.total(2) == 2;
}

bool kgroup_coherence() {
  for (int n = 1; n <= 5; ++n) {
    if (kgroup::substitute_nk_powers(kgroup::fundamental_theorem(n)) != kgroup::polynomial_decomposition(n))
      return false;
    if (kgroup::rebundle(kgroup::polynomial_decomposition(n)) != kgroup::fundamental_theorem(n)) return false;
  }
  return kgroup::to_text(kgroup::davis_laurent(1)) == "K_q ⊕ K_{q−1} ⊕ 2·NK_q";
}

bool orbits() {
  for (int n = 0; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      auto o = kgroup::wreath_orbit(n, r);
      if (o.orbit_size != (kgroup::binomial(n, r) << r)) return false;
      if (o.orbit_size * o.stabilizer_order != (kgroup::factorial(n) << n)) return false;
    }
  return true;
}

bool ray_counts() {
  for (std::int64_t h = 1; h <= 20; ++h) {
    std::size_t coprime = 0;
    for (std::int64_t a = 1; a <= h; ++a)
      for (std::int64_t b = 1; b <= h; ++b) coprime += std::gcd(a, b) == 1;
    if (kgroup::enumerate_rays(kgroup::RaySet::positive_orthant(2), h).size() != coprime) return false;
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  const std::vector<std::pair<const char*, std::function<bool()>>> checks = {
      {"ghost map is a ring homomorphism on W_T(Z), T in N^2", ghost_homomorphism},
      {"F_m V_m = m on W_{<=12}(Z)", frobenius_verschiebung},
      {"ray idempotents are idempotent and sum to the identity", idempotents},
      {"b^2 = B^2 = bB + Bb = 0 for Q[x]/(x^3)", mixed_complex_identities},
      {"HH and HC of Q[x]/(x^3)", truncated_polynomial_homology},
      {"K-group substitution and rebundling", kgroup_coherence},
      {"wreath orbit counts", orbits},
      {"ray counts of N_+^2", ray_counts},
  };
  bool ok = true;
  for (const auto& [name, check] : checks) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    std::string note;
    try {
      passed = check();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    out << (passed ? "PASS " : "FAIL ") << name << " [" << ms.count() << " ms]" << note << "\n";
    ok = ok && passed;
  }
  return ok;
}

}  // namespace wittray::cli
