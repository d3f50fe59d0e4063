// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles/bar_complex.hpp"
#include "oracles/witt_oracle.hpp"
#include "support.hpp"
#include "wittray/hochschild.hpp"
#include "wittray/kahler.hpp"
#include "wittray/kgroup.hpp"

using namespace wittray;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const Field kQ = Field::rationals();

std::vector<mpq_class> as_rationals(const WittVector& a) {
  std::vector<mpq_class> out;
  for (const auto& e : a.coords()) out.push_back(e.is_zero() ? mpq_class(0) : e.coeffs()[0]);
  return out;
}

std::string fmt(const Point& p) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < p.size(); ++i) s << (i ? "," : "") << p[i];
  s << ")";
  return s.str();
}

WittVector repeated_sum(const WittVector& x, std::int64_t m) {
  WittVector s = zero_vector(x.base(), x.ring());
  for (std::int64_t i = 0; i < m; ++i) s = add(s, x);
  return s;
}

// 1 ---------------------------------------------------------------------------
Outcome ghost_homomorphism() {
  Outcome o;
  std::mt19937_64 rng(101);
  const auto z = CoefficientRing::integers();
  const std::vector<std::pair<std::string, TruncatedMonoid>> cases = {
      {"N", TruncatedMonoid(test::shared(AffineMonoid::orthant(1)), std::nullopt, {1}, 6)},
      {"N^2", TruncatedMonoid(test::shared(AffineMonoid::orthant(2)), std::nullopt, {1, 1}, 6)},
      {"cone", TruncatedMonoid(test::shared(test::cone_monoid_by_generators()), std::nullopt, {1, 0}, 6)}};
  for (const auto& [name, t] : cases) {
    const auto& base = t.elements();
    const std::vector<oracle::Vec> elems(base->elements().begin(), base->elements().end());
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = test::random_witt(rng, base, z), b = test::random_witt(rng, base, z);
      const auto s = add(a, b), p = mul(a, b);
      o.require(ghost(s) == ghost_add(ghost(a), ghost(b)), "gh(a+b) on " + name);
      o.require(ghost(p) == ghost_mul(ghost(a), ghost(b)), "gh(ab) on " + name);
      o.require(as_rationals(s) == oracle::add(elems, as_rationals(a), as_rationals(b)), "sum vs oracle on " + name);
      o.require(as_rationals(p) == oracle::mul(elems, as_rationals(a), as_rationals(b)), "product vs oracle on " + name);
    }
  }
  return o;
}

// 2 ---------------------------------------------------------------------------
Outcome integrality_and_functoriality() {
  Outcome o;
  std::vector<std::int64_t> s(12);
  std::iota(s.begin(), s.end(), 1);
  const auto family = UniversalPolynomials::instance().family(s);
  auto integral = [](const MultiPoly& p) {
    for (const auto& [m, c] : p.terms())
      if (c.get_den() != 1) return false;
    return true;
  };
  o.require(family.sums.size() == 12 && family.products.size() == 12, "family size");
  for (const auto& [e, p] : family.sums) o.require(integral(p), "s_" + std::to_string(e) + " integral");
  for (const auto& [e, p] : family.products) o.require(integral(p), "m_" + std::to_string(e) + " integral");

  std::mt19937_64 rng(202);
  const auto z = CoefficientRing::integers();
  const auto base = test::line_truncation(12);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto fp = CoefficientRing::prime_field(p);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = test::random_witt(rng, base, z, 20), b = test::random_witt(rng, base, z, 20);
      const auto ra = map_ring(a, fp), rb = map_ring(b, fp);
      o.require(map_ring(add(a, b), fp) == add(ra, rb), "reduction of a sum mod " + std::to_string(p));
      o.require(map_ring(mul(a, b), fp) == mul(ra, rb), "reduction of a product mod " + std::to_string(p));
      o.require(map_ring(neg(a), fp) == neg(ra), "reduction of a negative mod " + std::to_string(p));
    }
  }
  return o;
}

// 3 ---------------------------------------------------------------------------
Outcome idempotent_decomposition() {
  Outcome o;
  std::mt19937_64 rng(303);
  const auto z = CoefficientRing::integers();
  auto n2 = test::shared(AffineMonoid::orthant(2));
  for (const Point& w : {Point{1, 1}, Point{1, 2}}) {
    const TruncatedMonoid t(n2, std::nullopt, w, 5);
    const auto& base = t.elements();
    const auto rays = t.rays();
    std::vector<WittVector> idem;
    for (const auto& r : rays) idem.push_back(ray_idempotent(base, z, r));
    WittVector sum = zero_vector(base, z);
    for (std::size_t i = 0; i < idem.size(); ++i) {
      sum = add(sum, idem[i]);
      for (std::size_t j = 0; j < idem.size(); ++j) {
        const auto prod = mul(idem[i], idem[j]);
        o.require(i == j ? prod == idem[i] : prod == zero_vector(base, z),
                  "[v][v'] for " + fmt(rays[i].primitive) + ", " + fmt(rays[j].primitive));
      }
    }
    o.require(sum == delta_prim(base, z), "idempotents sum to the identity");
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = test::random_witt(rng, base, z);
      o.require(ray_assemble(ray_decompose(a), base, z) == a, "assemble(decompose(a)) = a");
    }
  }
  return o;
}

// 4 ---------------------------------------------------------------------------
Outcome operator_identities() {
  Outcome o;
  std::mt19937_64 rng(404);
  const auto base = test::line_truncation(12);
  for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::prime_field(7)}) {
    const std::string rn = ring.describe();
    for (std::int64_t m : {2, 3, 4}) {
      const auto small = base->divided_by(m);
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = test::random_witt(rng, small, ring);
        const auto y = test::random_witt(rng, base, ring);
        o.require(frobenius(m, verschiebung(m, x, base)) == repeated_sum(x, m),
                  "F_m V_m = m, m=" + std::to_string(m) + " over " + rn);
        o.require(frobenius(m, verschiebung(m, x, base)) == mul(witt_integer(small, ring, m), x),
                  "F_m V_m = m via the integer m, over " + rn);
        o.require(verschiebung(m, mul(x, frobenius(m, y)), base) == mul(verschiebung(m, x, base), y),
                  "projection formula, m=" + std::to_string(m) + " over " + rn);
        const Elem r = test::random_elem(rng, ring);
        const auto tr = teichmuller(small, ring, r, {1});
        o.require(mul(verschiebung(m, tr, base), y) == verschiebung(m, mul(tr, frobenius(m, y)), base),
                  "V_m([r]) x = V_m([r] F_m x), m=" + std::to_string(m) + " over " + rn);
        for (std::int64_t n : {2, 3, 4}) {
          o.require(frobenius(m, frobenius(n, y)) == frobenius(m * n, y),
                    "F_m F_n = F_mn, m=" + std::to_string(m) + ", n=" + std::to_string(n) + " over " + rn);
        }
      }
    }
  }
  return o;
}

// 5 ---------------------------------------------------------------------------
Outcome module_action() {
  Outcome o;
  std::size_t scaled = 0;
  const auto q = CoefficientRing::rationals();
  const std::vector<std::pair<std::string, std::shared_ptr<const GradedAlgebra>>> algebras = {
      {"Q[x]/(x^3)", test::truncated_line_algebra(3)}, {"cone D=3", test::cone_algebra(3)}};
  for (const auto& [name, a] : algebras) {
    MixedComplex c(a, true, 3);
    const auto hh = hochschild_homology(c, 2, true);
    std::vector<Point> gammas;
    for (const auto& g : c.cells()) gammas.push_back(g);
    for (const Elem& r : {q.from_integer(2), q.from_integer(-3), q.from_rational(Rational(1, 2))}) {
      for (const auto& cell : hh.cells) {
        if (cell.n < 1) continue;
        const Point& eta = cell.eta;
        for (const auto& gamma : gammas) {
          // Independent ghost oracle on the elements dividing eta.
          std::vector<oracle::Vec> elems;
          for (const auto& g : gammas)
            if (oracle::multiple_of(g, eta)) elems.push_back(g);
          std::vector<mpq_class> coords(elems.size());
          for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == gamma) coords[i] = r.coeffs()[0];
          mpq_class expected = 0;
          if (oracle::multiple_of(gamma, eta)) {
            auto g = oracle::ghost(elems, coords);
            for (std::size_t i = 0; i < elems.size(); ++i)
              if (elems[i] == eta) expected = g[i];
          }
          const auto act = teichmuller_action_matrix(c, cell.n, eta, r, gamma);
          o.require(act == SparseMatrix::identity(c.dimension(cell.n, eta), expected) ||
                        (expected == 0 && act.is_zero()),
                    name + ": r[" + fmt(gamma) + "] on HH_" + std::to_string(cell.n) + fmt(eta));
          if (expected != 0) ++scaled;
          for (const auto& z : cell.basis) {
            SparseBuilder sb(kQ);
            sb.add(z, expected);
            o.require(apply(kQ, act, z) == sb.finish(), name + ": class scaling");
          }
          const auto up = teichmuller_action_matrix(c, cell.n + 1, eta, r, gamma);
          const auto down = teichmuller_action_matrix(c, cell.n - 1, eta, r, gamma);
          o.require(compose(kQ, c.b(cell.n + 1, eta), up) == compose(kQ, act, c.b(cell.n + 1, eta)),
                    name + ": commutes with b");
          o.require(compose(kQ, c.B(cell.n - 1, eta), down) == compose(kQ, act, c.B(cell.n - 1, eta)),
                    name + ": commutes with B");
        }
      }
    }
  }
  o.require(scaled > 0, "no class was scaled by a nonzero factor");
  return o;
}

// 6 ---------------------------------------------------------------------------
Outcome homology_oracles() {
  Outcome o;
  std::vector<std::pair<std::string, std::shared_ptr<const GradedAlgebra>>> algebras = {
      {"Q[x]/(x^2)", test::truncated_line_algebra(2)}, {"Q[x]/(x^3)", test::truncated_line_algebra(3)}};
  for (std::int64_t d = 1; d <= 3; ++d) algebras.emplace_back("cone D=" + std::to_string(d), test::cone_algebra(d));
  for (const auto& [name, a] : algebras) {
    MixedComplex c(a, true, 5, a->top_weight() + 1);
    const auto hh = hochschild_homology(c, 4);
    oracle::BarComplex bar(*a);
    for (const auto& eta : c.cells())
      for (int n = 0; n <= 4; ++n)
        o.require(hh.dim(n, eta) == bar.hh_dim(n, eta), name + ": HH_" + std::to_string(n) + fmt(eta));
  }
  return o;
}

// 7 ---------------------------------------------------------------------------
Outcome kassel_decomposition() {
  Outcome o;
  auto n1 = test::shared(AffineMonoid::orthant(1));
  const TruncatedMonoid t(n1, MonoidIdeal(n1, {{3}}), {1}, 2);
  const auto checks = kassel_check(t, test::dual_numbers(), 3, 6);
  o.require(!checks.empty(), "no cells compared");
  for (const auto& d : checks)
    o.require(d.holds(), "HC_" + std::to_string(d.n) + fmt(d.eta) + ": " + std::to_string(d.lhs) + " vs " +
                             std::to_string(d.rhs));
  auto a = test::truncated_line_algebra(3);
  MixedComplex c(a, true, 5, 6);
  for (const auto& eta : c.cells())
    for (int n = 0; n <= 3; ++n) {
      o.require(periodicity_vanishes(c, n, eta), "S nonzero on HC_" + std::to_string(n) + fmt(eta));
      if (n < 2) o.require(periodicity(c, n, eta).is_zero(), "S matrix nonzero below degree 2");
    }
  return o;
}

// 8 ---------------------------------------------------------------------------
Outcome de_rham_nonlinearity() {
  Outcome o;
  const auto r = test::dual_numbers();
  auto n1 = test::shared(AffineMonoid::orthant(1));
  auto a = std::make_shared<const GradedAlgebra>(GradedAlgebra::monoid_algebra(TruncatedMonoid(n1, std::nullopt, {1}, 4), r));
  KahlerForms omega(a, 2);
  const auto ring = a->scalar_ring();
  const Elem y = ring.variable_element();
  const Point gamma{1};
  const Field& f = a->field();
  bool nontrivial = false;
  for (std::int64_t e : {1, 2}) {
    const Point eta{e};
    const auto s = a->scalar(teichmuller_action(n1, ring, y, gamma, eta));  // y^e in A_0
    for (std::size_t i = 0; i < a->dim(); ++i) {
      if (a->degree(i) != eta) continue;
      const SparseVec elem{{static_cast<std::uint32_t>(i), Rational(1)}};
      const auto fa = omega.function(elem).second;
      SparseVec lhs;
      if (!s.empty()) {
        const auto [deg, acted] = omega.multiply(s, 0, eta, fa);
        o.require(deg == eta, "degree of y[gamma]*a");
        lhs = omega.d(0, eta, acted);
        const auto [d1, s_da] = omega.multiply(s, 1, eta, omega.d(0, eta, fa));
        SparseBuilder diff(f);
        diff.add(lhs, 1);
        diff.add(s_da, -1);
        lhs = diff.finish();
      }
      SparseVec rhs;
      if (!s.empty()) {
        const auto ds = omega.d(0, Point{0}, omega.function(s).second);
        rhs = omega.multiply(elem, 1, Point{0}, ds).second;
      }
      o.require(omega.equal(1, eta, lhs, rhs), "e=" + std::to_string(e) + ", a=" + a->label(i));
      if (e == 1 && !omega.normal_form(1, eta, rhs).empty()) nontrivial = true;
    }
  }
  o.require(nontrivial, "a d(y) vanished for every generator");
  return o;
}

// 9 ---------------------------------------------------------------------------
std::string normalize_latex(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ' ' || s[i] == '~' || s[i] == '\n') continue;
    if (s.compare(i, 2, "_{") == 0 && i + 3 < s.size() && s[i + 3] == '}') {
      out += '_';
      out += s[i + 2];
      i += 3;
      continue;
    }
    out += s[i];
  }
  return out;
}

Outcome k_formulas() {
  using namespace wittray::kgroup;
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    o.require(substitute_nk_powers(fundamental_theorem(n)) == polynomial_decomposition(n),
              "substitution coherence at n=" + std::to_string(n));
  o.require(davis_laurent(1) == Expr::atom(Atom{0, 0}) + Expr::atom(Atom{0, 1}) + Expr::atom(Atom{1, 0}, 2),
            "Laurent n=1 expression");
  o.require(to_text(davis_laurent(1)) == "K_q ⊕ K_{q−1} ⊕ 2·NK_q", "Laurent n=1 text");

  RenderOptions k;
  k.with_ring = true;
  const Expr second = Expr::atom(Atom{0, 0}) + Expr::family(RaySet::closed_orthant(2), {{Atom{1, 0}, 1}}) +
                      Expr::family(RaySet::positive_orthant(2), {{Atom{1, 1}, 1}});
  o.require(split_closed_orthant(second) == polynomial_decomposition(2), "two n=2 forms agree");
  const std::vector<std::pair<std::string, Expr>> displays = {
      {R"(\bigoplus\nolimits_{\rho\subset\N^2} NK_q(k)\oplus NK_{q-1}(k))",
       restrict_to_closed_orthant(davis_laurent(2))},
      {R"(\bigoplus\nolimits_{\rho\subset\No^2} NK_q(k)\oplus NK_{q-1}(k))", nk_power(2)},
      {R"(K_q(k)\oplus 2NK_q(k)\oplus \bigoplus\nolimits_{\rho\subset\No^2}(NK_q(k)\oplus NK_{q-1}(k)))",
       polynomial_decomposition(2)},
      {R"(K_q(k)\oplus \bigoplus\nolimits_{\rho\subset\N^2} NK_q(k) ~\oplus~ \bigoplus\nolimits_{\rho\subset\No^2}NK_{q-1}(k))",
       second},
      {R"(K_q(k)\oplus 2NK_q(k)\oplus N^2K_{q}(k))", rebundle(polynomial_decomposition(2))}};
  for (const auto& [tex, e] : displays)
    o.require(normalize_latex(to_latex(e, k)) == normalize_latex(tex), "display " + tex);
  o.require(to_text(polynomial_decomposition(2), k) == "K_q(k) ⊕ 2·NK_q(k) ⊕ ⨁_{ρ⊂ℕ₊²}(NK_q(k) ⊕ NK_{q−1}(k))",
            "Unicode form of the n=2 corollary");
  return o;
}

// 10 --------------------------------------------------------------------------
Outcome wreath_orbits() {
  Outcome o;
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto w = kgroup::wreath_orbit(n, r);
      const std::string at = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
      o.require(w.enumerated, "not enumerated at " + at);
      o.require(w.orbit_size == (kgroup::binomial(n, r) << r), "orbit size at " + at);
      o.require(w.stabilizer_order == kgroup::factorial(r) * (kgroup::factorial(n - r) << (n - r)),
                "stabilizer order at " + at);
      const auto s = kgroup::symmetric_orbit(n, r);
      o.require(s.orbit_size == kgroup::binomial(n, r), "S_n orbit size at " + at);
    }
  return o;
}

// 11 --------------------------------------------------------------------------
Outcome ray_enumeration() {
  Outcome o;
  for (std::int64_t h = 1; h <= 50; ++h) {
    std::size_t coprime = 0;
    for (std::int64_t a = 1; a <= h; ++a)
      for (std::int64_t b = 1; b <= h; ++b) {
        std::int64_t x = a, y = b;
        while (y != 0) {
          const std::int64_t t = x % y;
          x = y;
          y = t;
        }
        coprime += x == 1;
      }
    const auto rays = kgroup::enumerate_rays(kgroup::RaySet::positive_orthant(2), h);
    o.require(rays.size() == coprime, "count at H=" + std::to_string(h));
    if (h == 3) o.require(rays.size() == 7, "7 rays at H=3");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no stated limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "ghost map is a ring homomorphism (N, N^2, cone; D=6; 200 pairs)", 10, ghost_homomorphism},
      {2, "universal polynomials integral; reduction mod 2,3,5 commutes", 0, integrality_and_functoriality},
      {3, "ray idempotents on N^2 truncations", 0, idempotent_decomposition},
      {4, "F/V identities on W_<=12(Z) and W_<=12(Z/7)", 0, operator_identities},
      {5, "Teichmuller action on HH_1, HH_2", 0, module_action},
      {6, "normalized vs unnormalized HH through n=4", 60, homology_oracles},
      {7, "Kassel decomposition and vanishing S", 0, kassel_decomposition},
      {8, "de Rham non-linearity over Q[y]/(y^2)", 0, de_rham_nonlinearity},
      {9, "K-group formulas and n=2 displays", 1, k_formulas},
      {10, "wreath orbits for n <= 5", 5, wreath_orbits},
      {11, "rays of N_+^2 up to height 50", 5, ray_enumeration},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.require(false, "runtime limit exceeded");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (out.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    if (!out.ok) line << ": " << out.detail;
    std::cout << line.str() << std::endl;
    all = all && out.ok;
  }
  return all ? 0 : 1;
}
