#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wittray/error.hpp"
#include "wittray/serialize.hpp"

using namespace wittray;
using io::Json;

namespace {

std::vector<CoefficientRing> rings() {
  return {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::prime_field(7),
          CoefficientRing::polynomial(CoefficientRing::rationals(), {Rational(0), Rational(0), Rational(1)}),
          CoefficientRing::polynomial(CoefficientRing::integers())};
}

// Serialize, print, re-parse, and serialize again.
Json reparse(const Json& j) { return Json::parse(j.dump(2)); }

}  // namespace

TEST_CASE("monoids round-trip") {
  for (const auto& m : {test::cone_monoid_by_generators(), test::cone_monoid_by_inequalities(), AffineMonoid::orthant(3),
                        AffineMonoid::from_both({{0, 1}, {2, -1}}, {{1, 0}, {1, 1}, {1, 2}},
                                                AffineMonoid::Representation::Generators)}) {
    CHECK(io::monoid_from_json(reparse(io::to_json(m))) == m);
  }
  const TruncatedMonoid t = test::cone_truncation(3);
  const Json j = io::to_json(t);
  const TruncatedMonoid back = io::truncated_monoid_from_json(reparse(j));
  CHECK(back.enumerate() == t.enumerate());
  CHECK(io::to_json(back) == j);
  CHECK(j["ideal"] == Json::parse("[[2,2]]"));
}

TEST_CASE("rings and values round-trip") {
  std::mt19937_64 rng(3);
  for (const auto& r : rings()) {
    CHECK(io::ring_from_json(reparse(io::to_json(r))) == r);
    for (int t = 0; t < 20; ++t) {
      const Elem e = test::random_elem(rng, r);
      CHECK(io::elem_from_json(r, reparse(io::to_json(r, e))) == e);
    }
  }
  CHECK(io::to_json(CoefficientRing::prime_field(7))["p"] == "7");
  CHECK(io::elem_from_json(CoefficientRing::rationals(), "-3/6") == CoefficientRing::rationals().from_rational(Rational(-1, 2)));
}

TEST_CASE("Witt and ghost vectors round-trip") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const TruncatedMonoid tm = test::random_truncation(rng);
    for (const auto& r : rings()) {
      const WittVector a = test::random_witt(rng, tm.elements(), r);
      const Json j = io::to_json(a);
      CHECK(io::witt_from_json(reparse(j)) == a);
      CHECK(io::to_json(io::witt_from_json(j)).dump() == j.dump());
      const GhostVector g = ghost(a);
      auto parsed = io::vector_from_json(reparse(io::to_json(g)));
      CHECK(parsed.ghost);
      CHECK(parsed.ghost_components == g);
      // Bases that are not truncated monoids travel as explicit lists.
      const WittVector f = frobenius(2, a);
      CHECK(io::witt_from_json(reparse(io::to_json(f))) == f);
    }
  }
}

TEST_CASE("vector input is strict") {
  const Json base = Json::parse(R"({"monoid": {"rank": 1, "inequalities": [[1]], "weight": [1], "degree_bound": 3},
                                    "ring": {"kind": "Z"}, "coeffs": [{"gamma": [2], "value": "4"}]})");
  const WittVector a = io::witt_from_json(base);
  CHECK(a.at({2}) == CoefficientRing::integers().from_integer(4));
  CHECK(a.base()->size() == 3);

  auto expect = [&](Json j, ErrorCode code) {
    try {
      io::witt_from_json(j);
      FAIL("accepted " << j.dump());
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  Json j = base;
  j["colour"] = 1;
  expect(j, ErrorCode::Parse);
  j = base;
  j["coeffs"][0]["gamma"] = {5};
  expect(j, ErrorCode::NotMember);
  j = base;
  j["coeffs"].push_back(base["coeffs"][0]);
  expect(j, ErrorCode::Parse);
  j = base;
  j["ring"] = {{"kind", "Z"}, {"p", "3"}};
  expect(j, ErrorCode::Parse);
  j = base;
  j["coeffs"][0]["value"] = "1/2";
  CHECK_THROWS_AS(io::witt_from_json(j), Error);
  j = base;
  j["truncation"] = {{2}};
  j["monoid"].erase("degree_bound");
  expect(j, ErrorCode::InvalidArgument);  // {2} without its divisor {1}
  j = base;
  j["components"] = "ghost";
  expect(j, ErrorCode::Parse);
}

TEST_CASE("homology reports round-trip") {
  auto alg = test::cone_algebra(3);
  MixedComplex c(alg, true, 3);
  for (const auto& r : {hochschild_homology(c, 2, true), cyclic_homology(c, 2, true)}) {
    const Json j = io::to_json(r, &c);
    const HomologyReport back = io::report_from_json(reparse(j));
    CHECK(back.kind == r.kind);
    CHECK(back.relative == r.relative);
    CHECK(back.n_max == r.n_max);
    CHECK(back.cell_bound == r.cell_bound);
    REQUIRE(back.cells.size() == r.cells.size());
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      CHECK(back.cells[i].n == r.cells[i].n);
      CHECK(back.cells[i].eta == r.cells[i].eta);
      CHECK(back.cells[i].dim == r.cells[i].dim);
      CHECK(back.cells[i].basis == r.cells[i].basis);
    }
    CHECK(io::to_json(back, &c) == j);
  }
  Json bad = io::to_json(hochschild_homology(c, 1));
  bad["totals"][0] = 999;
  CHECK_THROWS_AS(io::report_from_json(bad), Error);
}

TEST_CASE("K-group expressions round-trip") {
  using namespace wittray::kgroup;
  const std::vector<Expr> exprs = {
      fundamental_theorem(4), davis_laurent(3), polynomial_decomposition(3),
      instantiate_rays(nk_power(2), 3), restrict_to_closed_orthant(davis_laurent(2)),
      Expr::family(RaySet::embedded_positive_orthant(4, {2, 4}), {{Atom{1, 1}, 5}}), Expr{}};
  for (const auto& e : exprs) CHECK(io::expr_from_json(reparse(io::to_json(e))) == e);
  CHECK_THROWS_AS(io::expr_from_json(Json::parse(R"({"atoms": [{"npower": 0, "shift": 0}]})")), Error);
  CHECK_THROWS_AS(io::expr_from_json(Json::parse(R"({"atoms": [], "sum": 1})")), Error);
}
