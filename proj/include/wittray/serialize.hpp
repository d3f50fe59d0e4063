#pragma once

#include <json.hpp>
#include <memory>
#include <optional>

#include "wittray/hochschild.hpp"
#include "wittray/kgroup.hpp"
#include "wittray/monoid.hpp"
#include "wittray/ring.hpp"
#include "wittray/witt.hpp"

// JSON forms of the value types. Ring values and multiplicities are decimal
// strings; coordinates, ranks, degrees and dimensions are JSON numbers.
// Readers reject unknown fields and throw Error(Parse).
namespace wittray::io {

using Json = nlohmann::json;

Json to_json(const AffineMonoid& m);
AffineMonoid monoid_from_json(const Json& j);

/// {"rank", "inequalities"|"generators", "ideal"?, "weight", "degree_bound"}.
Json to_json(const TruncatedMonoid& t);
TruncatedMonoid truncated_monoid_from_json(const Json& j);

/// {"kind": "Z"|"Q"|"Fp"|"poly", "p"?, "base"?, "modulus"?, "variable"?}.
Json to_json(const CoefficientRing& r);
CoefficientRing ring_from_json(const Json& j);

/// Scalars as strings, polynomial-ring elements as coefficient arrays.
Json to_json(const CoefficientRing& r, const Elem& e);
Elem elem_from_json(const CoefficientRing& r, const Json& j);

/// A Witt vector or ghost vector:
/// {"components": "witt"|"ghost", "monoid", "truncation"?, "ring", "coeffs": [{"gamma", "value"}]}.
/// Without "truncation" the base is the truncated monoid's element set.
Json to_json(const WittVector& a);
Json to_json(const GhostVector& g);
struct ParsedVector {
  bool ghost = false;
  WittVector witt;
  GhostVector ghost_components;
};
ParsedVector vector_from_json(const Json& j);
WittVector witt_from_json(const Json& j);
TruncationSetPtr truncation_from_json(const Json& j);

/// Homology report; basis cycles are sparse [index, "coefficient"] lists.
Json to_json(const HomologyReport& r, const MixedComplex* labels = nullptr);
HomologyReport report_from_json(const Json& j);

Json to_json(const kgroup::Expr& e);
kgroup::Expr expr_from_json(const Json& j);
Json to_json(const kgroup::RaySet& r);
kgroup::RaySet ray_set_from_json(const Json& j);

/// Strict readers shared with the command-line front end.
void require_only(const Json& j, std::initializer_list<const char*> allowed, const char* what);
std::int64_t read_int64(const Json& j, const char* what);
Point read_point(const Json& j, const char* what);
std::vector<Point> read_points(const Json& j, const char* what);
Integer read_integer(const Json& j, const char* what);

}  // namespace wittray::io
