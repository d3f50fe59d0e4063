#include "wittray/serialize.hpp"

#include <algorithm>
#include <set>

#include "wittray/error.hpp"

namespace wittray::io {

namespace {

constexpr const char* kModule = "cli";

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, kModule, msg); }

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string read_string(const Json& j, const char* what) {
  if (!j.is_string()) parse_error(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

Rational read_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const std::string s = read_string(j, what);
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    parse_error(std::string(what) + ": not a rational number: \"" + s + "\"");
  }
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

void write_monoid_fields(Json& j, const AffineMonoid& m) {
  j["rank"] = m.rank();
  if (m.representation() == AffineMonoid::Representation::Inequalities || !m.inequalities().empty())
    j["inequalities"] = points_json(m.inequalities());
  if (!m.generators().empty()) j["generators"] = points_json(m.generators());
  if (!m.inequalities().empty() && !m.generators().empty())
    j["representation"] =
        m.representation() == AffineMonoid::Representation::Inequalities ? "inequalities" : "generators";
}

AffineMonoid read_monoid_fields(const Json& j) {
  const auto rank = read_int64(field(j, "rank", "monoid"), "monoid.rank");
  const Json* ineq = optional_field(j, "inequalities");
  const Json* gens = optional_field(j, "generators");
  std::int64_t window = AffineMonoid::kDefaultNormalityWindow;
  if (auto* w = optional_field(j, "normality_window")) window = read_int64(*w, "monoid.normality_window");
  if (!ineq && !gens) parse_error("monoid: needs \"inequalities\" or \"generators\"");
  auto check_rank = [&](const std::vector<Point>& pts, const char* what) {
    for (const auto& p : pts)
      if (static_cast<std::int64_t>(p.size()) != rank)
        throw Error(ErrorCode::DimensionMismatch, kModule, std::string(what) + " entry has the wrong rank");
  };
  std::optional<AffineMonoid> m;
  if (ineq && gens) {
    auto iv = read_points(*ineq, "monoid.inequalities");
    auto gv = read_points(*gens, "monoid.generators");
    check_rank(iv, "inequalities");
    check_rank(gv, "generators");
    std::string rep = "inequalities";
    if (auto* r = optional_field(j, "representation")) rep = read_string(*r, "monoid.representation");
    if (rep != "inequalities" && rep != "generators")
      parse_error("monoid.representation must be \"inequalities\" or \"generators\"");
    m = AffineMonoid::from_both(std::move(iv), std::move(gv),
                                rep == "inequalities" ? AffineMonoid::Representation::Inequalities
                                                      : AffineMonoid::Representation::Generators,
                                window);
  } else if (ineq) {
    auto iv = read_points(*ineq, "monoid.inequalities");
    check_rank(iv, "inequalities");
    m = AffineMonoid::from_inequalities(std::move(iv));
  } else {
    auto gv = read_points(*gens, "monoid.generators");
    check_rank(gv, "generators");
    m = AffineMonoid::from_generators(std::move(gv), window);
  }
  if (static_cast<std::int64_t>(m->rank()) != rank)
    throw Error(ErrorCode::DimensionMismatch, kModule, "monoid.rank disagrees with its description");
  return std::move(*m);
}

}  // namespace

void require_only(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) parse_error(std::string(what) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      parse_error(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

std::int64_t read_int64(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  parse_error(std::string(what) + ": expected an integer");
}

Integer read_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  const std::string s = read_string(j, what);
  try {
    return Integer(s);
  } catch (const std::exception&) {
    parse_error(std::string(what) + ": not an integer: \"" + s + "\"");
  }
}

Point read_point(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + ": expected an integer array");
  Point p;
  for (const auto& x : j) p.push_back(read_int64(x, what));
  return p;
}

std::vector<Point> read_points(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + ": expected an array of integer arrays");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(read_point(p, what));
  return out;
}

// ---------------------------------------------------------------------------
// Monoids

Json to_json(const AffineMonoid& m) {
  Json j = Json::object();
  write_monoid_fields(j, m);
  return j;
}

AffineMonoid monoid_from_json(const Json& j) {
  require_only(j, {"rank", "inequalities", "generators", "representation", "normality_window"}, "monoid");
  return read_monoid_fields(j);
}

Json to_json(const TruncatedMonoid& t) {
  Json j = to_json(t.parent());
  if (t.ideal()) j["ideal"] = points_json(t.ideal()->generators());
  j["weight"] = t.weight();
  j["degree_bound"] = t.degree_bound();
  return j;
}

TruncatedMonoid truncated_monoid_from_json(const Json& j) {
  require_only(j,
               {"rank", "inequalities", "generators", "representation", "normality_window", "ideal", "weight",
                "degree_bound"},
               "truncated monoid");
  auto m = std::make_shared<const AffineMonoid>(read_monoid_fields(j));
  std::optional<MonoidIdeal> ideal;
  if (auto* i = optional_field(j, "ideal")) {
    auto gens = read_points(*i, "ideal");
    if (!gens.empty()) ideal.emplace(m, std::move(gens));
  }
  Point weight = read_point(field(j, "weight", "truncated monoid"), "weight");
  const auto bound = read_int64(field(j, "degree_bound", "truncated monoid"), "degree_bound");
  return TruncatedMonoid(m, std::move(ideal), std::move(weight), bound);
}

// ---------------------------------------------------------------------------
// Rings

Json to_json(const CoefficientRing& r) {
  Json j;
  switch (r.kind()) {
    case RingKind::Integers: j["kind"] = "Z"; break;
    case RingKind::Rationals: j["kind"] = "Q"; break;
    case RingKind::PrimeField:
      j["kind"] = "Fp";
      j["p"] = std::to_string(r.prime());
      break;
    case RingKind::Polynomial:
      j["kind"] = "poly";
      j["base"] = to_json(r.scalar_ring());
      j["variable"] = r.variable();
      if (!r.modulus().empty()) j["modulus"] = rationals_json(r.modulus());
      break;
  }
  return j;
}

CoefficientRing ring_from_json(const Json& j) {
  require_only(j, {"kind", "p", "base", "modulus", "variable"}, "ring");
  const std::string kind = read_string(field(j, "kind", "ring"), "ring.kind");
  auto forbid = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (j.contains(k)) parse_error(std::string("ring: field \"") + k + "\" does not apply to kind " + kind);
  };
  if (kind == "Z" || kind == "Q") {
    forbid({"p", "base", "modulus", "variable"});
    return kind == "Z" ? CoefficientRing::integers() : CoefficientRing::rationals();
  }
  if (kind == "Fp") {
    forbid({"base", "modulus", "variable"});
    const auto p = read_int64(field(j, "p", "ring"), "ring.p");
    if (p < 2) throw Error(ErrorCode::InvalidArgument, kModule, "ring.p must be a prime");
    return CoefficientRing::prime_field(static_cast<std::uint64_t>(p));
  }
  if (kind == "poly") {
    forbid({"p"});
    const CoefficientRing base = ring_from_json(field(j, "base", "ring"));
    std::vector<Rational> modulus;
    if (auto* m = optional_field(j, "modulus")) {
      if (!m->is_array()) parse_error("ring.modulus: expected an array");
      for (const auto& c : *m) modulus.push_back(read_rational(c, "ring.modulus"));
    }
    std::string var = "y";
    if (auto* v = optional_field(j, "variable")) var = read_string(*v, "ring.variable");
    return CoefficientRing::polynomial(base, std::move(modulus), var);
  }
  parse_error("ring.kind must be one of Z, Q, Fp, poly");
}

Json to_json(const CoefficientRing& r, const Elem& e) {
  if (r.kind() != RingKind::Polynomial) return r.to_string(e);
  return rationals_json(e.coeffs());
}

Elem elem_from_json(const CoefficientRing& r, const Json& j) {
  if (r.kind() == RingKind::Polynomial) {
    if (!j.is_array()) parse_error("polynomial-ring values are coefficient arrays (low to high)");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(read_rational(x, "value"));
    return r.from_coefficients(std::move(c));
  }
  if (j.is_number_integer()) return r.from_integer(Integer(j.get<long>()));
  return r.parse_scalar(read_string(j, "value"));
}

// ---------------------------------------------------------------------------
// Witt and ghost vectors

namespace {

template <class V>
Json vector_json(const V& v, const char* components) {
  const auto& base = *v.base();
  Json monoid = to_json(base.monoid());
  monoid["weight"] = base.weight();
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (v[i].is_zero()) continue;
    coeffs.push_back({{"gamma", base.elements()[i]}, {"value", to_json(v.ring(), v[i])}});
  }
  return Json{{"components", components},
              {"monoid", monoid},
              {"truncation", points_json(base.elements())},
              {"ring", to_json(v.ring())},
              {"coeffs", coeffs}};
}

}  // namespace

Json to_json(const WittVector& a) { return vector_json(a, "witt"); }
Json to_json(const GhostVector& g) { return vector_json(g, "ghost"); }

TruncationSetPtr truncation_from_json(const Json& j) {
  const Json& mj = field(j, "monoid", "vector");
  if (const Json* t = optional_field(j, "truncation")) {
    require_only(mj, {"rank", "inequalities", "generators", "representation", "normality_window", "weight"},
                 "monoid");
    auto m = std::make_shared<const AffineMonoid>(read_monoid_fields(mj));
    Point weight = read_point(field(mj, "weight", "monoid"), "weight");
    if (!m->is_positive_weight(weight))
      throw Error(ErrorCode::InvalidWeight, kModule, "weight is not positive on the monoid");
    auto elements = read_points(*t, "truncation");
    for (const auto& g : elements) {
      if (g.size() != m->rank())
        throw Error(ErrorCode::DimensionMismatch, kModule, "truncation element has the wrong rank");
      if (!m->contains(g)) throw Error(ErrorCode::NotMember, kModule, "truncation element is not a member");
    }
    return std::make_shared<const TruncationSet>(m, std::move(weight), std::move(elements));
  }
  return truncated_monoid_from_json(mj).elements();
}

ParsedVector vector_from_json(const Json& j) {
  require_only(j, {"components", "monoid", "truncation", "ring", "coeffs"}, "vector");
  bool is_ghost = false;
  if (auto* c = optional_field(j, "components")) {
    const auto s = read_string(*c, "components");
    if (s != "witt" && s != "ghost") parse_error("components must be \"witt\" or \"ghost\"");
    is_ghost = s == "ghost";
  }
  auto base = truncation_from_json(j);
  const CoefficientRing ring = ring_from_json(field(j, "ring", "vector"));
  std::vector<Elem> coords(base->size(), ring.zero());
  std::vector<bool> seen(base->size(), false);
  const Json& cj = field(j, "coeffs", "vector");
  if (!cj.is_array()) parse_error("coeffs: expected an array");
  for (const auto& entry : cj) {
    require_only(entry, {"gamma", "value"}, "coeffs entry");
    const Point g = read_point(field(entry, "gamma", "coeffs entry"), "gamma");
    auto i = base->index_of(g);
    if (!i) throw Error(ErrorCode::NotMember, kModule, "coefficient outside the truncation set");
    if (seen[*i]) parse_error("coeffs: repeated gamma");
    seen[*i] = true;
    coords[*i] = elem_from_json(ring, field(entry, "value", "coeffs entry"));
  }
  ParsedVector out{is_ghost, WittVector(base, ring), GhostVector(base, ring)};
  if (is_ghost)
    out.ghost_components = GhostVector(base, ring, std::move(coords));
  else
    out.witt = WittVector(base, ring, std::move(coords));
  return out;
}

WittVector witt_from_json(const Json& j) {
  auto v = vector_from_json(j);
  if (v.ghost) parse_error("expected Witt coordinates, got ghost components");
  return v.witt;
}

// ---------------------------------------------------------------------------
// Homology reports

Json to_json(const HomologyReport& r, const MixedComplex* labels) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cj{{"n", c.n}, {"eta", c.eta}, {"dim", c.dim}};
    if (!c.basis.empty()) {
      Json basis = Json::array();
      Json shown = Json::array();
      for (const auto& v : c.basis) {
        Json entries = Json::array();
        for (const auto& [idx, q] : v) entries.push_back(Json::array({idx, q.get_str()}));
        basis.push_back(entries);
        if (labels) shown.push_back(labels->format_chain(c.n, c.eta, v));
      }
      cj["basis"] = basis;
      if (labels) cj["display"] = shown;
    }
    cells.push_back(cj);
  }
  Json totals = Json::array();
  for (int n = 0; n <= r.n_max; ++n) totals.push_back(r.total(n));
  return Json{{"kind", r.kind == HomologyReport::Kind::Hochschild ? "HH" : "HC"},
              {"relative", r.relative},
              {"n_max", r.n_max},
              {"cell_bound", r.cell_bound},
              {"cells", cells},
              {"totals", totals}};
}

HomologyReport report_from_json(const Json& j) {
  require_only(j, {"kind", "relative", "n_max", "cell_bound", "cells", "totals"}, "homology report");
  HomologyReport r;
  const auto kind = read_string(field(j, "kind", "homology report"), "kind");
  if (kind != "HH" && kind != "HC") parse_error("report kind must be HH or HC");
  r.kind = kind == "HH" ? HomologyReport::Kind::Hochschild : HomologyReport::Kind::Cyclic;
  const Json& rel = field(j, "relative", "homology report");
  if (!rel.is_boolean()) parse_error("relative: expected a boolean");
  r.relative = rel.get<bool>();
  r.n_max = static_cast<int>(read_int64(field(j, "n_max", "homology report"), "n_max"));
  r.cell_bound = read_int64(field(j, "cell_bound", "homology report"), "cell_bound");
  const Json& cells = field(j, "cells", "homology report");
  if (!cells.is_array()) parse_error("cells: expected an array");
  for (const auto& cj : cells) {
    require_only(cj, {"n", "eta", "dim", "basis", "display"}, "cell");
    HomologyCell c;
    c.n = static_cast<int>(read_int64(field(cj, "n", "cell"), "n"));
    c.eta = read_point(field(cj, "eta", "cell"), "eta");
    c.dim = static_cast<std::size_t>(read_int64(field(cj, "dim", "cell"), "dim"));
    if (auto* b = optional_field(cj, "basis")) {
      if (!b->is_array()) parse_error("basis: expected an array");
      for (const auto& vj : *b) {
        SparseVec v;
        if (!vj.is_array()) parse_error("basis vector: expected an array");
        for (const auto& e : vj) {
          if (!e.is_array() || e.size() != 2) parse_error("basis entry: expected [index, coefficient]");
          v.emplace_back(static_cast<std::uint32_t>(read_int64(e[0], "index")), read_rational(e[1], "coefficient"));
        }
        c.basis.push_back(std::move(v));
      }
    }
    r.cells.push_back(std::move(c));
  }
  if (auto* t = optional_field(j, "totals")) {
    if (!t->is_array() || static_cast<int>(t->size()) != r.n_max + 1) parse_error("totals: wrong length");
    for (int n = 0; n <= r.n_max; ++n)
      if (static_cast<std::size_t>(read_int64((*t)[static_cast<std::size_t>(n)], "totals")) != r.total(n))
        parse_error("totals disagree with cells");
  }
  return r;
}

// ---------------------------------------------------------------------------
// K-group expressions

namespace {

Json atoms_json(const kgroup::AtomSum& s) {
  Json a = Json::array();
  for (const auto& [atom, c] : s)
    a.push_back({{"npower", atom.npower}, {"shift", atom.shift}, {"multiplicity", c.get_str()}});
  return a;
}

kgroup::AtomSum atoms_from_json(const Json& j) {
  if (!j.is_array()) parse_error("atoms: expected an array");
  kgroup::AtomSum s;
  for (const auto& aj : j) {
    require_only(aj, {"npower", "shift", "multiplicity"}, "atom");
    kgroup::Atom a{static_cast<int>(read_int64(field(aj, "npower", "atom"), "npower")),
                   static_cast<int>(read_int64(field(aj, "shift", "atom"), "shift"))};
    s[a] += read_integer(field(aj, "multiplicity", "atom"), "multiplicity");
  }
  return s;
}

}  // namespace

Json to_json(const kgroup::RaySet& r) {
  using K = kgroup::RaySet::Kind;
  switch (r.kind) {
    case K::Lattice: return Json{{"kind", "lattice"}, {"dim", r.dim}};
    case K::ClosedOrthant: return Json{{"kind", "closed_orthant"}, {"dim", r.dim}};
    case K::PositiveOrthant:
      if (r.coordinates.empty()) return Json{{"kind", "positive_orthant"}, {"dim", r.dim}};
      return Json{{"kind", "positive_orthant"}, {"dim", r.dim}, {"ambient", r.ambient}, {"coordinates", r.coordinates}};
    case K::SingleRay: return Json{{"kind", "ray"}, {"ray", r.ray}};
  }
  return {};
}

kgroup::RaySet ray_set_from_json(const Json& j) {
  require_only(j, {"kind", "dim", "ambient", "coordinates", "ray"}, "ray set");
  const auto kind = read_string(field(j, "kind", "ray set"), "kind");
  auto dim = [&] { return static_cast<int>(read_int64(field(j, "dim", "ray set"), "dim")); };
  if (kind == "lattice") return kgroup::RaySet::lattice(dim());
  if (kind == "closed_orthant") return kgroup::RaySet::closed_orthant(dim());
  if (kind == "positive_orthant") {
    const int m = dim();
    if (!j.contains("coordinates")) return kgroup::RaySet::positive_orthant(m);
    std::vector<int> coords;
    for (auto c : read_point(j["coordinates"], "coordinates")) coords.push_back(static_cast<int>(c));
    if (static_cast<int>(coords.size()) != m) parse_error("ray set: dim differs from the coordinate count");
    return kgroup::RaySet::embedded_positive_orthant(
        static_cast<int>(read_int64(field(j, "ambient", "ray set"), "ambient")), std::move(coords));
  }
  if (kind == "ray") return kgroup::RaySet::single(read_point(field(j, "ray", "ray set"), "ray"));
  parse_error("ray set kind must be lattice, closed_orthant, positive_orthant or ray");
}

Json to_json(const kgroup::Expr& e) {
  Json families = Json::array();
  for (const auto& [rays, inner] : e.families())
    families.push_back({{"rays", to_json(rays)}, {"inner", atoms_json(inner)}});
  return Json{{"atoms", atoms_json(e.atoms())}, {"families", families}};
}

kgroup::Expr expr_from_json(const Json& j) {
  require_only(j, {"atoms", "families"}, "expression");
  kgroup::Expr e;
  if (auto* a = optional_field(j, "atoms"))
    for (const auto& [atom, c] : atoms_from_json(*a)) e += kgroup::Expr::atom(atom, c);
  if (auto* f = optional_field(j, "families")) {
    if (!f->is_array()) parse_error("families: expected an array");
    for (const auto& fj : *f) {
      require_only(fj, {"rays", "inner"}, "family");
      e += kgroup::Expr::family(ray_set_from_json(field(fj, "rays", "family")),
                                atoms_from_json(field(fj, "inner", "family")));
    }
  }
  return e;
}

}  // namespace wittray::io
