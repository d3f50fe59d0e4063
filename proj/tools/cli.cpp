#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "selftest.hpp"
#include "wittray/error.hpp"
#include "wittray/hochschild.hpp"
#include "wittray/kgroup.hpp"
#include "wittray/serialize.hpp"
#include "wittray/witt.hpp"

namespace wittray::cli {

namespace {

using io::Json;

constexpr const char* kModule = "cli";
constexpr const char* kSubcommands = "monoid, witt, hh, hc, kdecomp, selftest";

Json load_document(const std::string& source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::InvalidArgument, kModule, "cannot read input file: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, kModule, std::string("malformed JSON: ") + e.what());
  }
}

Point parse_point_arg(const std::string& s, const char* what) {
  return io::read_point(load_document(s), what);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

template <class V>
void emit_vector(std::ostream& out, const V& v, const std::string& format) {
  if (format == "json") {
    emit(out, io::to_json(v));
    return;
  }
  const auto& base = *v.base();
  for (std::size_t i = 0; i < base.size(); ++i)
    out << point_text(base.elements()[i]) << ": " << v.ring().to_string(v[i]) << "\n";
}

// ---------------------------------------------------------------------------
// monoid

struct MonoidArgs {
  std::string input;
  std::int64_t height = 0;
  int positive_orthant = 0;
  int closed_orthant = 0;
  int lattice = 0;
  std::string gamma;
  std::string format = "json";
};

std::vector<Point> monoid_rays(const AffineMonoid& m, std::int64_t height) {
  const std::size_t n = m.rank();
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= static_cast<double>(2 * height + 1);
  if (box > 2e7) throw Error(ErrorCode::ResourceLimit, kModule, "ray search box too large");
  std::vector<Point> out;
  Point v(n, -height);
  while (true) {
    if (coordinate_gcd(v) == 1 && m.contains(v)) out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == height) v[i++] = -height;
    if (i == n) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    auto key = [](const Point& p) {
      std::int64_t h = 0, l = 0;
      for (auto c : p) h = std::max(h, std::abs(c)), l += std::abs(c);
      return std::pair{h, l};
    };
    return key(a) != key(b) ? key(a) < key(b) : a < b;
  });
  return out;
}

void emit_rays(std::ostream& out, const std::vector<Point>& rays, const std::string& format) {
  if (format == "json") {
    emit(out, Json{{"count", rays.size()}, {"rays", rays}});
    return;
  }
  for (const auto& r : rays) out << point_text(r) << "\n";
}

// ---------------------------------------------------------------------------
// homology

struct HomologyArgs {
  std::string algebra;
  int n_max = 4;
  bool relative = false;
  bool basis = false;
  std::int64_t cell_bound = 0;
  std::size_t cell_cap = MixedComplex::kDefaultCellCap;
  std::string format = "json";
};

std::shared_ptr<const GradedAlgebra> algebra_from_json(const Json& j) {
  io::require_only(j, {"monoid", "field", "coefficients"}, "algebra");
  auto it = j.find("monoid");
  if (it == j.end()) throw Error(ErrorCode::Parse, kModule, "algebra: missing field \"monoid\"");
  Json monoid = *it;
  if (monoid.is_object() && !monoid.contains("degree_bound")) monoid["degree_bound"] = 4;
  const TruncatedMonoid t = io::truncated_monoid_from_json(monoid);
  Field field = Field::rationals();
  if (auto f = j.find("field"); f != j.end()) field = Field::of(io::ring_from_json(*f));
  FiniteAlgebra r = FiniteAlgebra::ground(field);
  if (auto c = j.find("coefficients"); c != j.end()) {
    io::require_only(*c, {"modulus", "variable"}, "coefficients");
    std::vector<Rational> modulus;
    auto m = c->find("modulus");
    if (m == c->end() || !m->is_array())
      throw Error(ErrorCode::Parse, kModule, "coefficients.modulus: expected an array");
    for (const auto& x : *m) {
      Rational q(x.is_string() ? x.get<std::string>() : std::to_string(io::read_int64(x, "modulus")));
      q.canonicalize();
      modulus.push_back(q);
    }
    std::string var = "y";
    if (auto v = c->find("variable"); v != c->end()) var = v->get<std::string>();
    r = FiniteAlgebra::truncated_polynomial(field, std::move(modulus), var);
  }
  return std::make_shared<const GradedAlgebra>(GradedAlgebra::monoid_algebra(t, r));
}

void run_homology(const HomologyArgs& a, bool cyclic, std::ostream& out) {
  if (a.n_max < 0) throw Error(ErrorCode::InvalidArgument, kModule, "--nmax must be >= 0");
  auto algebra = algebra_from_json(load_document(a.algebra));
  std::optional<std::int64_t> bound;
  if (a.cell_bound > 0) bound = a.cell_bound;
  MixedComplex c(algebra, a.relative, a.n_max + 1, bound, a.cell_cap);
  const HomologyReport r = cyclic ? cyclic_homology(c, a.n_max, a.basis) : hochschild_homology(c, a.n_max, a.basis);
  if (a.format == "json") {
    emit(out, io::to_json(r, &c));
    return;
  }
  const char* name = cyclic ? "HC" : "HH";
  for (const auto& cell : r.cells) {
    out << name << "_" << cell.n << " " << point_text(cell.eta) << ": " << cell.dim << "\n";
    for (const auto& v : cell.basis) out << "  " << c.format_chain(cell.n, cell.eta, v) << "\n";
  }
  for (int n = 0; n <= r.n_max; ++n) out << name << "_" << n << " total: " << r.total(n) << "\n";
}

// ---------------------------------------------------------------------------
// kdecomp

struct KArgs {
  int n = 1;
  int r = 0;
  std::string q = "q";
  std::int64_t height = 0;
  std::string format = "text";
  bool with_ring = false;
  bool symmetric = false;
};

void emit_expr(std::ostream& out, const kgroup::Expr& e, const KArgs& a) {
  const kgroup::Expr shown = a.height > 0 ? kgroup::instantiate_rays(e, a.height) : e;
  kgroup::RenderOptions opts;
  opts.q = a.q;
  opts.with_ring = a.with_ring;
  if (a.format == "json") {
    Json j = io::to_json(shown);
    j["text"] = kgroup::to_text(shown, opts);
    j["latex"] = kgroup::to_latex(shown, opts);
    emit(out, j);
  } else if (a.format == "latex") {
    out << kgroup::to_latex(shown, opts) << "\n";
  } else {
    out << kgroup::to_text(shown, opts) << "\n";
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& module, const std::string& message) {
  err << Json{{"error", {{"code", code}, {"module", module}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Witt vectors over affine monoids, graded Hochschild homology and K-group formulas", "wittray"};
  app.require_subcommand(1);
  app.footer(std::string("Subcommands: ") + kSubcommands);
  auto formats = CLI::IsMember({"json", "text"});

  // monoid
  MonoidArgs ma;
  auto* monoid = app.add_subcommand("monoid", "Affine monoids and truncations");
  monoid->require_subcommand(1);
  auto* m_elements = monoid->add_subcommand("elements", "Members of a truncated monoid, with their rays");
  m_elements->add_option("--input", ma.input, "Truncated monoid JSON (inline or file)")->required();
  m_elements->add_option("--format", ma.format, "json | text")->check(formats);
  auto* m_rays = monoid->add_subcommand("rays", "Rays with primitive vector of max |coordinate| <= height");
  m_rays->add_option("--height", ma.height, "Height bound H >= 1")->required()->check(CLI::PositiveNumber);
  auto* src_input = m_rays->add_option("--input", ma.input, "Affine monoid JSON (inline or file)");
  auto* src_pos = m_rays->add_option("--positive-orthant", ma.positive_orthant, "Rays of N_+^m")
                      ->check(CLI::PositiveNumber);
  auto* src_closed =
      m_rays->add_option("--closed-orthant", ma.closed_orthant, "Rays of N^m")->check(CLI::PositiveNumber);
  auto* src_lattice = m_rays->add_option("--lattice", ma.lattice, "Rays of Z^n")->check(CLI::PositiveNumber);
  src_input->excludes(src_pos, src_closed, src_lattice);
  src_pos->excludes(src_closed, src_lattice);
  src_closed->excludes(src_lattice);
  m_rays->add_option("--format", ma.format, "json | text")->check(formats);
  auto* m_content = monoid->add_subcommand("content", "Content c(gamma) and ray of a member");
  m_content->add_option("--input", ma.input, "Affine monoid JSON (inline or file)")->required();
  m_content->add_option("--gamma", ma.gamma, "Member as a JSON array")->required();

  // witt
  std::string w_input, w_other, w_target, w_format = "json";
  std::int64_t w_m = 0;
  auto* witt = app.add_subcommand("witt", "Big Witt vectors on truncation sets");
  witt->require_subcommand(1);
  std::map<std::string, CLI::App*> witt_ops;
  const std::vector<std::pair<std::string, std::string>> ops = {
      {"add", "Sum of two vectors"},
      {"sub", "Difference of two vectors"},
      {"mul", "Product of two vectors"},
      {"neg", "Additive inverse"},
      {"ghost", "Ghost components"},
      {"from-ghost", "Witt vector with the given ghost components"},
      {"frobenius", "F_m onto T/m"},
      {"verschiebung", "V_m into a target truncation set"},
      {"decompose", "Ray decomposition"}};
  for (const auto& [name, help] : ops) {
    auto* s = witt->add_subcommand(name, help);
    s->add_option("--input", w_input, "Vector JSON (inline or file)")->required();
    if (name == "add" || name == "sub" || name == "mul")
      s->add_option("--other", w_other, "Second vector JSON")->required();
    if (name == "frobenius" || name == "verschiebung")
      s->add_option("--m", w_m, "Positive integer m")->required()->check(CLI::PositiveNumber);
    if (name == "verschiebung")
      s->add_option("--target", w_target, "Target truncation {\"monoid\", \"truncation\"?} (default: input base)");
    s->add_option("--format", w_format, "json | text")->check(formats);
    witt_ops[name] = s;
  }

  // hh / hc
  HomologyArgs ha;
  auto add_homology = [&](const char* name, const char* help) {
    auto* top = app.add_subcommand(name, help);
    top->require_subcommand(1);
    auto* compute = top->add_subcommand("compute", "Cell dimensions through degree nmax");
    compute->add_option("--algebra", ha.algebra, "Algebra JSON {monoid, field?, coefficients?}")->required();
    compute->add_option("--nmax", ha.n_max, "Top homological degree (default 4)")->check(CLI::NonNegativeNumber);
    compute->add_flag("--relative", ha.relative, "Relative to the degree-0 part");
    compute->add_flag("--basis", ha.basis, "Include representative cycles");
    compute->add_option("--cell-bound", ha.cell_bound, "Largest weight degree of a cell (default: top weight)")
        ->check(CLI::PositiveNumber);
    compute->add_option("--cell-cap", ha.cell_cap, "Largest allowed cell dimension")->check(CLI::PositiveNumber);
    compute->add_option("--format", ha.format, "json | text")->check(formats);
    return compute;
  };
  auto* hh_compute = add_homology("hh", "Hochschild homology of truncated monoid algebras");
  auto* hc_compute = add_homology("hc", "Cyclic homology over Q");

  // kdecomp
  KArgs ka;
  auto* kdecomp = app.add_subcommand("kdecomp", "Formal K-group decompositions");
  kdecomp->require_subcommand(1);
  std::map<std::string, CLI::App*> kops;
  const std::vector<std::pair<std::string, std::string>> kinds = {
      {"fundamental", "K_q(k[t_1..t_n]) by the fundamental theorem"},
      {"poly", "K_q(k[t_1..t_n]) as ray families over N_+^r"},
      {"laurent", "K_q(k[Z^n]) as a ray family over Z^n"},
      {"nkpower", "N^n K_q as a ray family over N_+^n"},
      {"relative", "Laurent ray family restricted to the closed orthant"},
      {"rebundle", "Ray-family form of K_q(k[t_1..t_n]) folded back into N^i K_q"}};
  auto text_formats = CLI::IsMember({"text", "latex", "json"});
  for (const auto& [name, help] : kinds) {
    auto* s = kdecomp->add_subcommand(name, help);
    s->add_option("--n", ka.n, "Number of variables")->required()->check(CLI::NonNegativeNumber);
    s->add_option("--q", ka.q, "Degree symbol or integer (default q)");
    s->add_option("--height", ka.height, "Instantiate ray families up to this height")->check(CLI::PositiveNumber);
    s->add_option("--format", ka.format, "text | latex | json")->check(text_formats);
    s->add_flag("--with-ring", ka.with_ring, "Write K_q(k) instead of K_q");
    kops[name] = s;
  }
  auto* korbit = kdecomp->add_subcommand("orbit", "Orbit and stabilizer of R_r under W_n (or S_n)");
  korbit->add_option("--n", ka.n, "Rank n")->required()->check(CLI::NonNegativeNumber);
  korbit->add_option("--r", ka.r, "Orthant rank r <= n")->required()->check(CLI::NonNegativeNumber);
  korbit->add_flag("--symmetric", ka.symmetric, "Use S_n instead of W_n");

  auto* selftest = app.add_subcommand("selftest", "Runs the fast invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "Subcommands: " << kSubcommands << "\nRun with --help for details.\n";
    return 2;
  }

  try {
    if (*monoid) {
      if (*m_elements) {
        const TruncatedMonoid t = io::truncated_monoid_from_json(load_document(ma.input));
        std::vector<Point> rays;
        for (const auto& r : t.rays()) rays.push_back(r.primitive);
        if (ma.format == "json") {
          emit(out, Json{{"monoid", io::to_json(t)}, {"elements", t.enumerate()}, {"rays", rays}});
        } else {
          for (const auto& g : t.enumerate()) out << point_text(g) << " degree " << t.degree(g) << "\n";
        }
      } else if (*m_rays) {
        std::vector<Point> rays;
        if (!ma.input.empty())
          rays = monoid_rays(io::monoid_from_json(load_document(ma.input)), ma.height);
        else if (ma.positive_orthant > 0)
          rays = kgroup::enumerate_rays(kgroup::RaySet::positive_orthant(ma.positive_orthant), ma.height);
        else if (ma.closed_orthant > 0)
          rays = kgroup::enumerate_rays(kgroup::RaySet::closed_orthant(ma.closed_orthant), ma.height);
        else if (ma.lattice > 0)
          rays = kgroup::enumerate_rays(kgroup::RaySet::lattice(ma.lattice), ma.height);
        else
          throw Error(ErrorCode::InvalidArgument, kModule,
                      "monoid rays needs one of --input, --positive-orthant, --closed-orthant, --lattice");
        emit_rays(out, rays, ma.format);
      } else if (*m_content) {
        const AffineMonoid m = io::monoid_from_json(load_document(ma.input));
        const Point g = parse_point_arg(ma.gamma, "gamma");
        emit(out, Json{{"gamma", g}, {"content", m.content(g)}, {"ray", m.ray_of(g).primitive}});
      }
    } else if (*witt) {
      auto with_other = [&](auto op) {
        const WittVector a = io::witt_from_json(load_document(w_input));
        const WittVector b = io::witt_from_json(load_document(w_other));
        emit_vector(out, op(a, b), w_format);
      };
      if (*witt_ops["add"]) {
        with_other([](const WittVector& a, const WittVector& b) { return add(a, b); });
      } else if (*witt_ops["sub"]) {
        with_other([](const WittVector& a, const WittVector& b) { return sub(a, b); });
      } else if (*witt_ops["mul"]) {
        with_other([](const WittVector& a, const WittVector& b) { return mul(a, b); });
      } else if (*witt_ops["neg"]) {
        emit_vector(out, neg(io::witt_from_json(load_document(w_input))), w_format);
      } else if (*witt_ops["ghost"]) {
        emit_vector(out, ghost(io::witt_from_json(load_document(w_input))), w_format);
      } else if (*witt_ops["from-ghost"]) {
        auto v = io::vector_from_json(load_document(w_input));
        if (!v.ghost)
          throw Error(ErrorCode::Parse, kModule, "from-ghost expects \"components\": \"ghost\"");
        emit_vector(out, from_ghost(v.ghost_components), w_format);
      } else if (*witt_ops["frobenius"]) {
        emit_vector(out, frobenius(w_m, io::witt_from_json(load_document(w_input))), w_format);
      } else if (*witt_ops["verschiebung"]) {
        const WittVector a = io::witt_from_json(load_document(w_input));
        if (w_target.empty()) {
          emit_vector(out, verschiebung(w_m, a), w_format);
        } else {
          const Json t = load_document(w_target);
          io::require_only(t, {"monoid", "truncation"}, "target");
          emit_vector(out, verschiebung(w_m, a, io::truncation_from_json(t)), w_format);
        }
      } else if (*witt_ops["decompose"]) {
        const WittVector a = io::witt_from_json(load_document(w_input));
        Json parts = Json::array();
        for (const auto& [ray, v] : ray_decompose(a))
          parts.push_back(Json{{"ray", ray.primitive}, {"vector", io::to_json(v)}});
        emit(out, Json{{"parts", parts}});
      }
    } else if (*hh_compute) {
      run_homology(ha, false, out);
    } else if (*hc_compute) {
      run_homology(ha, true, out);
    } else if (*kdecomp) {
      if (*korbit) {
        const auto o = ka.symmetric ? kgroup::symmetric_orbit(ka.n, ka.r) : kgroup::wreath_orbit(ka.n, ka.r);
        emit(out, Json{{"group", ka.symmetric ? "S_n" : "W_n"},
                       {"n", ka.n},
                       {"r", ka.r},
                       {"orbit_size", o.orbit_size.get_str()},
                       {"stabilizer_order", o.stabilizer_order.get_str()},
                       {"enumerated", o.enumerated}});
      } else if (*kops["fundamental"]) {
        emit_expr(out, kgroup::fundamental_theorem(ka.n), ka);
      } else if (*kops["poly"]) {
        emit_expr(out, kgroup::polynomial_decomposition(ka.n), ka);
      } else if (*kops["laurent"]) {
        emit_expr(out, kgroup::davis_laurent(ka.n), ka);
      } else if (*kops["nkpower"]) {
        emit_expr(out, kgroup::nk_power(ka.n), ka);
      } else if (*kops["relative"]) {
        emit_expr(out, kgroup::restrict_to_closed_orthant(kgroup::davis_laurent(ka.n)), ka);
      } else if (*kops["rebundle"]) {
        emit_expr(out, kgroup::rebundle(kgroup::polynomial_decomposition(ka.n)), ka);
      }
    } else if (*selftest) {
      return run_selftest(out) ? 0 : 1;
    }
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.module(), e.what());
    return 1;
  } catch (const Json::exception& e) {
    emit_error(err, error_code_name(ErrorCode::Parse), kModule, e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, error_code_name(ErrorCode::Internal), kModule, e.what());
    return 1;
  }
  return 0;
}

}  // namespace wittray::cli
