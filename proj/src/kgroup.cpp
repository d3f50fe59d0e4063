#include "wittray/kgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wittray/error.hpp"

namespace wittray::kgroup {

namespace {

constexpr const char* kModule = "kgroup-calculus";

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidArgument, kModule, msg);
}

std::int64_t gcd_all(const Point& v) {
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

AtomSum merge(AtomSum a, const AtomSum& b) {
  for (const auto& [atom, c] : b) a[atom] += c;
  return a;
}

AtomSum scale(const AtomSum& s, const Integer& c) {
  AtomSum out;
  if (c == 0) return out;
  for (const auto& [atom, m] : s) out[atom] = m * c;
  return out;
}

}  // namespace

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  if (n < 0) invalid("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// ---------------------------------------------------------------------------
// LPolynomial

void LPolynomial::add_term(int power, const Integer& c) {
  if (power < 0) invalid("negative power of L");
  if (c == 0) return;
  auto& slot = coeffs_[power];
  slot += c;
  if (slot == 0) coeffs_.erase(power);
}

LPolynomial LPolynomial::monomial(int power, const Integer& c) {
  LPolynomial p;
  p.add_term(power, c);
  return p;
}

LPolynomial LPolynomial::one_plus_l(int k) {
  if (k < 0) invalid("(1+L)^k needs k >= 0");
  LPolynomial p;
  for (int i = 0; i <= k; ++i) p.add_term(i, binomial(k, i));
  return p;
}

LPolynomial LPolynomial::operator+(const LPolynomial& o) const {
  LPolynomial r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

LPolynomial LPolynomial::operator*(const LPolynomial& o) const {
  LPolynomial r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

std::optional<LPolynomial> LPolynomial::divide(const LPolynomial& d) const {
  if (d.coeffs_.empty()) invalid("division by the zero L-polynomial");
  if (coeffs_.empty()) return LPolynomial{};
  const auto [d0, dc] = *d.coeffs_.begin();
  const int span = coeffs_.rbegin()->first - d.coeffs_.rbegin()->first;
  LPolynomial rest = *this;
  LPolynomial q;
  while (!rest.coeffs_.empty()) {
    const auto [e, c] = *rest.coeffs_.begin();
    const int qe = e - d0;
    if (qe < 0 || qe > span) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    const Integer qc = c / dc;
    q.add_term(qe, qc);
    for (const auto& [de, dcoef] : d.coeffs_) rest.add_term(qe + de, -qc * dcoef);
  }
  return q;
}

AtomSum LPolynomial::apply(const AtomSum& s) const {
  AtomSum out;
  for (const auto& [atom, m] : s)
    for (const auto& [e, c] : coeffs_) {
      if (c < 0) invalid("negative multiplicity in a formal direct sum");
      out[Atom{atom.npower, atom.shift + e}] += m * c;
    }
  return out;
}

LPolynomial LPolynomial::from_shifts(const AtomSum& s, int npower) {
  LPolynomial p;
  for (const auto& [atom, m] : s)
    if (atom.npower == npower) p.add_term(atom.shift, m);
  return p;
}

// ---------------------------------------------------------------------------
// RaySet

RaySet RaySet::lattice(int n) {
  if (n < 1) invalid("Z^n needs n >= 1");
  RaySet r;
  r.kind = Kind::Lattice;
  r.dim = n;
  return r;
}

RaySet RaySet::closed_orthant(int m) {
  if (m < 1) invalid("N^m needs m >= 1");
  RaySet r;
  r.kind = Kind::ClosedOrthant;
  r.dim = m;
  return r;
}

RaySet RaySet::positive_orthant(int m) {
  if (m < 1) invalid("N_+^m needs m >= 1");
  RaySet r;
  r.kind = Kind::PositiveOrthant;
  r.dim = m;
  return r;
}

RaySet RaySet::embedded_positive_orthant(int ambient, std::vector<int> coordinates) {
  std::sort(coordinates.begin(), coordinates.end());
  if (coordinates.empty()) invalid("empty coordinate subset");
  if (std::adjacent_find(coordinates.begin(), coordinates.end()) != coordinates.end())
    invalid("repeated coordinate in subset");
  if (coordinates.front() < 1 || coordinates.back() > ambient)
    invalid("coordinate subset outside 1..ambient");
  RaySet r;
  r.kind = Kind::PositiveOrthant;
  r.dim = static_cast<int>(coordinates.size());
  r.coordinates = std::move(coordinates);
  r.ambient = ambient;
  return r;
}

RaySet RaySet::single(Point primitive) {
  if (primitive.empty() || gcd_all(primitive) != 1) invalid("a named ray needs a primitive vector");
  RaySet r;
  r.kind = Kind::SingleRay;
  r.dim = static_cast<int>(primitive.size());
  r.ray = std::move(primitive);
  return r;
}

std::optional<std::size_t> RaySet::cardinality() const {
  switch (kind) {
    case Kind::Lattice:
      if (dim == 1) return 2;
      break;
    case Kind::ClosedOrthant:
    case Kind::PositiveOrthant:
      if (dim == 1) return 1;
      break;
    case Kind::SingleRay:
      return 1;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Expr

void Expr::add_atom(const Atom& a, const Integer& c) {
  if (c < 0) invalid("negative multiplicity in a formal direct sum");
  if (a.shift < 0 || a.npower < 0) invalid("atoms need non-negative shift and N-power");
  if (c == 0) return;
  atoms_[a] += c;
}

void Expr::add_family(const RaySet& r, const AtomSum& inner) {
  AtomSum clean;
  for (const auto& [atom, c] : inner) {
    if (c < 0) invalid("negative multiplicity in a formal direct sum");
    if (atom.shift < 0 || atom.npower < 0) invalid("atoms need non-negative shift and N-power");
    if (c != 0) clean[atom] += c;
  }
  if (clean.empty()) return;
  auto card = r.cardinality();
  if (card && r.kind != RaySet::Kind::SingleRay && r.coordinates.empty()) {
    for (const auto& [atom, c] : clean) add_atom(atom, c * static_cast<unsigned long>(*card));
    return;
  }
  families_[r] = merge(std::move(families_[r]), clean);
}

Expr Expr::atom(const Atom& a, const Integer& multiplicity) {
  Expr e;
  e.add_atom(a, multiplicity);
  return e;
}

Expr Expr::family(const RaySet& rays, const AtomSum& inner) {
  Expr e;
  e.add_family(rays, inner);
  return e;
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [a, c] : o.atoms_) add_atom(a, c);
  for (const auto& [r, inner] : o.families_) add_family(r, inner);
  return *this;
}

Expr Expr::operator+(const Expr& o) const {
  Expr r = *this;
  r += o;
  return r;
}

Expr Expr::scaled(const Integer& c) const {
  if (c < 0) invalid("negative multiplicity in a formal direct sum");
  Expr r;
  if (c == 0) return r;
  for (const auto& [a, m] : atoms_) r.add_atom(a, m * c);
  for (const auto& [rays, inner] : families_) r.add_family(rays, scale(inner, c));
  return r;
}

Expr Expr::shifted(const LPolynomial& p) const {
  Expr r;
  for (const auto& [a, c] : p.apply(atoms_)) r.add_atom(a, c);
  for (const auto& [rays, inner] : families_) r.add_family(rays, p.apply(inner));
  return r;
}

// ---------------------------------------------------------------------------
// Formulas

namespace {

AtomSum nk_sum(const LPolynomial& p) { return p.apply(AtomSum{{Atom{1, 0}, 1}}); }

}  // namespace

Expr fundamental_theorem(int n) {
  if (n < 0) invalid("fundamental theorem needs n >= 0");
  Expr e = Expr::atom(Atom{0, 0});
  for (int i = 1; i <= n; ++i) e += Expr::atom(Atom{i, 0}, binomial(n, i));
  return e;
}

Expr davis_laurent(int n) {
  if (n < 1) invalid("Laurent formula needs n >= 1");
  Expr e;
  for (const auto& [a, c] : LPolynomial::one_plus_l(n).apply(AtomSum{{Atom{0, 0}, 1}}))
    e += Expr::atom(a, c);
  e += Expr::family(RaySet::lattice(n), nk_sum(LPolynomial::one_plus_l(n - 1)));
  return e;
}

Expr nk_power(int n) {
  if (n < 1) invalid("N^n K needs n >= 1");
  return Expr::family(RaySet::positive_orthant(n), nk_sum(LPolynomial::one_plus_l(n - 1)));
}

Expr polynomial_decomposition(int n) {
  if (n < 1) invalid("polynomial decomposition needs n >= 1");
  Expr e = Expr::atom(Atom{0, 0});
  for (int r = 1; r <= n; ++r)
    e += Expr::family(RaySet::positive_orthant(r),
                      nk_sum(LPolynomial::monomial(0, binomial(n, r)) * LPolynomial::one_plus_l(r - 1)));
  return e;
}

Expr substitute_nk_powers(const Expr& e) {
  Expr out;
  for (const auto& [a, c] : e.atoms()) {
    if (a.npower == 0)
      out += Expr::atom(a, c);
    else
      out += nk_power(a.npower).shifted(LPolynomial::monomial(a.shift, c));
  }
  for (const auto& [rays, inner] : e.families()) out += Expr::family(rays, inner);
  return out;
}

Expr rebundle(const Expr& e) {
  Expr out;
  for (const auto& [a, c] : e.atoms()) out += Expr::atom(a, c);
  for (const auto& [rays, inner] : e.families()) {
    const bool abstract_orthant =
        rays.kind == RaySet::Kind::PositiveOrthant && rays.coordinates.empty();
    const bool pure_nk = std::all_of(inner.begin(), inner.end(),
                                     [](const auto& t) { return t.first.npower == 1; });
    std::optional<LPolynomial> q;
    if (abstract_orthant && pure_nk)
      q = LPolynomial::from_shifts(inner, 1).divide(LPolynomial::one_plus_l(rays.dim - 1));
    if (!q) {
      out += Expr::family(rays, inner);
      continue;
    }
    if (std::any_of(q->coefficients().begin(), q->coefficients().end(),
                    [](const auto& t) { return t.second < 0; })) {
      out += Expr::family(rays, inner);
      continue;
    }
    for (const auto& [s, c] : q->coefficients()) out += Expr::atom(Atom{rays.dim, s}, c);
  }
  return out;
}

Expr restrict_to_closed_orthant(const Expr& e) {
  Expr out;
  for (const auto& [rays, inner] : e.families())
    if (rays.kind == RaySet::Kind::Lattice)
      out += Expr::family(RaySet::closed_orthant(rays.dim), inner);
  return out;
}

Expr split_closed_orthant(const Expr& e) {
  Expr out;
  for (const auto& [a, c] : e.atoms()) out += Expr::atom(a, c);
  for (const auto& [rays, inner] : e.families()) {
    if (rays.kind != RaySet::Kind::ClosedOrthant) {
      out += Expr::family(rays, inner);
      continue;
    }
    for (int k = 1; k <= rays.dim; ++k)
      out += Expr::family(RaySet::positive_orthant(k), scale(inner, binomial(rays.dim, k)));
  }
  return out;
}

Expr forget_embedding(const Expr& e) {
  Expr out;
  for (const auto& [a, c] : e.atoms()) out += Expr::atom(a, c);
  for (const auto& [rays, inner] : e.families()) {
    if (rays.kind == RaySet::Kind::PositiveOrthant && !rays.coordinates.empty())
      out += Expr::family(RaySet::positive_orthant(rays.dim), inner);
    else
      out += Expr::family(rays, inner);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rays

namespace {

constexpr std::uint64_t kRayBudget = 20'000'000;

bool ray_less(const Point& a, const Point& b) {
  auto key = [](const Point& v) {
    std::int64_t h = 0, l1 = 0;
    for (auto c : v) {
      h = std::max(h, c < 0 ? -c : c);
      l1 += c < 0 ? -c : c;
    }
    return std::pair{h, l1};
  };
  auto ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

// Primitive vectors with entries in [1, height] on `coords` (0-based), zero elsewhere.
void positive_rays(int ambient, const std::vector<int>& coords, std::int64_t height,
                   std::vector<Point>& out) {
  const std::size_t m = coords.size();
  double total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= static_cast<double>(height);
  if (total > static_cast<double>(kRayBudget))
    throw Error(ErrorCode::ResourceLimit, kModule, "ray enumeration exceeds the height budget");
  std::vector<std::int64_t> digits(m, 1);
  while (true) {
    std::int64_t g = 0;
    for (auto d : digits) g = std::gcd(g, d);
    if (g == 1) {
      Point v(static_cast<std::size_t>(ambient), 0);
      for (std::size_t i = 0; i < m; ++i) v[static_cast<std::size_t>(coords[i])] = digits[i];
      out.push_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < m && digits[i] == height) digits[i++] = 1;
    if (i == m) break;
    ++digits[i];
  }
}

}  // namespace

std::vector<Point> enumerate_rays(const RaySet& rays, std::int64_t height) {
  if (height < 1) invalid("ray height must be >= 1");
  std::vector<Point> out;
  switch (rays.kind) {
    case RaySet::Kind::PositiveOrthant: {
      std::vector<int> coords;
      int ambient = rays.dim;
      if (rays.coordinates.empty()) {
        for (int i = 0; i < rays.dim; ++i) coords.push_back(i);
      } else {
        ambient = rays.ambient;
        for (int c : rays.coordinates) coords.push_back(c - 1);
      }
      positive_rays(ambient, coords, height, out);
      break;
    }
    case RaySet::Kind::ClosedOrthant:
    case RaySet::Kind::Lattice: {
      const int n = rays.dim;
      if (n > 20) throw Error(ErrorCode::ResourceLimit, kModule, "ambient rank too large");
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> coords;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) coords.push_back(i);
        std::vector<Point> base;
        positive_rays(n, coords, height, base);
        if (rays.kind == RaySet::Kind::ClosedOrthant) {
          out.insert(out.end(), base.begin(), base.end());
          continue;
        }
        for (std::uint32_t signs = 0; signs < (1u << coords.size()); ++signs)
          for (Point v : base) {
            for (std::size_t j = 0; j < coords.size(); ++j)
              if (signs & (1u << j)) v[static_cast<std::size_t>(coords[j])] *= -1;
            out.push_back(std::move(v));
          }
      }
      break;
    }
    case RaySet::Kind::SingleRay: {
      std::int64_t h = 0;
      for (auto c : rays.ray) h = std::max(h, c < 0 ? -c : c);
      if (h <= height) out.push_back(rays.ray);
      break;
    }
  }
  std::sort(out.begin(), out.end(), ray_less);
  return out;
}

Expr instantiate_rays(const Expr& e, std::int64_t height) {
  if (height < 1) invalid("ray height must be >= 1");
  Expr out;
  for (const auto& [a, c] : e.atoms()) out += Expr::atom(a, c);
  for (const auto& [rays, inner] : e.families())
    for (auto& v : enumerate_rays(rays, height)) out += Expr::family(RaySet::single(v), inner);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Style {
  bool latex;
  std::string join;
  std::string times;
};

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

bool is_integer_symbol(const std::string& q) {
  if (q.empty()) return false;
  std::size_t i = (q[0] == '-') ? 1 : 0;
  return i < q.size() && std::all_of(q.begin() + static_cast<long>(i), q.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string subscript(const std::string& q, int shift, const Style& st) {
  const std::string minus = st.latex ? "-" : "−";
  std::string body;
  if (is_integer_symbol(q)) {
    Integer v(q);
    v -= shift;
    body = v.get_str();
    if (v < 0) body = minus + body.substr(1);
  } else {
    body = shift == 0 ? q : q + minus + std::to_string(shift);
  }
  const bool single = body.size() == 1 || (!st.latex && body == "q");
  return single ? "_" + body : "_{" + body + "}";
}

std::string atom_name(const Atom& a, const RenderOptions& o, const Style& st) {
  std::string s;
  if (a.npower == 1)
    s = "N";
  else if (a.npower > 1)
    s = st.latex ? "N^" + (a.npower < 10 ? std::to_string(a.npower) : "{" + std::to_string(a.npower) + "}")
                 : "N" + superscript(a.npower);
  s += "K" + subscript(o.q, a.shift, st);
  if (o.with_ring) s += "(k)";
  return s;
}

std::string with_multiplicity(const Integer& c, const std::string& body, const Style& st) {
  if (c == 1) return body;
  return c.get_str() + st.times + body;
}

std::string atom_sum(const AtomSum& s, const RenderOptions& o, const Style& st) {
  std::string out;
  for (const auto& [a, c] : s) {
    if (!out.empty()) out += st.join;
    out += with_multiplicity(c, atom_name(a, o, st), st);
  }
  return out;
}

std::string power(const std::string& base, int n, const Style& st) {
  if (n == 1) return base;
  if (st.latex) return base + "^" + (n < 10 ? std::to_string(n) : "{" + std::to_string(n) + "}");
  return base + superscript(n);
}

std::string index_set(const RaySet& r, const Style& st) {
  const std::string prefix = st.latex ? "\\rho\\subset " : "ρ⊂";
  switch (r.kind) {
    case RaySet::Kind::Lattice:
      return prefix + power(st.latex ? "\\Z" : "ℤ", r.dim, st);
    case RaySet::Kind::ClosedOrthant:
      return prefix + power(st.latex ? "\\N" : "ℕ", r.dim, st);
    case RaySet::Kind::PositiveOrthant: {
      const std::string base = st.latex ? "\\No" : "ℕ₊";
      if (r.coordinates.empty()) return prefix + power(base, r.dim, st);
      std::string list;
      for (int c : r.coordinates) list += (list.empty() ? "" : ",") + std::to_string(c);
      return prefix + base + (st.latex ? "^{\\{" + list + "\\}}" : "^{" + list + "}");
    }
    case RaySet::Kind::SingleRay: {
      std::string v;
      for (auto c : r.ray) v += (v.empty() ? "" : ",") + std::to_string(c);
      return (st.latex ? "\\rho=(" : "ρ=(") + v + ")";
    }
  }
  return {};
}

std::string render(const Expr& e, const RenderOptions& o, const Style& st) {
  if (e.is_zero()) return "0";
  const std::size_t terms = e.atoms().size() + e.families().size();
  std::string out = atom_sum(e.atoms(), o, st);
  for (const auto& [rays, inner] : e.families()) {
    Integer g = 0;
    for (const auto& [a, c] : inner) g = gcd(g, c);
    AtomSum reduced;
    for (const auto& [a, c] : inner) reduced[a] = c / g;
    std::string body = atom_sum(reduced, o, st);
    const bool wrap = reduced.size() > 1 && (terms > 1 || g != 1);
    const std::string big = st.latex ? "\\bigoplus\\nolimits_{" + index_set(rays, st) + "}"
                                     : "⨁_{" + index_set(rays, st) + "}";
    std::string term = wrap ? big + "(" + body + ")" : big + " " + body;
    if (!out.empty()) out += st.join;
    out += with_multiplicity(g, term, st);
  }
  return out;
}

}  // namespace

std::string to_text(const Expr& e, const RenderOptions& opts) {
  return render(e, opts, Style{false, " ⊕ ", "·"});
}

std::string to_latex(const Expr& e, const RenderOptions& opts) {
  return render(e, opts, Style{true, "\\oplus ", ""});
}

// ---------------------------------------------------------------------------
// Signed permutations

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0) invalid("negative rank");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return SignedPermutation(std::move(p), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int n = static_cast<int>(perm_.size());
  if (signs_.size() != perm_.size()) invalid("permutation and sign vector differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) invalid("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int s : signs_)
    if (s != 1 && s != -1) invalid("signs must be +1 or -1");
}

Point SignedPermutation::apply(const Point& x) const {
  if (x.size() != perm_.size())
    throw Error(ErrorCode::DimensionMismatch, kModule, "vector rank differs from permutation rank");
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(perm_[i])] = signs_[i] * x[i];
  return y;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, kModule, "ranks differ");
  std::vector<int> p(perm_.size()), s(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto j = static_cast<std::size_t>(o.perm_[i]);
    p[i] = perm_[j];
    s[i] = signs_[j] * o.signs_[i];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> p(perm_.size()), s(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto j = static_cast<std::size_t>(perm_[i]);
    p[j] = static_cast<int>(i);
    s[j] = signs_[i];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

std::vector<SignedPermutation> wreath_group(int n) {
  if (n < 0 || n > 8) invalid("wreath group enumeration needs 0 <= n <= 8");
  std::vector<SignedPermutation> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask & (1u << i)) ? -1 : 1;
      out.emplace_back(p, std::move(s));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

std::vector<Point> first_orthant(int n, int r) {
  if (r == 0) return {};
  std::vector<int> coords(static_cast<std::size_t>(r));
  std::iota(coords.begin(), coords.end(), 1);
  return enumerate_rays(RaySet::embedded_positive_orthant(n, coords), 2);
}

OrbitData orbit(int n, int r, bool with_signs) {
  if (n < 0 || r < 0) invalid("orbit needs n, r >= 0");
  if (r > n) invalid("orbit of R_r needs r <= n");
  OrbitData d;
  if (n > 6) {
    d.orbit_size = binomial(n, r);
    d.stabilizer_order = factorial(r) * factorial(n - r);
    if (with_signs) {
      d.orbit_size <<= r;
      d.stabilizer_order <<= (n - r);
    }
    return d;
  }
  auto base = first_orthant(n, r);
  std::sort(base.begin(), base.end());
  std::set<std::vector<Point>> images;
  Integer stabilizer = 0;
  for (const auto& g : wreath_group(n)) {
    if (!with_signs && std::any_of(g.signs().begin(), g.signs().end(), [](int s) { return s < 0; }))
      continue;
    std::vector<Point> img;
    img.reserve(base.size());
    for (const auto& v : base) img.push_back(g.apply(v));
    std::sort(img.begin(), img.end());
    if (img == base) stabilizer += 1;
    images.insert(std::move(img));
  }
  d.orbit_size = static_cast<unsigned long>(images.size());
  d.stabilizer_order = stabilizer;
  d.enumerated = true;
  return d;
}

}  // namespace

OrbitData wreath_orbit(int n, int r) { return orbit(n, r, true); }
OrbitData symmetric_orbit(int n, int r) { return orbit(n, r, false); }

}  // namespace wittray::kgroup
