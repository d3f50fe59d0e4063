#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittray/monoid.hpp"
#include "wittray/ring.hpp"

namespace wittray::kgroup {

/// N^i K_{q-shift}; npower 0 is K, 1 is NK.
struct Atom {
  int npower = 0;
  int shift = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Formal sum of atoms with positive multiplicities.
using AtomSum = std::map<Atom, Integer>;

/// Integer polynomial in the shift operator L (L^r NK_q = NK_{q-r}).
class LPolynomial {
 public:
  LPolynomial() = default;
  static LPolynomial monomial(int power, const Integer& c = 1);
  /// (1 + L)^k.
  static LPolynomial one_plus_l(int k);

  const std::map<int, Integer>& coefficients() const noexcept { return coeffs_; }
  LPolynomial operator+(const LPolynomial& o) const;
  LPolynomial operator*(const LPolynomial& o) const;
  /// Exact quotient, if this is divisible by d with non-negative powers.
  std::optional<LPolynomial> divide(const LPolynomial& d) const;
  /// Applies the polynomial to an atom sum (shifting each atom).
  AtomSum apply(const AtomSum& s) const;
  static LPolynomial from_shifts(const AtomSum& s, int npower);

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

 private:
  void add_term(int power, const Integer& c);
  std::map<int, Integer> coeffs_;
};

/// A set of rays indexing a family of summands.
struct RaySet {
  enum class Kind { Lattice, ClosedOrthant, PositiveOrthant, SingleRay };
  Kind kind = Kind::Lattice;
  int dim = 0;                  // n for Z^n and N^m; m for N_+^m
  std::vector<int> coordinates;  // embedding of N_+^m into Z^ambient (1-based); empty = abstract
  int ambient = 0;              // ambient rank when embedded
  Point ray;                    // SingleRay only

  static RaySet lattice(int n);
  static RaySet closed_orthant(int m);
  static RaySet positive_orthant(int m);
  static RaySet embedded_positive_orthant(int ambient, std::vector<int> coordinates);
  static RaySet single(Point primitive);

  /// Number of rays when finite.
  std::optional<std::size_t> cardinality() const;

  friend auto operator<=>(const RaySet&, const RaySet&) = default;
};

/// Canonical formal direct sum of atoms and ray-indexed families. Abstract
/// families with one or two rays (N_+^1, N^1 and Z^1) are folded into atoms.
class Expr {
 public:
  Expr() = default;
  static Expr atom(const Atom& a, const Integer& multiplicity = 1);
  static Expr family(const RaySet& rays, const AtomSum& inner);

  const AtomSum& atoms() const noexcept { return atoms_; }
  const std::map<RaySet, AtomSum>& families() const noexcept { return families_; }
  bool is_zero() const noexcept { return atoms_.empty() && families_.empty(); }

  Expr operator+(const Expr& o) const;
  Expr& operator+=(const Expr& o);
  Expr scaled(const Integer& c) const;
  /// Applies an L-polynomial to every atom, including inside families.
  Expr shifted(const LPolynomial& p) const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  void add_atom(const Atom& a, const Integer& c);
  void add_family(const RaySet& r, const AtomSum& inner);
  AtomSum atoms_;
  std::map<RaySet, AtomSum> families_;
};

/// K_q(k[t_1..t_n]) = K_q + sum_i C(n,i) N^i K_q.
Expr fundamental_theorem(int n);
/// K_q(k[Z^n]) = (1+L)^n K_q + sum over rays of Z^n of (1+L)^{n-1} NK_q.
Expr davis_laurent(int n);
/// N^n K_q as the family over rays of N_+^n of (1+L)^{n-1} NK_q.
Expr nk_power(int n);
/// K_q + sum_{r=1}^n sum over rays of N_+^r of C(n,r) (1+L)^{r-1} NK_q.
Expr polynomial_decomposition(int n);

/// Replaces every N^i K_{q-s} atom (i >= 1) by L^s nk_power(i).
Expr substitute_nk_powers(const Expr& e);
/// Folds families over abstract N_+^r whose inner sum is a multiple of
/// (1+L)^{r-1} NK back into N^r K atoms.
Expr rebundle(const Expr& e);
/// Keeps only the Z^n families, restricted to rays of the closed orthant N^n.
Expr restrict_to_closed_orthant(const Expr& e);
/// Splits closed-orthant families along N^m - 0 = union over nonempty
/// coordinate subsets S of N_+^S, as abstract N_+^{|S|} families.
Expr split_closed_orthant(const Expr& e);
/// Drops coordinate embeddings of N_+^m families.
Expr forget_embedding(const Expr& e);

/// Rays whose primitive vector has max |coordinate| <= height, sorted.
std::vector<Point> enumerate_rays(const RaySet& rays, std::int64_t height);
/// Replaces each family by single-ray families for the rays up to height.
Expr instantiate_rays(const Expr& e, std::int64_t height);

struct RenderOptions {
  std::string q = "q";       // symbol or decimal integer
  bool with_ring = false;   // append "(k)"
};
std::string to_text(const Expr& e, const RenderOptions& opts = {});
std::string to_latex(const Expr& e, const RenderOptions& opts = {});

// ---------------------------------------------------------------------------
// Signed permutations

/// Element of W_n = (Z/2) wr S_n acting on Z^n: x -> y with
/// y[perm[i]] = signs[i] * x[i].
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  Point apply(const Point& x) const;
  /// (this * o)(x) = this(o(x)).
  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// All 2^n n! elements of W_n (n <= 8).
std::vector<SignedPermutation> wreath_group(int n);

struct OrbitData {
  Integer orbit_size;
  Integer stabilizer_order;
  bool enumerated = false;  // true when counted element by element
};

/// Orbit of R_r (rays of N_+^r on the first r coordinates) under W_n.
/// Counted by enumeration for n <= 6, by 2^r C(n,r) and r! 2^{n-r} (n-r)! otherwise.
OrbitData wreath_orbit(int n, int r);
/// The same for the subgroup S_n of coordinate permutations.
OrbitData symmetric_orbit(int n, int r);

Integer binomial(int n, int k);
Integer factorial(int n);

}  // namespace wittray::kgroup
