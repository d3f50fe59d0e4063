#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wittray/ring.hpp"

namespace wittray {

/// Exact field for rank computations: Q or Z/p. Scalars are Rationals kept
/// in normal form (integers in [0, p) for Z/p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// Accepts Q and Z/p only.
  static Field of(const CoefficientRing& ring);

  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  CoefficientRing ring() const;

  Rational normalize(const Rational& x) const;
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational inv(const Rational& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Sparse vector as (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// Accumulates sparse contributions; zero entries are dropped on finish.
class SparseBuilder {
 public:
  explicit SparseBuilder(const Field& f) : field_(&f) {}
  void add(std::uint32_t i, const Rational& x);
  void add(const SparseVec& v, const Rational& scale);
  SparseVec finish();

 private:
  const Field* field_;
  std::map<std::uint32_t, Rational> acc_;
};

/// Matrix stored by columns: column j is the image of basis vector j.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  static SparseMatrix zero(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n, const Rational& scale = 1);
  bool is_zero() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

SparseVec apply(const Field& f, const SparseMatrix& m, const SparseVec& v);
/// left * right (apply right first).
SparseMatrix compose(const Field& f, const SparseMatrix& left, const SparseMatrix& right);
SparseMatrix add(const Field& f, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(const Field& f, const SparseMatrix& a, const Rational& c);

/// Incremental row echelon form. Each stored row has leading coefficient 1
/// at its pivot and no entries at columns pivoted before it was inserted.
class Echelon {
 public:
  explicit Echelon(Field f) : field_(std::move(f)) {}

  /// Eliminates all pivot columns from v.
  SparseVec reduce(SparseVec v) const;
  /// Adds v to the row space; false if v was already in it.
  bool insert(SparseVec v);
  std::size_t rank() const noexcept { return rows_.size(); }
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

 private:
  Field field_;
  std::map<std::uint32_t, SparseVec> rows_;  // pivot -> row
};

std::size_t rank(const Field& f, const SparseMatrix& m);
/// Basis of the null space of m (as vectors in the column space).
std::vector<SparseVec> kernel(const Field& f, const SparseMatrix& m);
/// Cycles of `outgoing` that are independent modulo the image of
/// `incoming`: a basis of ker(outgoing)/im(incoming).
std::vector<SparseVec> homology_basis(const Field& f, const SparseMatrix& outgoing, const SparseMatrix& incoming);

}  // namespace wittray
