#include "wittray/linalg.hpp"

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "linalg";

// dst += c * src on an ordered map.
void axpy(const Field& f, std::map<std::uint32_t, Rational>& dst, const SparseVec& src, const Rational& c) {
  for (const auto& [j, x] : src) {
    auto [it, inserted] = dst.emplace(j, f.mul(c, x));
    if (!inserted) {
      it->second = f.add(it->second, f.mul(c, x));
      if (it->second == 0) dst.erase(it);
    }
  }
}

SparseVec to_sparse(const std::map<std::uint32_t, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, x] : m)
    if (x != 0) v.emplace_back(i, x);
  return v;
}

struct TrackedRow {
  SparseVec row;
  SparseVec combination;
};

}  // namespace

Field Field::prime(std::uint64_t p) {
  CoefficientRing::prime_field(p);  // validates primality
  return Field(p);
}

Field Field::of(const CoefficientRing& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals: return rationals();
    case RingKind::PrimeField: return prime(ring.prime());
    default:
      throw Error(ErrorCode::Unsupported, kModule,
                  "homology is computed over Q or Z/p only, not over " + ring.describe());
  }
}

CoefficientRing Field::ring() const {
  return p_ == 0 ? CoefficientRing::rationals() : CoefficientRing::prime_field(p_);
}

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) return x;
  const Integer p(std::to_string(p_));
  Integer num = x.get_num() % p;
  Integer den = x.get_den() % p;
  if (den == 0) throw Error(ErrorCode::NonExactDivision, kModule, "denominator divisible by the characteristic");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw Error(ErrorCode::Internal, kModule, "inverting zero");
  return normalize(1 / a);
}

void SparseBuilder::add(std::uint32_t i, const Rational& x) {
  if (x == 0) return;
  auto [it, inserted] = acc_.emplace(i, field_->normalize(x));
  if (!inserted) it->second = field_->add(it->second, x);
}

void SparseBuilder::add(const SparseVec& v, const Rational& scale) {
  for (const auto& [i, x] : v) add(i, x * scale);
}

SparseVec SparseBuilder::finish() {
  SparseVec v = to_sparse(acc_);
  acc_.clear();
  return v;
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return SparseMatrix{rows, cols, std::vector<SparseVec>(cols)};
}

SparseMatrix SparseMatrix::identity(std::size_t n, const Rational& scale) {
  SparseMatrix m = zero(n, n);
  if (scale != 0)
    for (std::size_t j = 0; j < n; ++j) m.columns[j].emplace_back(static_cast<std::uint32_t>(j), scale);
  return m;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns)
    if (!c.empty()) return false;
  return true;
}

SparseVec apply(const Field& f, const SparseMatrix& m, const SparseVec& v) {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [j, x] : v) {
    if (j >= m.cols) throw Error(ErrorCode::DimensionMismatch, kModule, "vector index out of range");
    axpy(f, acc, m.columns[j], x);
  }
  return to_sparse(acc);
}

SparseMatrix compose(const Field& f, const SparseMatrix& left, const SparseMatrix& right) {
  if (left.cols != right.rows) throw Error(ErrorCode::DimensionMismatch, kModule, "incompatible matrix shapes");
  SparseMatrix out = SparseMatrix::zero(left.rows, right.cols);
  for (std::size_t j = 0; j < right.cols; ++j) out.columns[j] = apply(f, left, right.columns[j]);
  return out;
}

SparseMatrix add(const Field& f, const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorCode::DimensionMismatch, kModule, "shape mismatch");
  SparseMatrix out = SparseMatrix::zero(a.rows, a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::map<std::uint32_t, Rational> acc;
    axpy(f, acc, a.columns[j], 1);
    axpy(f, acc, b.columns[j], 1);
    out.columns[j] = to_sparse(acc);
  }
  return out;
}

SparseMatrix scale(const Field& f, const SparseMatrix& a, const Rational& c) {
  SparseMatrix out = SparseMatrix::zero(a.rows, a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::map<std::uint32_t, Rational> acc;
    axpy(f, acc, a.columns[j], c);
    out.columns[j] = to_sparse(acc);
  }
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::map<std::uint32_t, Rational> work;
  for (auto& [i, x] : v) work.emplace(i, field_.normalize(x));
  auto it = work.begin();
  while (it != work.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end() || it->second == 0) {
      ++it;
      continue;
    }
    const std::uint32_t col = it->first;
    const Rational c = -it->second;
    work.erase(it);
    // The row's leading entry is at col; the rest lies strictly beyond it.
    SparseVec tail(row->second.begin() + 1, row->second.end());
    axpy(field_, work, tail, c);
    it = work.upper_bound(col);
  }
  return to_sparse(work);
}

bool Echelon::insert(SparseVec v) {
  SparseVec r = reduce(std::move(v));
  if (r.empty()) return false;
  const Rational inv = field_.inv(r.front().second);
  for (auto& [i, x] : r) x = field_.mul(x, inv);
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

std::size_t rank(const Field& f, const SparseMatrix& m) {
  Echelon e(f);
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> kernel(const Field& f, const SparseMatrix& m) {
  // Column reduction with a record of the combination producing each row.
  std::map<std::uint32_t, TrackedRow> rows;
  std::vector<SparseVec> basis;
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::map<std::uint32_t, Rational> work;
    for (const auto& [i, x] : m.columns[j]) work.emplace(i, f.normalize(x));
    std::map<std::uint32_t, Rational> combo{{static_cast<std::uint32_t>(j), Rational(1)}};
    auto it = work.begin();
    while (it != work.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const std::uint32_t col = it->first;
      const Rational c = -it->second;
      work.erase(it);
      SparseVec tail(row->second.row.begin() + 1, row->second.row.end());
      axpy(f, work, tail, c);
      axpy(f, combo, row->second.combination, c);
      it = work.upper_bound(col);
    }
    if (work.empty()) {
      basis.push_back(to_sparse(combo));
      continue;
    }
    const Rational inv = f.inv(work.begin()->second);
    TrackedRow r{to_sparse(work), to_sparse(combo)};
    for (auto& [i, x] : r.row) x = f.mul(x, inv);
    for (auto& [i, x] : r.combination) x = f.mul(x, inv);
    const auto pivot = r.row.front().first;
    rows.emplace(pivot, std::move(r));
  }
  return basis;
}

std::vector<SparseVec> homology_basis(const Field& f, const SparseMatrix& outgoing, const SparseMatrix& incoming) {
  Echelon boundaries(f);
  for (const auto& c : incoming.columns) boundaries.insert(c);
  std::vector<SparseVec> out;
  for (auto& z : kernel(f, outgoing))
    if (boundaries.insert(z)) out.push_back(std::move(z));
  return out;
}

}  // namespace wittray
