#include "wittray/ring.hpp"

#include <algorithm>
#include <sstream>

#include "wittray/error.hpp"

namespace wittray {

namespace {

const char* kModule = "ring";

bool is_probable_prime(std::uint64_t p) {
  if (p < 2) return false;
  Integer z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotMember: return "not_member";
    case ErrorCode::ZeroElement: return "zero_element";
    case ErrorCode::Undecidable: return "undecidable_under_bounds";
    case ErrorCode::InvalidMonoid: return "invalid_monoid";
    case ErrorCode::InvalidWeight: return "invalid_weight";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NonExactDivision: return "non_exact_division";
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::BaseMismatch: return "base_mismatch";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Internal: return "internal_invariant_violation";
  }
  return "unknown";
}

CoefficientRing CoefficientRing::integers() {
  CoefficientRing r;
  r.kind_ = r.scalar_kind_ = RingKind::Integers;
  return r;
}

CoefficientRing CoefficientRing::rationals() {
  CoefficientRing r;
  r.kind_ = r.scalar_kind_ = RingKind::Rationals;
  return r;
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (!is_probable_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "Z/p requires a prime p, got " + std::to_string(p));
  }
  CoefficientRing r;
  r.kind_ = r.scalar_kind_ = RingKind::PrimeField;
  r.prime_ = p;
  return r;
}

CoefficientRing CoefficientRing::polynomial(const CoefficientRing& base, std::vector<Rational> modulus,
                                            std::string variable) {
  if (base.kind_ == RingKind::Polynomial) {
    throw Error(ErrorCode::Unsupported, kModule, "polynomial rings over polynomial rings are not supported");
  }
  CoefficientRing r;
  r.kind_ = RingKind::Polynomial;
  r.scalar_kind_ = base.kind_;
  r.prime_ = base.prime_;
  r.variable_ = std::move(variable);
  if (!modulus.empty()) {
    for (auto& c : modulus) c = base.normalize_scalar(c);
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1) {
      throw Error(ErrorCode::InvalidArgument, kModule, "polynomial modulus must be monic of degree >= 1");
    }
  }
  r.modulus_ = std::move(modulus);
  return r;
}

bool CoefficientRing::is_field() const noexcept {
  if (kind_ == RingKind::Polynomial) return false;
  return kind_ != RingKind::Integers;
}

CoefficientRing CoefficientRing::scalar_ring() const {
  switch (scalar_kind_) {
    case RingKind::Integers: return integers();
    case RingKind::Rationals: return rationals();
    case RingKind::PrimeField: return prime_field(prime_);
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorCode::Internal, kModule, "bad scalar kind");
}

Rational CoefficientRing::normalize_scalar(const Rational& c) const {
  switch (scalar_kind_) {
    case RingKind::Integers:
      if (c.get_den() != 1) {
        throw Error(ErrorCode::InvalidArgument, kModule, "non-integral value " + c.get_str() + " in Z");
      }
      return c;
    case RingKind::Rationals: {
      Rational r = c;
      r.canonicalize();
      return r;
    }
    case RingKind::PrimeField: {
      const Integer p(std::to_string(prime_));
      Integer den = mod_floor(c.get_den(), p);
      if (den == 0) {
        throw Error(ErrorCode::InvalidArgument, kModule,
                    "denominator of " + c.get_str() + " is not invertible mod " + p.get_str());
      }
      Integer inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      return Rational(mod_floor(Integer(c.get_num() * inv), p));
    }
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorCode::Internal, kModule, "bad scalar kind");
}

Elem CoefficientRing::normalize(std::vector<Rational> c) const {
  for (auto& x : c) x = normalize_scalar(x);
  if (kind_ != RingKind::Polynomial && c.size() > 1) {
    throw Error(ErrorCode::Internal, kModule, "scalar element with several coefficients");
  }
  if (!modulus_.empty()) {
    // Remainder modulo the monic modulus.
    const std::size_t m = modulus_.size() - 1;
    for (std::size_t i = c.size(); i-- > m;) {
      if (c[i] == 0) continue;
      const Rational lead = c[i];
      for (std::size_t j = 0; j <= m; ++j) {
        c[i - m + j] = normalize_scalar(c[i - m + j] - lead * modulus_[j]);
      }
    }
    if (c.size() > m) c.resize(m);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Elem(std::move(c));
}

Elem CoefficientRing::one() const { return from_integer(1); }

Elem CoefficientRing::from_integer(const Integer& n) const { return normalize({Rational(n)}); }

Elem CoefficientRing::from_rational(const Rational& q) const { return normalize({q}); }

Elem CoefficientRing::variable_element() const {
  if (kind_ != RingKind::Polynomial) {
    throw Error(ErrorCode::Unsupported, kModule, "ring has no polynomial variable");
  }
  return normalize({Rational(0), Rational(1)});
}

Elem CoefficientRing::from_coefficients(std::vector<Rational> coeffs) const {
  if (kind_ != RingKind::Polynomial && coeffs.size() > 1) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() > 1) {
      throw Error(ErrorCode::InvalidArgument, kModule, "scalar ring value given with several coefficients");
    }
  }
  return normalize(std::move(coeffs));
}

Elem CoefficientRing::add(const Elem& a, const Elem& b) const {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return normalize(std::move(c));
}

Elem CoefficientRing::neg(const Elem& a) const {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return normalize(std::move(c));
}

Elem CoefficientRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem CoefficientRing::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return normalize(std::move(c));
}

Elem CoefficientRing::pow(const Elem& a, unsigned long e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Elem CoefficientRing::scale(const Elem& a, const Integer& n) const { return mul(a, from_integer(n)); }

std::optional<Elem> CoefficientRing::divide_exact(const Elem& a, const Integer& n) const {
  if (n == 0) return std::nullopt;
  std::vector<Rational> c = a.coeffs_;
  switch (scalar_kind_) {
    case RingKind::Integers:
      for (auto& x : c) {
        if (!mpz_divisible_p(x.get_num_mpz_t(), n.get_mpz_t())) return std::nullopt;
        x /= Rational(n);
      }
      break;
    case RingKind::Rationals:
      for (auto& x : c) x /= Rational(n);
      break;
    case RingKind::PrimeField: {
      const Integer p(std::to_string(prime_));
      if (mod_floor(n, p) == 0) return std::nullopt;  // not unique even when a == 0
      for (auto& x : c) x /= Rational(n);
      break;
    }
    case RingKind::Polynomial:
      throw Error(ErrorCode::Internal, kModule, "bad scalar kind");
  }
  return normalize(std::move(c));
}

Elem CoefficientRing::inverse(const Elem& a) const {
  if (!is_field()) {
    throw Error(ErrorCode::Unsupported, kModule, "inverse requested in non-field " + describe());
  }
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, kModule, "inverse of zero");
  return normalize({Rational(1) / a.coeffs_[0]});
}

Elem CoefficientRing::convert(const CoefficientRing& source, const Elem& a) const {
  if (source == *this) return a;
  const bool source_rational_coeffs = source.scalar_kind_ == RingKind::Rationals;
  if (source_rational_coeffs && scalar_kind_ == RingKind::Integers) {
    throw Error(ErrorCode::RingMismatch, kModule, "no ring map " + source.describe() + " -> " + describe());
  }
  if (source.scalar_kind_ == RingKind::PrimeField &&
      !(scalar_kind_ == RingKind::PrimeField && prime_ == source.prime_)) {
    throw Error(ErrorCode::RingMismatch, kModule, "no ring map " + source.describe() + " -> " + describe());
  }
  if (source.kind_ == RingKind::Polynomial) {
    if (kind_ != RingKind::Polynomial) {
      throw Error(ErrorCode::RingMismatch, kModule, "no ring map " + source.describe() + " -> " + describe());
    }
    // Quotient maps: the source modulus must map to zero.
    if (!source.modulus_.empty() && !normalize(source.modulus_).is_zero()) {
      throw Error(ErrorCode::RingMismatch, kModule,
                  "source modulus does not vanish in " + describe());
    }
  }
  return normalize(a.coeffs_);
}

std::string CoefficientRing::to_string(const Elem& a) const {
  if (a.is_zero()) return "0";
  if (kind_ != RingKind::Polynomial) return a.coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    Rational c = a.coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    if (negative) c = -c;
    if (i == 0 || c != 1) out << c.get_str();
    if (i > 0) {
      if (c != 1) out << "*";
      out << variable_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

Elem CoefficientRing::parse_scalar(const std::string& text) const {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::Parse, kModule, "cannot parse ring value '" + text + "'");
  }
  q.canonicalize();
  if (q.get_den() != 1 && scalar_kind_ == RingKind::Integers) {
    throw Error(ErrorCode::Parse, kModule, "value '" + text + "' is not an integer");
  }
  return from_rational(q);
}

std::string CoefficientRing::describe() const {
  auto scalar = [&]() -> std::string {
    switch (scalar_kind_) {
      case RingKind::Integers: return "Z";
      case RingKind::Rationals: return "Q";
      case RingKind::PrimeField: return "Z/" + std::to_string(prime_);
      case RingKind::Polynomial: break;
    }
    return "?";
  };
  if (kind_ != RingKind::Polynomial) return scalar();
  std::string s = scalar() + "[" + variable_ + "]";
  if (!modulus_.empty()) s += "/(" + to_string(Elem(modulus_)) + ")";
  return s;
}

}  // namespace wittray
