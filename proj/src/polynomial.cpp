#include "wittray/polynomial.hpp"

#include <algorithm>

#include "wittray/error.hpp"

namespace wittray {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::uint32_t var) {
  MultiPoly p;
  p.add_term({{var, 1}}, Rational(1));
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

std::uint32_t MultiPoly::max_variable() const {
  std::uint32_t m = 0;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono) m = std::max(m, v);
  return m;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(multiply(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Elem MultiPoly::evaluate(const CoefficientRing& ring, std::span<const Elem> values) const {
  // Power tables per variable, grown on demand.
  std::vector<std::vector<Elem>> powers(values.size());
  auto power = [&](std::uint32_t var, std::uint32_t e) -> const Elem& {
    auto& table = powers[var];
    if (table.empty()) table.push_back(ring.one());
    while (table.size() <= e) table.push_back(ring.mul(table.back(), values[var]));
    return table[e];
  };
  Elem acc = ring.zero();
  for (const auto& [mono, coeff] : terms_) {
    if (coeff.get_den() != 1) {
      throw Error(ErrorCode::Internal, "witt-ring", "evaluating a non-integral universal polynomial");
    }
    Elem term = ring.from_integer(coeff.get_num());
    for (const auto& [var, e] : mono) {
      if (var >= values.size()) throw Error(ErrorCode::Internal, "witt-ring", "missing variable value");
      if (term.is_zero()) break;
      term = ring.mul(term, power(var, e));
    }
    acc = ring.add(acc, term);
  }
  return acc;
}

}  // namespace wittray
