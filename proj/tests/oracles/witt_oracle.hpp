#pragma once

// Reference Witt arithmetic for torsion-free coefficients: map both vectors
// to ghost components over Q, combine there and invert the ghost map by
// brute force over the element list. Shares nothing with the library's
// per-ray machinery except the element list itself.

#include <gmpxx.h>

#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t gcd_of(const Vec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// e with e*g == eta, if any.
inline std::optional<std::int64_t> multiple_of(const Vec& g, const Vec& eta) {
  std::optional<std::int64_t> e;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) {
      if (eta[i] != 0) return std::nullopt;
      continue;
    }
    if (eta[i] % g[i] != 0) return std::nullopt;
    const auto q = eta[i] / g[i];
    if (q <= 0 || (e && *e != q)) return std::nullopt;
    e = q;
  }
  return e;
}

inline std::vector<mpq_class> ghost(const std::vector<Vec>& elems, const std::vector<mpq_class>& a) {
  std::vector<mpq_class> g(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto e = multiple_of(elems[i], elems[j]);
      if (!e) continue;
      mpq_class p = 1;
      for (std::int64_t k = 0; k < *e; ++k) p *= a[i];
      g[j] += gcd_of(elems[i]) * p;
    }
  }
  return g;
}

// Requires elems ordered so that divisors precede their multiples.
inline std::vector<mpq_class> from_ghost(const std::vector<Vec>& elems, const std::vector<mpq_class>& g) {
  std::vector<mpq_class> a(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    mpq_class rest = g[j];
    for (std::size_t i = 0; i < j; ++i) {
      auto e = multiple_of(elems[i], elems[j]);
      if (!e) continue;
      mpq_class p = 1;
      for (std::int64_t k = 0; k < *e; ++k) p *= a[i];
      rest -= gcd_of(elems[i]) * p;
    }
    a[j] = rest / gcd_of(elems[j]);
  }
  return a;
}

inline std::vector<mpq_class> add(const std::vector<Vec>& elems, const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) {
  auto ga = ghost(elems, a), gb = ghost(elems, b);
  for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += gb[i];
  return from_ghost(elems, ga);
}

inline std::vector<mpq_class> mul(const std::vector<Vec>& elems, const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) {
  auto ga = ghost(elems, a), gb = ghost(elems, b);
  for (std::size_t i = 0; i < ga.size(); ++i) ga[i] *= gb[i];
  return from_ghost(elems, ga);
}

}  // namespace oracle
