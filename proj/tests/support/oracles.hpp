#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library except to read terms off a BivariatePolynomial.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "binsum/bipoly.hpp"

namespace oracle {

inline std::uint64_t pw(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  x %= p;
  for (std::uint64_t i = 0; i < e; ++i) r = r * x % p;
  return r;
}

inline std::vector<std::uint64_t> powers(std::uint64_t p, std::uint64_t e) {
  std::vector<std::uint64_t> t(p);
  for (std::uint64_t x = 0; x < p; ++x) t[x] = pw(x, e, p);
  return t;
}

/// #{(u, v, x, y) : u^k + v^k = x^k + y^k, u^n + v^n = x^n + y^n}, all p^4 tuples.
inline std::uint64_t brute_T(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  const auto pk = powers(p, k), pn = powers(p, n);
  std::uint64_t count = 0;
  for (std::uint64_t u = 0; u < p; ++u)
    for (std::uint64_t v = 0; v < p; ++v)
      for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
          if ((pk[u] + pk[v]) % p == (pk[x] + pk[y]) % p && (pn[u] + pn[v]) % p == (pn[x] + pn[y]) % p) ++count;
  return count;
}

/// Zeros of (x^n + y^n - 1)^{k/r} - (x^k + y^k - 1)^{n/r} in F_p^2.
inline std::uint64_t brute_N(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  const std::uint64_t r = std::gcd(k, n);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::uint64_t A = (pw(x, n, p) + pw(y, n, p) + p - 1) % p;
      const std::uint64_t B = (pw(x, k, p) + pw(y, k, p) + p - 1) % p;
      if (pw(A, k / r, p) == pw(B, n / r, p)) ++count;
    }
  return count;
}

/// #{(x, y) : (x + y)^n = x^n + y^n}.
inline std::uint64_t brute_A0(std::uint64_t p, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if (pw(x + y, n, p) == (pw(x, n, p) + pw(y, n, p)) % p) ++count;
  return count;
}

inline std::complex<long double> direct_sum(std::uint64_t p, std::uint64_t k, std::uint64_t n, std::uint64_t a,
                                            std::uint64_t b) {
  const long double two_pi = 6.283185307179586476925286766559L;
  std::complex<long double> s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t t = (a * pw(x, k, p) + b * pw(x, n, p)) % p;
    s += std::polar(1.0L, two_pi * static_cast<long double>(t) / static_cast<long double>(p));
  }
  return s;
}

/// max |S(a, b)| over all a, b != 0.
inline long double brute_max(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  long double best = 0;
  for (std::uint64_t a = 1; a < p; ++a)
    for (std::uint64_t b = 1; b < p; ++b) best = std::max(best, std::abs(direct_sum(p, k, n, a, b)));
  return best;
}

/// F(x, y) from the term list.
inline std::uint64_t eval_terms(const binsum::BivariatePolynomial& f, std::uint64_t x, std::uint64_t y) {
  const std::uint64_t p = f.modulus();
  std::uint64_t s = 0;
  for (const auto& t : f.terms()) s = (s + t.c * pw(x, t.i, p) % p * pw(y, t.j, p)) % p;
  return s;
}

/// Lines aX + bY + c (a = 1, or a = 0 and b = 1) on which f vanishes. For
/// deg f < p these are exactly the linear factors of f.
inline std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> linear_factors(
    const binsum::BivariatePolynomial& f) {
  const std::uint64_t p = f.modulus();
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t b = 0; b < p; ++b)
    for (std::uint64_t c = 0; c < p; ++c) {
      // X = -bY - c
      bool all = true;
      for (std::uint64_t t = 0; t < p && all; ++t) all = eval_terms(f, (2 * p * p - b * t - c) % p, t) == 0;
      if (all) out.insert({1, b, c});
    }
  for (std::uint64_t c = 0; c < p; ++c) {
    bool all = true;
    for (std::uint64_t t = 0; t < p && all; ++t) all = eval_terms(f, t, (p - c) % p) == 0;
    if (all) out.insert({0, 1, c});
  }
  return out;
}

// Dense univariate helpers over F_p, lowest degree first.
using UPoly = std::vector<std::int64_t>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b, std::int64_t p) {
  const std::int64_t inv = static_cast<std::int64_t>(pw(static_cast<std::uint64_t>(b.back()), p - 2, p));
  trim(a);
  while (a.size() >= b.size()) {
    const std::int64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline UPoly ugcd(UPoly a, UPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline UPoly random_upoly(int deg, std::int64_t p, std::mt19937_64& rng) {
  UPoly a(static_cast<std::size_t>(deg) + 1);
  for (auto& c : a) c = static_cast<std::int64_t>(rng() % p);
  if (a.back() == 0) a.back() = 1;
  return a;
}

/// sum c_i X^i Y^j with X replaced by X + sY.
inline binsum::BivariatePolynomial sheared(std::uint32_t p, const std::vector<binsum::Term>& terms, std::uint32_t s) {
  using binsum::BivariatePolynomial;
  BivariatePolynomial acc(p);
  const BivariatePolynomial lin = BivariatePolynomial::from_terms(p, {{1, 0, 1}, {0, 1, s}});
  for (const auto& t : terms)
    acc = acc + pow(lin, t.i) * BivariatePolynomial::monomial(p, t.c, 0, t.j);
  return acc;
}

/// An irreducible of total degree <= max_deg by construction:
///  - a(X) Y + b(X) with gcd(a, b) = 1 (primitive of degree 1 in Y), then a
///    random shear X -> X + sY and optionally X <-> Y;
///  - or a univariate factor of degree <= 3 without roots.
inline binsum::BivariatePolynomial random_irreducible(std::uint32_t p, int max_deg, std::mt19937_64& rng) {
  using binsum::BivariatePolynomial;
  const std::int64_t P = p;
  if (rng() % 5 == 0) {
    for (;;) {
      const int d = 1 + static_cast<int>(rng() % std::min(3, max_deg));
      UPoly u = random_upoly(d, P, rng);
      u.back() = 1;
      bool root = false;
      for (std::uint64_t x = 0; x < p && !root; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = u.size(); i-- > 0;) v = (v * x + static_cast<std::uint64_t>(u[i])) % p;
        root = v == 0;
      }
      if (d > 1 && root) continue;
      std::vector<binsum::Term> terms;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i]) terms.push_back({static_cast<std::uint32_t>(i), 0, static_cast<std::uint32_t>(u[i])});
      auto f = BivariatePolynomial::from_terms(p, terms);
      return rng() % 2 ? swap_xy(f) : f;
    }
  }
  for (;;) {
    const int da = static_cast<int>(rng() % static_cast<unsigned>(max_deg));
    const int db = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    UPoly a = random_upoly(da, P, rng), b = random_upoly(db, P, rng);
    trim(b);
    if (b.empty()) continue;
    const UPoly g = ugcd(a, b, P);
    if (g.size() != 1) continue;
    std::vector<binsum::Term> terms;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) terms.push_back({static_cast<std::uint32_t>(i), 1, static_cast<std::uint32_t>(a[i])});
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) terms.push_back({static_cast<std::uint32_t>(i), 0, static_cast<std::uint32_t>(b[i])});
    auto f = sheared(p, terms, static_cast<std::uint32_t>(rng() % p));
    if (f.total_degree() > max_deg || f.total_degree() < 1) continue;
    return rng() % 2 ? swap_xy(f) : f;
  }
}

}  // namespace oracle
