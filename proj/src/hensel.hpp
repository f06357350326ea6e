#pragma once

// Bivariate factor search by specialization at X = alpha, Hensel lifting in
// K[[X - alpha]][Y] and recombination of lifted factors. K is F_p or an
// extension of it; only factors with coefficients in F_p are accepted.

#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "binsum/bipoly.hpp"
#include "binsum/extfield.hpp"
#include "binsum/upoly.hpp"

namespace binsum::detail {

inline std::optional<std::uint32_t> to_base(const PrimeField&, std::uint32_t a) { return a; }
inline std::optional<std::uint32_t> to_base(const ExtensionField& k, const ExtensionField::Elem& a) {
  return k.to_base(a);
}
inline std::uint32_t embed(const PrimeField&, std::uint32_t c) { return c; }
inline ExtensionField::Elem embed(const ExtensionField& k, std::uint32_t c) { return k.embed(c); }

template <FiniteField F>
using SeriesRows = std::vector<typename PolyRing<F>::Poly>;

/// Rows of g(X + alpha, Y) over K.
template <FiniteField F>
SeriesRows<F> shifted_rows(const PolyRing<F>& ring, const RecursivePoly& rows,
                           const typename F::Elem& alpha) {
  SeriesRows<F> out(rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    typename PolyRing<F>::Poly c(rows[t].size());
    for (std::size_t i = 0; i < rows[t].size(); ++i) c[i] = embed(ring.field(), rows[t][i]);
    ring.trim(c);
    out[t] = ring.shift(c, alpha);
  }
  return out;
}

template <FiniteField F>
typename PolyRing<F>::Poly series_inverse(const PolyRing<F>& ring, const typename PolyRing<F>::Poly& a,
                                          std::size_t prec) {
  const auto& k = ring.field();
  assert(!a.empty() && !k.is_zero(a[0]));
  typename PolyRing<F>::Poly inv(prec, k.zero());
  const auto a0inv = k.inv(a[0]);
  inv[0] = a0inv;
  for (std::size_t n = 1; n < prec; ++n) {
    auto acc = k.zero();
    for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc = k.add(acc, k.mul(a[i], inv[n - i]));
    inv[n] = k.neg(k.mul(acc, a0inv));
  }
  ring.trim(inv);
  return inv;
}

template <FiniteField F>
SeriesRows<F> mul_rows_trunc(const PolyRing<F>& ring, const SeriesRows<F>& a, const SeriesRows<F>& b,
                             std::size_t prec) {
  if (a.empty() || b.empty()) return {};
  SeriesRows<F> out(a.size() + b.size() - 1);
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].empty()) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (b[t].empty()) continue;
      out[s + t] = ring.add(out[s + t], ring.mul_trunc(a[s], b[t], prec));
    }
  }
  return out;
}

/// Lifts f = lc * prod(factors) mod X to a factorization of lc^{-1} f into
/// monic (in Y) factors modulo X^prec. Factors must be monic and coprime.
template <FiniteField F>
std::vector<SeriesRows<F>> hensel_lift(const PolyRing<F>& ring, const SeriesRows<F>& f,
                                       const std::vector<typename PolyRing<F>::Poly>& factors,
                                       std::size_t prec) {
  using Poly = typename PolyRing<F>::Poly;
  const auto& k = ring.field();
  const std::size_t dy = f.size() - 1;
  const std::size_t r = factors.size();

  const Poly lc_inv = series_inverse(ring, f[dy], prec);
  SeriesRows<F> monic_f(f.size());
  for (std::size_t t = 0; t <= dy; ++t) monic_f[t] = ring.mul_trunc(f[t], lc_inv, prec);

  std::vector<Poly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    Poly cof = ring.one();
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) cof = ring.mul(cof, factors[l]);
    sigma[i] = ring.inv_mod(cof, factors[i]);
  }

  std::vector<SeriesRows<F>> lifted(r);
  for (std::size_t i = 0; i < r; ++i) {
    lifted[i].resize(factors[i].size());
    for (std::size_t t = 0; t < factors[i].size(); ++t) lifted[i][t] = ring.constant(factors[i][t]);
  }

  for (std::size_t j = 1; j < prec; ++j) {
    SeriesRows<F> prod = lifted[0];
    for (std::size_t i = 1; i < r; ++i) prod = mul_rows_trunc(ring, prod, lifted[i], j + 1);
    Poly err(dy, k.zero());
    for (std::size_t t = 0; t < dy; ++t) {
      const auto target = ring.coeff(monic_f[t], j);
      const auto have = t < prod.size() ? ring.coeff(prod[t], j) : k.zero();
      err[t] = k.sub(target, have);
    }
    ring.trim(err);
    if (err.empty()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      const Poly delta = ring.rem(ring.mul(err, sigma[i]), factors[i]);
      for (std::size_t t = 0; t < delta.size(); ++t) {
        if (k.is_zero(delta[t])) continue;
        auto& row = lifted[i][t];
        if (row.size() <= j) row.resize(j + 1, k.zero());
        row[j] = k.add(row[j], delta[t]);
      }
    }
  }
  return lifted;
}

/// Factors a squarefree g, primitive in both variables, whose specialization
/// g(alpha, Y) keeps its Y-degree and is squarefree over K.
template <FiniteField F>
std::vector<BivariatePolynomial> lift_and_recombine(const F& field, const BivariatePolynomial& g,
                                                    const typename F::Elem& alpha,
                                                    std::mt19937_64& rng) {
  using Poly = typename PolyRing<F>::Poly;
  const PolyRing<F> ring(field);
  const PolyRing<PrimeField> base_ring{PrimeField(g.modulus())};
  const std::uint32_t p = g.modulus();

  const SeriesRows<F> shifted = shifted_rows(ring, g.to_recursive(), alpha);
  const std::size_t dy = shifted.size() - 1;
  const std::size_t prec = static_cast<std::size_t>(g.degree_x()) + 1;

  Poly image(dy + 1, field.zero());
  for (std::size_t t = 0; t <= dy; ++t) image[t] = ring.coeff(shifted[t], 0);
  ring.trim(image);
  assert(PolyRing<F>::deg(image) == static_cast<int>(dy));
  const auto ufac = ring.factor(image, rng);
  if (ufac.factors.size() <= 1) return {g};

  std::vector<Poly> ubar;
  for (const auto& [u, e] : ufac.factors) {
    assert(e == 1);
    ubar.push_back(u);
  }
  const auto lifted = hensel_lift(ring, shifted, ubar, prec);

  const auto neg_alpha = field.neg(alpha);
  auto to_prime_rows = [&](const SeriesRows<F>& rows) -> std::optional<RecursivePoly> {
    RecursivePoly out(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const Poly back = ring.shift(rows[t], neg_alpha);
      out[t].resize(back.size());
      for (std::size_t i = 0; i < back.size(); ++i) {
        const auto v = to_base(field, back[i]);
        if (!v) return std::nullopt;
        out[t][i] = *v;
      }
    }
    return out;
  };

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  BivariatePolynomial cur = g;
  std::vector<BivariatePolynomial> found;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    const RecursivePoly cur_rows = cur.to_recursive();
    const SeriesRows<F> lc_rows = shifted_rows(ring, RecursivePoly{cur_rows.back()}, alpha);
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      SeriesRows<F> cand = lc_rows;
      for (std::size_t idx : pick) cand = mul_rows_trunc(ring, cand, lifted[remaining[idx]], prec);
      if (auto rows = to_prime_rows(cand)) {
        PolyRing<PrimeField>::Poly content;
        for (auto& row : *rows) {
          base_ring.trim(row);
          if (!row.empty()) content = base_ring.gcd(content, row);
        }
        if (PolyRing<PrimeField>::deg(content) > 0)
          for (auto& row : *rows) row = base_ring.quo(row, content);
        trim_rows(*rows);
        const BivariatePolynomial candidate = BivariatePolynomial::from_recursive(p, *rows);
        if (candidate.degree_y() > 0) {
          if (auto q = divide_exact(cur, candidate)) {
            found.push_back(candidate);
            cur = std::move(*q);
            std::vector<std::size_t> rest;
            for (std::size_t i = 0, pi = 0; i < remaining.size(); ++i) {
              if (pi < pick.size() && pick[pi] == i) {
                ++pi;
                continue;
              }
              rest.push_back(remaining[i]);
            }
            remaining = std::move(rest);
            hit = true;
            break;
          }
        }
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (!cur.is_constant()) found.push_back(cur);
  return found;
}

}  // namespace binsum::detail
