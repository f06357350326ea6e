#pragma once

// Dense univariate polynomials over a finite field, including complete
// factorization (squarefree split, distinct-degree, equal-degree).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "binsum/field.hpp"

namespace binsum {

template <LazyField F>
class PolyRing {
 public:
  using Elem = typename F::Elem;
  /// Coefficients from low to high degree; the zero polynomial is empty.
  using Poly = std::vector<Elem>;

  struct Factorization {
    Elem unit{};
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
  };

  /// Rows X^{q*i} mod f for i < deg f; applying it computes h^q mod f.
  struct FrobeniusMap {
    Poly modulus;
    std::vector<Elem> matrix;  // deg f rows of deg f entries
  };

  explicit PolyRing(F field) : f_(std::move(field)) {}

  const F& field() const noexcept { return f_; }

  static int deg(const Poly& a) noexcept { return static_cast<int>(a.size()) - 1; }

  void trim(Poly& a) const {
    while (!a.empty() && f_.is_zero(a.back())) a.pop_back();
  }
  Poly constant(const Elem& c) const { return f_.is_zero(c) ? Poly{} : Poly{c}; }
  Poly one() const { return Poly{f_.one()}; }
  Poly x() const { return Poly{f_.zero(), f_.one()}; }
  Poly monomial(const Elem& c, std::size_t e) const {
    if (f_.is_zero(c)) return {};
    Poly r(e + 1, f_.zero());
    r[e] = c;
    return r;
  }
  Elem lead(const Poly& a) const { return a.empty() ? f_.zero() : a.back(); }
  Elem coeff(const Poly& a, std::size_t i) const { return i < a.size() ? a[i] : f_.zero(); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.add(r[i], b[i]);
    trim(r);
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.sub(r[i], b[i]);
    trim(r);
    return r;
  }
  Poly neg(const Poly& a) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f_.neg(a[i]);
    return r;
  }
  Poly scale(const Poly& a, const Elem& c) const {
    if (f_.is_zero(c)) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f_.mul(a[i], c);
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    return mul_trunc(a, b, a.size() + b.size() - 1);
  }

  /// Product truncated to terms of degree < len.
  Poly mul_trunc(const Poly& a, const Poly& b, std::size_t len) const {
    if (a.empty() || b.empty() || len == 0) return {};
    assert(std::min(a.size(), b.size()) < (std::size_t{1} << 19));
    const std::size_t w = f_.wide_size();
    const std::size_t n = std::min(len, a.size() + b.size() - 1);
    std::vector<std::uint64_t> acc(n * w, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
      if (f_.is_zero(a[i])) continue;
      const std::size_t jmax = std::min(b.size(), n - i);
      std::uint64_t* out = acc.data() + i * w;
      for (std::size_t j = 0; j < jmax; ++j) f_.mul_acc(out + j * w, a[i], b[j]);
    }
    Poly r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = f_.reduce_wide(acc.data() + k * w);
    trim(r);
    return r;
  }

  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const {
    assert(!b.empty());
    if (a.size() < b.size()) return {Poly{}, a};
    const std::size_t w = f_.wide_size();
    const std::size_t db = b.size() - 1;
    std::vector<std::uint64_t> r(a.size() * w, 0);
    const Elem unit = f_.one();
    for (std::size_t i = 0; i < a.size(); ++i) f_.mul_acc(r.data() + i * w, a[i], unit);
    Poly negb(db);
    for (std::size_t j = 0; j < db; ++j) negb[j] = f_.neg(b[j]);
    Poly q(a.size() - db, f_.zero());
    const Elem inv_lead = f_.inv(b.back());
    for (std::size_t i = a.size(); i-- > db;) {
      const Elem ri = f_.reduce_wide(r.data() + i * w);
      if (f_.is_zero(ri)) continue;
      const Elem c = f_.mul(ri, inv_lead);
      q[i - db] = c;
      std::uint64_t* out = r.data() + (i - db) * w;
      for (std::size_t j = 0; j < db; ++j) f_.mul_acc(out + j * w, c, negb[j]);
    }
    Poly rem(db);
    for (std::size_t j = 0; j < db; ++j) rem[j] = f_.reduce_wide(r.data() + j * w);
    trim(q);
    trim(rem);
    return {std::move(q), std::move(rem)};
  }
  Poly rem(const Poly& a, const Poly& b) const {
    if (a.size() < b.size()) return a;
    return divrem(a, b).second;
  }
  Poly quo(const Poly& a, const Poly& b) const { return divrem(a, b).first; }

  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    return scale(a, f_.inv(a.back()));
  }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// Returns (g, s, t) with s*a + t*b = g, g monic.
  std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b, s0 = one(), s1{}, t0{}, t1 = one();
    while (!r1.empty()) {
      auto [q, r] = divrem(r0, r1);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    const Elem c = f_.inv(r0.back());
    return {scale(r0, c), scale(s0, c), scale(t0, c)};
  }

  /// a^{-1} mod m; requires gcd(a, m) = 1.
  Poly inv_mod(const Poly& a, const Poly& m) const {
    auto [g, s, t] = ext_gcd(rem(a, m), m);
    if (deg(g) != 0) throw Error("polynomial is not invertible modulo the given modulus");
    return rem(s, m);
  }

  Poly derivative(const Poly& a) const {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f_.mul(a[i], f_.element(i % f_.characteristic()));
    trim(r);
    return r;
  }

  Elem eval(const Poly& a, const Elem& x) const {
    Elem acc = f_.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), a[i]);
    return acc;
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }

  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly result = rem(one(), m);
    base = rem(base, m);
    while (e != 0) {
      if (e & 1) result = mulmod(result, base, m);
      e >>= 1;
      if (e != 0) base = mulmod(base, base, m);
    }
    return result;
  }

  /// Taylor shift a(X + c).
  Poly shift(const Poly& a, const Elem& c) const {
    Poly r = a;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] = f_.add(r[j - 1], f_.mul(c, r[j]));
    trim(r);
    return r;
  }

  bool is_squarefree(const Poly& a) const {
    if (deg(a) <= 0) return true;
    Poly d = derivative(a);
    if (d.empty()) return false;
    return deg(gcd(a, d)) == 0;
  }

  /// Squarefree decomposition of a monic polynomial in characteristic p:
  /// pairwise coprime monic parts with distinct multiplicities.
  std::vector<std::pair<Poly, int>> squarefree(const Poly& a) const {
    std::vector<std::pair<Poly, int>> out;
    if (deg(a) <= 0) return out;
    Poly d = derivative(a);
    Poly u = d.empty() ? monic(a) : gcd(a, d);
    Poly v = quo(monic(a), u);
    for (int i = 1; deg(v) > 0; ++i) {
      Poly w = gcd(u, v);
      Poly part = quo(v, w);
      if (deg(part) > 0) out.emplace_back(monic(part), i);
      u = quo(u, w);
      v = std::move(w);
    }
    if (deg(u) > 0) {
      const std::uint32_t p = f_.characteristic();
      Poly root((u.size() - 1) / p + 1, f_.zero());
      for (std::size_t i = 0; i < u.size(); i += p) root[i / p] = f_.pth_root(u[i]);
      trim(root);
      for (auto& [part, e] : squarefree(monic(root))) out.emplace_back(std::move(part), e * static_cast<int>(p));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
    return out;
  }

  FrobeniusMap frobenius_map(const Poly& modulus) const {
    FrobeniusMap fm;
    fm.modulus = monic(modulus);
    const std::size_t d = static_cast<std::size_t>(deg(fm.modulus));
    assert(d >= 1);
    fm.matrix.assign(d * d, f_.zero());
    const std::uint64_t q = f_.order();
    Poly cur = rem(one(), fm.modulus);
    cur.resize(d, f_.zero());
    auto store = [&](std::size_t row, const Poly& v) {
      for (std::size_t j = 0; j < d; ++j) fm.matrix[row * d + j] = j < v.size() ? v[j] : f_.zero();
    };
    store(0, cur);
    if (q <= 4 * d) {
      // Multiply by X^q via q lazy shift-and-reduce steps.
      const std::size_t w = f_.wide_size();
      const Elem unit = f_.one();
      Poly negf(d);
      for (std::size_t j = 0; j < d; ++j) negf[j] = f_.neg(fm.modulus[j]);
      std::vector<std::uint64_t> work((d + q) * w);
      for (std::size_t row = 1; row < d; ++row) {
        std::fill(work.begin(), work.end(), 0);
        for (std::size_t j = 0; j < d; ++j) f_.mul_acc(work.data() + (j + q) * w, cur[j], unit);
        for (std::size_t t = d + q; t-- > d;) {
          const Elem c = f_.reduce_wide(work.data() + t * w);
          if (f_.is_zero(c)) continue;
          std::uint64_t* out = work.data() + (t - d) * w;
          for (std::size_t j = 0; j < d; ++j) f_.mul_acc(out + j * w, c, negf[j]);
        }
        for (std::size_t j = 0; j < d; ++j) cur[j] = f_.reduce_wide(work.data() + j * w);
        store(row, cur);
      }
      return fm;
    }
    const Poly xq = powmod(x(), q, fm.modulus);
    trim(cur);
    for (std::size_t row = 1; row < d; ++row) {
      cur = mulmod(cur, xq, fm.modulus);
      store(row, cur);
    }
    return fm;
  }

  /// h^q mod fm.modulus for h of degree < deg(modulus).
  Poly apply(const FrobeniusMap& fm, const Poly& h) const {
    const std::size_t d = fm.modulus.size() - 1;
    assert(h.size() <= d);
    const std::size_t w = f_.wide_size();
    std::vector<std::uint64_t> acc(d * w, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (f_.is_zero(h[i])) continue;
      const Elem* row = fm.matrix.data() + i * d;
      for (std::size_t j = 0; j < d; ++j) f_.mul_acc(acc.data() + j * w, h[i], row[j]);
    }
    Poly r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = f_.reduce_wide(acc.data() + j * w);
    trim(r);
    return r;
  }

  /// Distinct-degree factorization of a monic squarefree polynomial:
  /// (product of all irreducible factors of degree i, i).
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& a) const {
    auto [out, rest] = low_degree_split(a, deg(a));
    if (deg(rest) > 0) out.emplace_back(rest, deg(rest));
    return out;
  }

  /// Distinct-degree groups of degree <= max_degree, and the monic product
  /// of the remaining factors, whose degrees all exceed max_degree.
  std::pair<std::vector<std::pair<Poly, int>>, Poly> low_degree_split(const Poly& a, int max_degree) const {
    std::vector<std::pair<Poly, int>> out;
    Poly cur = monic(a);
    if (deg(cur) <= 0) return {out, cur};
    FrobeniusMap fm = frobenius_map(cur);
    Poly h = rem(x(), cur);
    const Poly xx = x();
    int i = 1;
    for (; 2 * i <= deg(cur) && i <= max_degree; ++i) {
      h = apply(fm, h);
      Poly g = gcd(cur, sub(rem(h, cur), xx));
      if (deg(g) > 0) {
        out.emplace_back(g, i);
        cur = quo(cur, g);
        if (deg(cur) <= 0) break;
        h = rem(h, cur);
        if (5 * deg(cur) < 3 * deg(fm.modulus) && 2 * (i + 1) <= deg(cur)) fm = frobenius_map(cur);
      }
    }
    // every factor of degree < i is gone, so cur is irreducible when deg < 2i
    if (deg(cur) > 0 && deg(cur) < 2 * i && deg(cur) <= max_degree) {
      out.emplace_back(cur, deg(cur));
      cur = one();
    }
    return {out, cur};
  }

  /// Splits a monic squarefree product of irreducibles of degree d.
  std::vector<Poly> equal_degree(const Poly& a, int d, std::mt19937_64& rng) const {
    Poly g0 = monic(a);
    const int n = deg(g0);
    if (n == d) return {g0};
    assert(n > d && n % d == 0);
    const FrobeniusMap fm = frobenius_map(g0);
    const std::uint64_t half = (f_.order() - 1) / 2;
    for (;;) {
      Poly r(static_cast<std::size_t>(n));
      for (auto& c : r) c = f_.random(rng);
      trim(r);
      if (deg(r) <= 0) continue;
      Poly g = gcd(r, g0);
      if (deg(g) <= 0) {
        Poly b = r, t = r;
        for (int j = 1; j < d; ++j) {
          t = apply(fm, t);
          b = mulmod(b, t, g0);
        }
        b = powmod(b, half, g0);
        g = gcd(sub(b, one()), g0);
      }
      if (deg(g) > 0 && deg(g) < n) {
        auto left = equal_degree(g, d, rng);
        auto right = equal_degree(quo(g0, g), d, rng);
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
    }
  }

  /// Degrees of the irreducible factors of a squarefree polynomial.
  std::vector<int> degree_pattern(const Poly& a) const {
    std::vector<int> out;
    for (const auto& [g, d] : distinct_degree(a))
      for (int c = deg(g) / d; c > 0; --c) out.push_back(d);
    return out;
  }

  bool is_irreducible(const Poly& a) const {
    if (deg(a) <= 0) return false;
    if (deg(a) == 1) return true;
    if (!is_squarefree(a)) return false;
    auto ddf = distinct_degree(a);
    return ddf.size() == 1 && ddf.front().second == deg(a);
  }

  Factorization factor(const Poly& a, std::mt19937_64& rng) const {
    Factorization out;
    if (a.empty()) throw Error("cannot factor the zero polynomial");
    out.unit = a.back();
    for (auto& [part, e] : squarefree(monic(a)))
      for (auto& [g, d] : distinct_degree(part))
        for (auto& h : equal_degree(g, d, rng)) out.factors.emplace_back(std::move(h), e);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& l, const auto& r) {
      if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
      return l.first < r.first;
    });
    return out;
  }

 private:
  F f_;
};

}  // namespace binsum
