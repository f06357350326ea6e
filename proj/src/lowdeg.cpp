#include "lowdeg.hpp"

#include <algorithm>
#include <optional>

#include "hensel.hpp"

// After the shear X -> X + cY with top form h(c, 1) != 0, g becomes monic in Y
// up to a constant and so does each of its factors. A factor G of total
// degree s then reads, around X = x0, as a product of monic Hensel lifts of
// factors of g(x0 + cY, Y) of degree <= s, and its Y^j coefficient is a
// polynomial of degree <= s - j in t = X - x0 - cY. Lifting to t^{bound+1}
// therefore recovers every such G exactly.

namespace binsum::detail {
namespace {

using Ring = PolyRing<PrimeField>;
using UPoly = Ring::Poly;
using Rows = SeriesRows<PrimeField>;

constexpr std::uint64_t kMaxSubsets = 200000;
constexpr int kPointsTried = 3;
constexpr std::size_t kMaxFreeColumns = 22;

/// (D^l g)(x0 + cY, Y) for l < prec, D^l the l-th Hasse derivative in X.
std::vector<UPoly> restricted_derivatives(const Ring& ring, const RecursivePoly& xrows, std::uint32_t x0,
                                          std::uint32_t c, std::size_t prec,
                                          const std::vector<std::vector<std::uint32_t>>& binom) {
  const auto& k = ring.field();
  const UPoly line = ring.add(ring.constant(x0), ring.monomial(c, 1));
  std::vector<UPoly> out(prec);
  for (std::size_t l = 0; l < prec && l < xrows.size(); ++l) {
    UPoly u;
    for (std::size_t i = xrows.size(); i-- > l;) {
      u = ring.mul(u, line);
      const std::uint32_t b = binom[i][l];
      if (b != 0 && !xrows[i].empty()) u = ring.add(u, ring.scale(xrows[i], k.element(b)));
    }
    out[l] = std::move(u);
  }
  return out;
}

/// Number of subsets of the given degrees with sum <= bound, capped.
std::uint64_t count_subsets(const std::vector<int>& degrees, int bound) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(bound) + 1, 0);
  ways[0] = 1;
  for (int e : degrees)
    for (int s = bound; s >= e; --s) ways[s] = std::min(kMaxSubsets + 1, ways[s] + ways[s - e]);
  std::uint64_t total = 0;
  for (int s = 1; s <= bound; ++s) total = std::min(kMaxSubsets + 1, total + ways[s]);
  return total;
}

struct Point {
  std::uint32_t x0 = 0;
  std::vector<std::pair<UPoly, int>> groups;  // distinct-degree groups of degree <= bound
  UPoly rest;
  std::uint64_t subsets = 0;
};

}  // namespace

LowDegreeSearch find_low_degree_factor(const BivariatePolynomial& g, int bound, std::mt19937_64& rng) {
  LowDegreeSearch out;
  const std::uint32_t p = g.modulus();
  const int d = g.total_degree();
  if (d <= 0 || bound <= 0) {
    out.outcome = LowDegreeSearch::Outcome::none;
    return out;
  }
  bound = std::min(bound, d / 2);
  if (bound <= 0) {
    out.outcome = LowDegreeSearch::Outcome::none;
    return out;
  }
  const Ring ring{PrimeField(p)};
  const auto& k = ring.field();

  UPoly top(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& t : g.terms())
    if (static_cast<int>(t.i + t.j) == d) top[t.i] = t.c;
  ring.trim(top);
  std::optional<std::uint32_t> shear;
  for (std::uint32_t c = 0; c < p && !shear; ++c)
    if (ring.eval(top, c) != 0) shear = c;
  if (!shear) return out;
  const std::uint32_t c = *shear;

  const std::size_t prec = static_cast<std::size_t>(bound) + 1;
  const RecursivePoly xrows = swap_xy(g).to_recursive();
  std::vector<std::vector<std::uint32_t>> binom(xrows.size(), std::vector<std::uint32_t>(prec, 0));
  for (std::size_t i = 0; i < xrows.size(); ++i) {
    binom[i][0] = 1;
    for (std::size_t l = 1; l < prec && l <= i; ++l)
      binom[i][l] = k.add(binom[i - 1][l - 1], binom[i - 1][l]);
  }

  // the specialization with the fewest candidate subsets among a few tries
  std::optional<Point> best;
  int tried = 0;
  for (std::uint32_t x0 = 0; x0 < p && tried < kPointsTried; ++x0) {
    const UPoly image = restricted_derivatives(ring, xrows, x0, c, 1, binom).front();
    if (Ring::deg(image) != d || !ring.is_squarefree(image)) continue;
    ++tried;
    Point pt;
    pt.x0 = x0;
    std::tie(pt.groups, pt.rest) = ring.low_degree_split(image, bound);
    std::vector<int> degrees;
    for (const auto& [grp, e] : pt.groups)
      for (int m = Ring::deg(grp) / e; m > 0; --m) degrees.push_back(e);
    pt.subsets = count_subsets(degrees, bound);
    if (!best || pt.subsets < best->subsets) best = std::move(pt);
    if (best->subsets == 0) break;
  }
  if (!best) return out;
  if (best->subsets == 0) {
    out.outcome = LowDegreeSearch::Outcome::none;
    return out;
  }

  std::vector<UPoly> factors;
  std::vector<int> degrees;
  for (const auto& [grp, e] : best->groups)
    for (auto& f : ring.equal_degree(grp, e, rng)) {
      factors.push_back(std::move(f));
      degrees.push_back(e);
    }
  const std::size_t small = factors.size();
  if (Ring::deg(best->rest) > 0) factors.push_back(best->rest);

  const auto restricted = restricted_derivatives(ring, xrows, best->x0, c, prec, binom);
  Rows series(static_cast<std::size_t>(d) + 1);
  for (std::size_t l = 0; l < prec; ++l)
    for (std::size_t j = 0; j < restricted[l].size(); ++j) {
      if (restricted[l][j] == 0) continue;
      auto& row = series[j];
      if (row.size() <= l) row.resize(l + 1, 0);
      row[l] = restricted[l][j];
    }
  const auto lifted = hensel_lift(ring, series, factors, prec);

  // t = X - x0 - cY
  const BivariatePolynomial t_poly = BivariatePolynomial::from_terms(
      p, {Term{1, 0, 1}, Term{0, 1, k.neg(c)}, Term{0, 0, k.neg(best->x0)}});
  const auto unshear = [&](const Rows& rows) {
    std::vector<BivariatePolynomial> tpow{BivariatePolynomial::constant(p, 1)};
    BivariatePolynomial acc(p);
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t l = 0; l < rows[j].size(); ++l) {
        if (rows[j][l] == 0) continue;
        while (tpow.size() <= l) tpow.push_back(tpow.back() * t_poly);
        acc = acc + scale(tpow[l], rows[j][l]) * BivariatePolynomial::monomial(p, 1, 0, static_cast<std::uint32_t>(j));
      }
    return acc;
  };

  const auto check = [&](const std::vector<std::size_t>& pick) -> std::optional<BivariatePolynomial> {
    Rows prod{ring.one()};
    for (std::size_t i : pick) prod = mul_rows_trunc(ring, prod, lifted[i], prec);
    const int s = static_cast<int>(prod.size()) - 1;
    for (int j = 0; j <= s; ++j)
      if (Ring::deg(prod[j]) > s - j) return std::nullopt;
    BivariatePolynomial cand = unshear(prod);
    if (cand.total_degree() > 0 && divide_exact(g, cand)) return lex_monic(cand);
    return std::nullopt;
  };

  // Power sums of the Y-roots of a true factor satisfy deg_t p_m <= m, and
  // they add over subsets: a linear system on the subset indicator.
  std::vector<std::vector<std::uint32_t>> rows;
  {
    std::vector<std::vector<UPoly>> sums(small);
    for (std::size_t i = 0; i < small; ++i) {
      const Rows& f = lifted[i];
      const std::size_t e = f.size() - 1;
      auto& ps = sums[i];
      ps.assign(prec, UPoly{});
      for (std::size_t m = 1; m < prec; ++m) {
        UPoly acc = m <= e ? ring.scale(f[e - m], k.element(static_cast<std::uint32_t>(m % p))) : UPoly{};
        for (std::size_t j = 1; j < m && j <= e; ++j) acc = ring.add(acc, ring.mul_trunc(f[e - j], ps[m - j], prec));
        ps[m] = ring.neg(acc);
      }
    }
    for (std::size_t m = 1; m < prec; ++m)
      for (std::size_t l = m + 1; l < prec; ++l) {
        std::vector<std::uint32_t> row(small);
        for (std::size_t i = 0; i < small; ++i) row[i] = ring.coeff(sums[i][m], l);
        rows.push_back(std::move(row));
      }
  }
  // reduced row echelon form
  std::vector<int> pivot_of(small, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < small && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const std::uint32_t inv = k.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = k.mul(v, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == rank || rows[o][col] == 0) continue;
      const std::uint32_t f = rows[o][col];
      for (std::size_t c2 = 0; c2 < small; ++c2) rows[o][c2] = k.sub(rows[o][c2], k.mul(f, rows[rank][c2]));
    }
    pivot_of[col] = static_cast<int>(rank++);
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < small; ++col)
    if (pivot_of[col] < 0) free_cols.push_back(col);
  if (free_cols.size() > kMaxFreeColumns) return out;

  // 0/1 kernel vectors of total degree <= bound, by smallest degree
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<char> chosen(small, 0);
  const auto complete = [&] {
    std::vector<std::size_t> pick;
    int total = 0;
    for (std::size_t col = 0; col < small; ++col) {
      std::uint32_t v;
      if (pivot_of[col] < 0) {
        v = chosen[col];
      } else {
        std::uint32_t acc = 0;
        for (std::size_t fc : free_cols)
          if (chosen[fc]) acc = k.add(acc, rows[static_cast<std::size_t>(pivot_of[col])][fc]);
        v = k.neg(acc);
      }
      if (v > 1) return;
      if (v == 1) {
        pick.push_back(col);
        total += degrees[col];
      }
    }
    if (!pick.empty() && total <= bound) candidates.push_back(std::move(pick));
  };
  const auto walk = [&](auto&& self, std::size_t idx, int used) -> void {
    if (idx == free_cols.size()) {
      complete();
      return;
    }
    const std::size_t col = free_cols[idx];
    self(self, idx + 1, used);
    if (used + degrees[col] <= bound) {
      chosen[col] = 1;
      self(self, idx + 1, used + degrees[col]);
      chosen[col] = 0;
    }
  };
  walk(walk, 0, 0);
  const auto degree_of = [&](const std::vector<std::size_t>& pick) {
    int t = 0;
    for (std::size_t i : pick) t += degrees[i];
    return t;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return degree_of(a) < degree_of(b); });
  std::optional<BivariatePolynomial> hit;
  for (const auto& pick : candidates)
    if ((hit = check(pick))) break;

  if (hit) {
    out.outcome = LowDegreeSearch::Outcome::found;
    out.factor = std::move(*hit);
  } else {
    out.outcome = LowDegreeSearch::Outcome::none;
  }
  return out;
}

}  // namespace binsum::detail
