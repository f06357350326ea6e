#include "binsum/bifactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "binsum/errors.hpp"
#include "binsum/extfield.hpp"
#include "hensel.hpp"
#include "lowdeg.hpp"

namespace binsum {
namespace {

using UPoly = PolyRing<PrimeField>::Poly;
using Ring = PolyRing<PrimeField>;

constexpr std::size_t kMaxPrimeImageFactors = 12;
constexpr int kMaxLowDegreeBound = 64;

/// (X^e + Y^e - 1)^m, expanded with trinomial coefficients; requires m < p.
BivariatePolynomial trinomial_power(const PrimeContext& ctx, std::uint32_t e, std::uint32_t m) {
  const std::uint32_t p = ctx.p();
  std::vector<std::uint32_t> fact(m + 1, 1), inv_fact(m + 1, 1);
  for (std::uint32_t i = 1; i <= m; ++i) fact[i] = ctx.mul(fact[i - 1], i);
  for (std::uint32_t i = 0; i <= m; ++i) inv_fact[i] = ctx.inv(fact[i]);
  std::vector<Term> terms;
  for (std::uint32_t a = 0; a <= m; ++a)
    for (std::uint32_t b = 0; a + b <= m; ++b) {
      const std::uint32_t c = m - a - b;
      std::uint32_t coef = ctx.mul(fact[m], ctx.mul(inv_fact[a], ctx.mul(inv_fact[b], inv_fact[c])));
      if (c % 2 == 1) coef = ctx.neg(coef);
      terms.push_back(Term{e * a, e * b, coef});
    }
  return BivariatePolynomial::from_terms(p, std::move(terms));
}

UPoly rows_content(const Ring& ring, const RecursivePoly& rows) {
  UPoly c;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    c = ring.gcd(c, row);
    if (Ring::deg(c) == 0) break;
  }
  return c;
}

RecursivePoly divide_rows(const Ring& ring, RecursivePoly rows, const UPoly& c) {
  if (Ring::deg(c) <= 0) return rows;
  for (auto& row : rows)
    if (!row.empty()) row = ring.quo(row, c);
  return rows;
}

/// Pseudo-remainder of a by b as polynomials in Y over F_p[X].
RecursivePoly prem(const Ring& ring, RecursivePoly a, const RecursivePoly& b) {
  const std::size_t db = b.size() - 1;
  const UPoly& lb = b.back();
  trim_rows(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    const UPoly la = a.back();
    for (auto& row : a) row = ring.mul(row, lb);
    for (std::size_t t = 0; t <= db; ++t) a[da - db + t] = ring.sub(a[da - db + t], ring.mul(la, b[t]));
    trim_rows(a);
  }
  return a;
}

UPoly eval_rows_at(const Ring& ring, const RecursivePoly& rows, std::uint32_t x0) {
  UPoly u(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) u[j] = ring.eval(rows[j], x0);
  ring.trim(u);
  return u;
}

/// Points x0 in F_p where lc_Y(f)(x0) != 0 and f(x0, Y) is squarefree.
std::vector<std::uint32_t> good_points(const Ring& ring, const RecursivePoly& rows, std::size_t limit) {
  std::vector<std::uint32_t> out;
  const std::uint32_t p = ring.field().p();
  for (std::uint32_t x0 = 0; x0 < p && out.size() < limit; ++x0) {
    if (ring.eval(rows.back(), x0) == 0) continue;
    if (ring.is_squarefree(eval_rows_at(ring, rows, x0))) out.push_back(x0);
  }
  return out;
}

BivariatePolynomial homogenize(std::uint32_t p, const UPoly& u) {
  std::vector<Term> terms;
  const auto e = static_cast<std::uint32_t>(u.size() - 1);
  for (std::uint32_t i = 0; i <= e; ++i)
    if (u[i] != 0) terms.push_back(Term{i, e - i, u[i]});
  return BivariatePolynomial::from_terms(p, std::move(terms));
}

/// gcd of the dehomogenized homogeneous components f_m(t, 1).
UPoly homogeneous_content(const Ring& ring, const BivariatePolynomial& f) {
  std::map<std::uint32_t, UPoly> comps;
  for (const auto& t : f.terms()) {
    auto& u = comps[t.i + t.j];
    if (u.size() <= t.i) u.resize(t.i + 1, 0);
    u[t.i] = t.c;
  }
  UPoly g;
  for (auto& [deg, u] : comps) {
    ring.trim(u);
    g = ring.gcd(g, u);
    if (Ring::deg(g) <= 0) return ring.one();
  }
  return g;
}

struct Collector {
  std::uint32_t p;
  std::vector<Factor> factors;
  void add(const BivariatePolynomial& g, int e) {
    BivariatePolynomial h = lex_monic(g);
    for (auto& f : factors)
      if (f.poly == h) {
        f.multiplicity += e;
        return;
      }
    factors.push_back(Factor{std::move(h), e});
  }
};

/// Intersects, over restrictions to lines, the sets of degrees of possible
/// factors. Lines are Y = a X + b, or X = b when vertical.
template <LazyField F>
class LineCertifier {
 public:
  using Elem = typename F::Elem;

  LineCertifier(F field, const BivariatePolynomial& poly)
      : ring_(std::move(field)), d_(static_cast<std::size_t>(poly.total_degree())), top_(d_ + 1, 0),
        possible_(d_ + 1, 1) {
    const auto& k = ring_.field();
    for (const auto& t : poly.terms())
      if (t.i + t.j == d_) top_[t.i] = t.c;
    for (const auto& row : poly.to_recursive()) {
      typename PolyRing<F>::Poly r(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) r[i] = detail::embed(k, row[i]);
      rows_.push_back(std::move(r));
    }
  }

  /// Uses the line if it keeps the degree and gives a squarefree restriction.
  bool feed(const Elem& a, const Elem& b, bool vertical) {
    const auto& k = ring_.field();
    typename PolyRing<F>::Poly u;
    if (vertical) {
      if (top_[0] == 0) return false;
      u.resize(rows_.size());
      for (std::size_t j = 0; j < rows_.size(); ++j) u[j] = ring_.eval(rows_[j], b);
      ring_.trim(u);
    } else {
      Elem lead = k.zero(), apow = k.one();
      for (std::size_t i = d_ + 1; i-- > 0;) {
        if (top_[i] != 0) lead = k.add(lead, k.mul(detail::embed(k, top_[i]), apow));
        apow = k.mul(apow, a);
      }
      if (k.is_zero(lead)) return false;
      u = rows_.back();
      for (std::size_t j = rows_.size() - 1; j-- > 0;) {
        typename PolyRing<F>::Poly next(std::max(u.size() + 1, rows_[j].size()), k.zero());
        for (std::size_t i = 0; i < u.size(); ++i) {
          next[i] = k.add(next[i], k.mul(u[i], b));
          next[i + 1] = k.add(next[i + 1], k.mul(u[i], a));
        }
        for (std::size_t i = 0; i < rows_[j].size(); ++i) next[i] = k.add(next[i], rows_[j][i]);
        ring_.trim(next);
        u = std::move(next);
      }
    }
    if (PolyRing<F>::deg(u) != static_cast<int>(d_) || !ring_.is_squarefree(u)) return false;
    std::vector<char> sums(d_ + 1, 0);
    sums[0] = 1;
    for (int e : ring_.degree_pattern(ring_.monic(u))) {
      const auto eu = static_cast<std::size_t>(e);
      for (std::size_t s = d_ + 1; s-- > eu;)
        if (sums[s - eu]) sums[s] = 1;
    }
    changed_ = false;
    for (std::size_t s = 0; s <= d_; ++s)
      if (possible_[s] && !sums[s]) {
        possible_[s] = 0;
        changed_ = true;
      }
    return true;
  }

  bool proven() const {
    for (std::size_t s = 1; s < d_; ++s)
      if (possible_[s]) return false;
    return true;
  }
  bool last_changed() const noexcept { return changed_; }
  /// Largest possible factor degree up to d / 2; 0 once proven.
  int small_side_max() const {
    for (std::size_t s = d_ / 2; s >= 1; --s)
      if (possible_[s]) return static_cast<int>(s);
    return 0;
  }

 private:
  PolyRing<F> ring_;
  std::size_t d_;
  std::vector<std::uint32_t> top_;
  std::vector<typename PolyRing<F>::Poly> rows_;
  std::vector<char> possible_;
  bool changed_ = false;
};

struct LineEvidence {
  bool proven = false;
  /// Every factor of degree <= d / 2 has degree <= small_max.
  int small_max = 0;
};

/// Line certificate over F_p; gives up after stall_limit lines in a row
/// that leave the set of possible factor degrees unchanged.
LineEvidence prime_line_evidence(const BivariatePolynomial& poly, std::uint64_t seed, int max_lines,
                                 int stall_limit) {
  LineEvidence ev;
  const int d = poly.total_degree();
  ev.small_max = d / 2;
  if (d <= 0) return ev;
  if (d == 1) {
    ev.proven = true;
    ev.small_max = 0;
    return ev;
  }
  const std::uint32_t p = poly.modulus();
  LineCertifier<PrimeField> cert(PrimeField(p), poly);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> lines;  // (slope or p for vertical, offset)
  lines.reserve(static_cast<std::size_t>(p) * (p + 1));
  for (std::uint32_t a = 0; a <= p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) lines.emplace_back(a, b);
  std::mt19937_64 rng(seed);
  for (std::size_t i = lines.size(); i > 1; --i) std::swap(lines[i - 1], lines[rng() % i]);

  int good = 0, stalled = 0;
  for (const auto& [a, b] : lines) {
    if (!cert.feed(a == p ? 0 : a, b, a == p)) continue;
    ev.small_max = cert.small_side_max();
    if (cert.proven()) {
      ev.proven = true;
      return ev;
    }
    if (++good >= max_lines) break;
    stalled = cert.last_changed() ? 0 : stalled + 1;
    if (stalled >= stall_limit) break;
  }
  return ev;
}

/// Line certificate over F_{p^m}. Irreducibility there implies it over F_p;
/// lines over the extension rarely meet F_p-points of the curve.
bool certify_over_extension(const BivariatePolynomial& poly, int m, std::mt19937_64& rng, int max_lines,
                            int stall_limit) {
  const ExtensionField field = ExtensionField::with_degree(poly.modulus(), m);
  LineCertifier<ExtensionField> cert(field, poly);
  int good = 0, stalled = 0;
  for (int attempt = 0; attempt < 4 * max_lines && good < max_lines; ++attempt) {
    if (!cert.feed(field.random(rng), field.random(rng), false)) continue;
    if (cert.proven()) return true;
    ++good;
    stalled = cert.last_changed() ? 0 : stalled + 1;
    if (stalled >= stall_limit) return false;
  }
  return false;
}

template <FiniteField F>
std::optional<std::vector<BivariatePolynomial>> try_extension(const F& field, const BivariatePolynomial& g,
                                                             std::mt19937_64& rng) {
  const PolyRing<F> ring(field);
  const auto shifted_lc_ok = [&](const typename F::Elem& alpha) {
    const auto rows = detail::shifted_rows(ring, g.to_recursive(), alpha);
    typename PolyRing<F>::Poly image(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) image[t] = ring.coeff(rows[t], 0);
    ring.trim(image);
    return PolyRing<F>::deg(image) == static_cast<int>(rows.size()) - 1 && ring.is_squarefree(image);
  };
  for (int attempt = 0; attempt < 24; ++attempt) {
    const auto alpha = field.random(rng);
    if (shifted_lc_ok(alpha)) return detail::lift_and_recombine(field, g, alpha, rng);
  }
  return std::nullopt;
}

/// Irreducible factors of g, which is squarefree with no factor in X or Y alone.
std::vector<BivariatePolynomial> factor_squarefree_primitive(const BivariatePolynomial& g,
                                                             std::mt19937_64& rng,
                                                             const FactorOptions& options) {
  if (g.total_degree() <= 1) return {g};
  const LineEvidence lines = prime_line_evidence(g, options.seed, options.max_pattern_lines, 4);
  if (lines.proven) return {g};
  // lines usually leave only small degrees open: settle those by lifting
  if (lines.small_max <= kMaxLowDegreeBound) {
    const auto low = detail::find_low_degree_factor(g, lines.small_max, rng);
    if (low.outcome == detail::LowDegreeSearch::Outcome::none) return {g};
    if (low.outcome == detail::LowDegreeSearch::Outcome::found) {
      auto out = factor_squarefree_primitive(low.factor, rng, options);
      for (auto& f : factor_squarefree_primitive(*divide_exact(g, low.factor), rng, options))
        out.push_back(std::move(f));
      return out;
    }
  }
  // odd degree first: curves rich in F_{p^2}-points defeat quadratic lines
  for (int m : {3, 2})
    if (certify_over_extension(g, m, rng, options.max_extension_lines, 6)) return {g};

  const std::uint32_t p = g.modulus();
  const Ring ring{PrimeField(p)};
  // the F_p specialization whose image has the fewest factors
  std::optional<std::pair<std::size_t, std::uint32_t>> best;
  bool best_swapped = false;
  for (int swapped = 0; swapped < 2; ++swapped) {
    const RecursivePoly rows = (swapped ? swap_xy(g) : g).to_recursive();
    for (auto x0 : good_points(ring, rows, 6)) {
      const std::size_t c = ring.degree_pattern(ring.monic(eval_rows_at(ring, rows, x0))).size();
      if (!best || c < best->first) {
        best = {c, x0};
        best_swapped = swapped == 1;
      }
    }
    if (best) break;
  }
  const auto lift_prime = [&] {
    const BivariatePolynomial h = best_swapped ? swap_xy(g) : g;
    auto found = detail::lift_and_recombine(PrimeField(p), h, best->second, rng);
    if (best_swapped)
      for (auto& f : found) f = swap_xy(f);
    return found;
  };
  // many factors at every F_p point make recombination hopeless there
  if (best && best->first <= kMaxPrimeImageFactors) return lift_prime();
  for (int m = 2; m <= ExtensionField::kMaxDegree; ++m) {
    const ExtensionField field = ExtensionField::with_degree(p, m);
    if (auto found = try_extension(field, g, rng)) return *found;
  }
  if (best) return lift_prime();
  throw Error("no usable specialization point for bivariate factorization");
}

}  // namespace

BivariatePolynomial build_Fn(const PrimeContext& ctx, std::int64_t n) {
  if (n < 2 || n >= static_cast<std::int64_t>(ctx.p()))
    throw OutOfRange("F_n needs 2 <= n < p, got n = " + std::to_string(n));
  const auto nn = static_cast<std::uint32_t>(n);
  return trinomial_power(ctx, nn, 1) - trinomial_power(ctx, 1, nn);
}

BivariatePolynomial build_Fkn(const PrimeContext& ctx, const ExponentPair& pair) {
  if (pair.k == pair.n) throw DegenerateFamily("F_{k,n} vanishes identically for k = n");
  if (pair.k < 1 || pair.n < 1 || pair.k >= ctx.p() || pair.n >= ctx.p())
    throw OutOfRange("F_{k,n} needs 1 <= k, n < p");
  return trinomial_power(ctx, pair.n, pair.k / pair.r) - trinomial_power(ctx, pair.k, pair.n / pair.r);
}

BivariatePolynomial gcd(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.modulus() != b.modulus()) throw Error("gcd of polynomials over different fields");
  const std::uint32_t p = a.modulus();
  if (a.is_zero()) return lex_monic(b);
  if (b.is_zero()) return lex_monic(a);
  const Ring ring{PrimeField(p)};
  RecursivePoly ra = a.to_recursive(), rb = b.to_recursive();
  const UPoly ca = rows_content(ring, ra), cb = rows_content(ring, rb);
  const UPoly c = ring.gcd(ca, cb);
  ra = divide_rows(ring, std::move(ra), ca);
  rb = divide_rows(ring, std::move(rb), cb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  RecursivePoly result;
  if (rb.size() == 1) {
    result = RecursivePoly{ring.one()};
  } else {
    for (;;) {
      RecursivePoly r = prem(ring, ra, rb);
      if (r.empty()) {
        result = rb;
        break;
      }
      if (r.size() == 1) {
        result = RecursivePoly{ring.one()};
        break;
      }
      ra = std::move(rb);
      rb = divide_rows(ring, r, rows_content(ring, r));
    }
    result = divide_rows(ring, result, rows_content(ring, result));
  }
  for (auto& row : result) row = ring.mul(row, c.empty() ? ring.one() : c);
  trim_rows(result);
  return lex_monic(BivariatePolynomial::from_recursive(p, result));
}

std::vector<std::pair<BivariatePolynomial, int>> squarefree_decomposition(
    const BivariatePolynomial& poly) {
  if (poly.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
  const std::uint32_t p = poly.modulus();
  std::vector<std::pair<BivariatePolynomial, int>> out;
  if (poly.is_constant()) return out;
  const BivariatePolynomial f = lex_monic(poly);
  BivariatePolynomial u = gcd(gcd(f, derivative_x(f)), derivative_y(f));
  BivariatePolynomial v = *divide_exact(f, u);
  for (int i = 1; !v.is_constant(); ++i) {
    BivariatePolynomial w = gcd(u, v);
    BivariatePolynomial part = *divide_exact(v, w);
    if (!part.is_constant()) out.emplace_back(lex_monic(part), i);
    u = *divide_exact(u, w);
    v = std::move(w);
  }
  if (!u.is_constant()) {
    // every remaining multiplicity is divisible by p: u = root^p
    std::vector<Term> terms;
    for (const auto& t : u.terms()) terms.push_back(Term{t.i / p, t.j / p, t.c});
    const auto root = BivariatePolynomial::from_terms(p, std::move(terms));
    for (auto& [part, e] : squarefree_decomposition(root))
      out.emplace_back(std::move(part), e * static_cast<int>(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

bool certify_irreducible_by_lines(const BivariatePolynomial& poly, std::uint64_t seed, int max_lines) {
  return prime_line_evidence(poly, seed, max_lines, max_lines).proven;
}

Factorization factor(const PrimeContext& ctx, const BivariatePolynomial& poly, const FactorOptions& options) {
  if (poly.is_zero()) throw Error("cannot factor the zero polynomial");
  const std::uint32_t p = ctx.p();
  if (poly.modulus() != p) throw Error("polynomial modulus differs from the context prime");
  const Ring ring{PrimeField(p)};
  std::mt19937_64 rng(options.seed);

  Factorization out;
  out.seed = options.seed;
  out.unit = poly.lex_leading().c;
  Collector col{p, {}};
  BivariatePolynomial f = lex_monic(poly);

  // factors in X alone, then in Y alone
  for (int swapped = 0; swapped < 2; ++swapped) {
    const RecursivePoly rows = (swapped ? swap_xy(f) : f).to_recursive();
    const UPoly c = rows_content(ring, rows);
    if (Ring::deg(c) <= 0) continue;
    for (const auto& [u, e] : ring.factor(c, rng).factors)
      col.add(BivariatePolynomial::univariate(p, u, swapped == 1), e);
    const auto rest = BivariatePolynomial::from_recursive(p, divide_rows(ring, rows, c));
    f = swapped ? swap_xy(rest) : rest;
  }

  // homogeneous factors
  if (!f.is_constant()) {
    const UPoly h = homogeneous_content(ring, f);
    if (Ring::deg(h) > 0) {
      for (const auto& [u, e] : ring.factor(h, rng).factors) {
        const BivariatePolynomial hu = homogenize(p, u);
        col.add(hu, e);
        f = *divide_exact(f, pow(hu, static_cast<unsigned>(e)));
      }
    }
  }

  if (!f.is_constant()) {
    // a squarefree image at a point of full Y-degree proves f squarefree
    bool squarefree = f.degree_y() == 0 || !good_points(ring, f.to_recursive(), 1).empty() ||
                      (f.degree_x() > 0 && !good_points(ring, swap_xy(f).to_recursive(), 1).empty());
    std::vector<std::pair<BivariatePolynomial, int>> parts;
    if (squarefree)
      parts.emplace_back(f, 1);
    else
      parts = squarefree_decomposition(f);
    for (const auto& [part, e] : parts)
      for (const auto& g : factor_squarefree_primitive(part, rng, options)) col.add(g, e);
  }

  out.factors = std::move(col.factors);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& l, const Factor& r) { return canonical_less(l.poly, r.poly); });
  return out;
}

BivariatePolynomial expand(std::uint32_t p, const Factorization& f) {
  BivariatePolynomial acc = BivariatePolynomial::constant(p, f.unit);
  for (const auto& fac : f.factors) acc = acc * pow(fac.poly, static_cast<unsigned>(fac.multiplicity));
  return acc;
}

std::string to_string(std::uint32_t p, const Factorization& f) {
  std::ostringstream os;
  const std::int64_t unit = f.unit > p / 2 ? static_cast<std::int64_t>(f.unit) - p : f.unit;
  bool first = true;
  if (unit != 1 || f.factors.empty()) {
    os << unit;
    first = false;
  }
  for (const auto& fac : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << '(' << to_string(fac.poly) << ')';
    if (fac.multiplicity != 1) os << '^' << fac.multiplicity;
  }
  return os.str();
}

std::string to_string(Family family) { return family == Family::Fn ? "F_n" : "F_kn"; }

std::vector<BivariatePolynomial> trivial_divisors(std::uint32_t p, std::uint32_t r) {
  const std::uint32_t minus_one = p - 1;
  return {BivariatePolynomial::from_terms(p, {Term{r, 0, 1}, Term{0, 0, minus_one}}),
          BivariatePolynomial::from_terms(p, {Term{0, r, 1}, Term{0, 0, minus_one}}),
          BivariatePolynomial::from_terms(p, {Term{r, 0, 1}, Term{0, r, 1}})};
}

double degree_bound(std::uint32_t p, const ExponentPair& pair) {
  const double pd = p, k = pair.k, n = pair.n, r = pair.r;
  if (pair.k == 1) return std::min(pd / n, n);
  return std::max(std::min(pd / k, std::sqrt(k / 3.0) - r), std::min(pd / n, std::sqrt(n / 3.0) - r));
}

FactorReport strip_trivial(const PrimeContext& ctx, const ExponentPair& pair, const Factorization& f,
                           Family family) {
  FactorReport rep;
  rep.p = ctx.p();
  rep.k = pair.k;
  rep.n = pair.n;
  rep.family = family;
  rep.factorization = f;
  const auto divisors = trivial_divisors(ctx.p(), pair.r);
  for (const auto& fac : f.factors) {
    const bool trivial = std::any_of(divisors.begin(), divisors.end(), [&](const auto& d) {
      return divide_exact(d, fac.poly).has_value();
    });
    (trivial ? rep.trivial : rep.nontrivial).push_back(fac);
  }
  for (const auto& fac : rep.nontrivial) {
    const int d = fac.poly.total_degree();
    if (!rep.min_nontrivial_degree || d < *rep.min_nontrivial_degree) rep.min_nontrivial_degree = d;
  }
  rep.degree_bound_value = degree_bound(ctx.p(), pair);
  if (rep.min_nontrivial_degree && rep.degree_bound_value > 0)
    rep.ratio = *rep.min_nontrivial_degree / rep.degree_bound_value;
  return rep;
}

}  // namespace binsum
