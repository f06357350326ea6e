#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "binsum/bifactor.hpp"
#include "binsum/errors.hpp"
#include "support/oracles.hpp"

using namespace binsum;

namespace {

std::map<std::string, int> multiset(const Factorization& f) {
  std::map<std::string, int> m;
  for (const auto& fac : f.factors) m[to_string(fac.poly)] += fac.multiplicity;
  return m;
}

}  // namespace

TEST_SUITE("bifactor") {
  TEST_CASE("F_n and F_{k,n} match their definitions pointwise") {
    for (std::int64_t p : {5, 7, 11}) {
      const PrimeContext ctx(p);
      for (std::int64_t k = 1; k < p; ++k)
        for (std::int64_t n = k + 1; n < p; ++n) {
          const auto pair = exponent_pair(ctx, k, n);
          const auto F = build_Fkn(ctx, pair);
          const std::uint64_t r = pair.r, P = p;
          for (std::uint64_t x = 0; x < P; ++x)
            for (std::uint64_t y = 0; y < P; ++y) {
              const auto A = (oracle::pw(x, n, P) + oracle::pw(y, n, P) + P - 1) % P;
              const auto B = (oracle::pw(x, k, P) + oracle::pw(y, k, P) + P - 1) % P;
              CHECK(oracle::eval_terms(F, x, y) == (oracle::pw(A, k / r, P) + P - oracle::pw(B, n / r, P)) % P);
            }
        }
      for (std::int64_t n = 2; n < p; ++n) CHECK(build_Fn(ctx, n) == build_Fkn(ctx, exponent_pair(ctx, 1, n)));
    }
  }

  TEST_CASE("small factorizations") {
    const PrimeContext c5(5);
    CHECK(to_string(5, factor(c5, build_Fn(c5, 2))) == "-2 * (X - 1) * (Y - 1)");
    const PrimeContext c7(7);
    const auto F3 = factor(c7, build_Fn(c7, 3));
    CHECK(to_string(7, F3) == "-3 * (X + Y) * (X - 1) * (Y - 1)");
    const auto pair = exponent_pair(c7, 1, 4);
    const auto rep = strip_trivial(c7, pair, factor(c7, build_Fn(c7, 4)), Family::Fn);
    CHECK(rep.trivial.size() == 2);
    REQUIRE(rep.nontrivial.size() == 1);
    CHECK(rep.nontrivial[0].poly.total_degree() == 2);
  }

  TEST_CASE("X + Y divides F_n exactly when n is odd") {
    for (std::int64_t p : {11, 13}) {
      const PrimeContext ctx(p);
      const auto xy = parse_polynomial("X + Y", ctx.p());
      for (std::int64_t n = 2; n < p; ++n) CHECK(divide_exact(build_Fn(ctx, n), xy).has_value() == (n % 2 == 1));
    }
  }

  TEST_CASE("linear factors agree with the exhaustive line search") {
    for (std::int64_t p : {5, 7, 11, 13, 17}) {
      const PrimeContext ctx(p);
      for (std::int64_t n = 2; n < p; ++n) {
        const auto F = build_Fn(ctx, n);
        std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> found;
        for (const auto& fac : factor(ctx, F).factors) {
          if (fac.poly.total_degree() != 1) continue;
          const std::uint64_t a = fac.poly.coeff(1, 0), b = fac.poly.coeff(0, 1), c = fac.poly.coeff(0, 0);
          if (a) {
            const std::uint64_t inv = oracle::pw(a, p - 2, p);
            found.insert({1, b * inv % p, c * inv % p});
          } else {
            const std::uint64_t inv = oracle::pw(b, p - 2, p);
            found.insert({0, 1, c * inv % p});
          }
        }
        CHECK(found == oracle::linear_factors(F));
      }
    }
  }

  TEST_CASE("random products recover their factors") {
    for (std::uint32_t p : {5u, 13u, 31u}) {
      const PrimeContext ctx(p);
      std::mt19937_64 rng(1000 + p);
      for (int t = 0; t < 60; ++t) {
        BivariatePolynomial prod = BivariatePolynomial::constant(p, 1 + std::uint32_t(rng() % (p - 1)));
        std::map<std::string, int> expect;
        const int parts = 1 + int(rng() % 3);
        for (int i = 0; i < parts; ++i) {
          const auto g = lex_monic(oracle::random_irreducible(p, 6, rng));
          const int e = 1 + int(rng() % 2);
          prod = prod * pow(g, e);
          expect[to_string(g)] += e;
        }
        const auto f = factor(ctx, prod);
        CHECK(expand(p, f) == prod);
        CHECK(multiset(f) == expect);
      }
    }
  }

  TEST_CASE("squarefree decomposition and gcd") {
    const std::uint32_t p = 11;
    const auto a = parse_polynomial("X*Y + X + 3", p), b = parse_polynomial("X^2 + Y^2 + 2", p);
    const auto c = parse_polynomial("Y - 4", p);
    const auto parts = squarefree_decomposition(a * pow(b, 2) * pow(c, 3));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == lex_monic(a));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == lex_monic(b));
    CHECK(parts[2].first == lex_monic(c));
    CHECK(parts[2].second == 3);
    CHECK(gcd(a * b, b * c) == lex_monic(b));
    CHECK(gcd(a, c).is_constant());
  }

  TEST_CASE("multiplicity a multiple of p") {
    const std::uint32_t p = 3;
    const PrimeContext ctx(p);
    const auto g = parse_polynomial("X*Y + Y + 1", p), h = parse_polynomial("X + 2", p);
    const auto f = factor(ctx, pow(g, 3) * pow(h, 4));
    CHECK(to_string(p, f) == "(X - 1)^4 * (X*Y + Y + 1)^3");
  }

  TEST_CASE("line certificates are never issued for reducible input") {
    std::mt19937_64 rng(77);
    for (std::uint32_t p : {5u, 13u}) {
      for (int t = 0; t < 30; ++t) {
        const auto f = oracle::random_irreducible(p, 5, rng) * oracle::random_irreducible(p, 5, rng);
        if (f.degree_x() == 0 || f.degree_y() == 0) continue;
        CHECK_FALSE(certify_irreducible_by_lines(f, 1 + t, 24));
      }
    }
    // generic irreducible of higher degree over a large field certifies quickly
    const PrimeContext ctx(61);
    CHECK(certify_irreducible_by_lines(parse_polynomial("X^5 + Y^4 + X*Y + 1", 61), 1, 24));
  }

  TEST_CASE("factorization is deterministic in the seed") {
    const PrimeContext ctx(23);
    const auto F = build_Fkn(ctx, exponent_pair(ctx, 5, 7));
    const auto a = factor(ctx, F), b = factor(ctx, F);
    CHECK(to_string(23, a) == to_string(23, b));
    FactorOptions other;
    other.seed = 99;
    CHECK(to_string(23, factor(ctx, F, other)) == to_string(23, a));
  }

  TEST_CASE("trivial divisors and stripping for r > 1") {
    const PrimeContext ctx(13);
    const auto pair = exponent_pair(ctx, 2, 4);
    const auto rep = strip_trivial(ctx, pair, factor(ctx, build_Fkn(ctx, pair)), Family::Fkn);
    // F_{2,4} = F_2(X^2, Y^2) = -2 (X^2 - 1)(Y^2 - 1)
    CHECK(rep.nontrivial.empty());
    CHECK(rep.trivial.size() == 4);
    const auto divs = trivial_divisors(13, 3);
    CHECK(to_string(divs[0]) == "X^3 - 1");
    CHECK(to_string(divs[2]) == "X^3 + Y^3");
  }

  TEST_CASE("degree bound expression") {
    const PrimeContext ctx(31);
    CHECK(degree_bound(31, exponent_pair(ctx, 1, 4)) == doctest::Approx(4.0));
    CHECK(degree_bound(31, exponent_pair(ctx, 1, 10)) == doctest::Approx(3.1));
    const double expect = std::max(std::min(31.0 / 12, std::sqrt(4.0) - 3), std::min(31.0 / 27, std::sqrt(9.0) - 3));
    CHECK(degree_bound(31, exponent_pair(ctx, 12, 27)) == doctest::Approx(expect));
  }

  TEST_CASE("degenerate input") {
    const PrimeContext ctx(7);
    CHECK_THROWS_AS(build_Fkn(ctx, exponent_pair(ctx, 3, 3)), DegenerateFamily);
  }
}
