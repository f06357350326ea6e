#include "doctest.h"

#include <random>

#include "binsum/bipoly.hpp"
#include "binsum/errors.hpp"
#include "support/oracles.hpp"

using namespace binsum;

namespace {

BivariatePolynomial random_poly(std::uint32_t p, int deg, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (int d = 0; d <= deg; ++d)
    for (int i = 0; i <= d; ++i)
      if (rng() % 3 == 0)
        terms.push_back({std::uint32_t(i), std::uint32_t(d - i), std::uint32_t(rng() % p)});
  return BivariatePolynomial::from_terms(p, terms);
}

}  // namespace

TEST_SUITE("bipoly") {
  TEST_CASE("canonical text") {
    const std::uint32_t p = 5;
    const auto xm1 = parse_polynomial("X - 1", p), ym1 = parse_polynomial("Y - 1", p);
    const auto f = scale(xm1 * ym1, 3);  // -2 mod 5
    CHECK(canonical_text(f) == "-2*X*Y + 2*X + 2*Y - 2 (mod 5)");
    CHECK(to_string(BivariatePolynomial(p)) == "0");
    CHECK(parse_polynomial(canonical_text(f), p) == f);
    CHECK(parse_polynomial("3X^2 y + 2", 7) == BivariatePolynomial::from_terms(7, {{2, 1, 3}, {0, 0, 2}}));
  }

  TEST_CASE("text round trip on random polynomials") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {3u, 11u, 31u})
      for (int t = 0; t < 40; ++t) {
        const auto f = random_poly(p, 6, rng);
        CHECK(parse_polynomial(to_string(f), p) == f);
      }
  }

  TEST_CASE("terms are canonical and nonzero") {
    std::mt19937_64 rng(3);
    const auto f = random_poly(13, 8, rng) * random_poly(13, 5, rng);
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      CHECK(f.terms()[i].c != 0);
      if (i == 0) continue;
      const auto& a = f.terms()[i - 1];
      const auto& b = f.terms()[i];
      CHECK((a.i + a.j > b.i + b.j || (a.i + a.j == b.i + b.j && a.i > b.i)));
    }
  }

  TEST_CASE("ring operations agree pointwise") {
    std::mt19937_64 rng(11);
    const std::uint32_t p = 17;
    for (int t = 0; t < 20; ++t) {
      const auto f = random_poly(p, 5, rng), g = random_poly(p, 4, rng);
      const auto sum = f + g, prod = f * g, diff = f - g, sq = pow(f, 2);
      for (std::uint32_t x = 0; x < p; x += 3)
        for (std::uint32_t y = 0; y < p; y += 2) {
          const auto fx = oracle::eval_terms(f, x, y), gx = oracle::eval_terms(g, x, y);
          CHECK(oracle::eval_terms(sum, x, y) == (fx + gx) % p);
          CHECK(oracle::eval_terms(diff, x, y) == (fx + p - gx) % p);
          CHECK(oracle::eval_terms(prod, x, y) == fx * gx % p);
          CHECK(oracle::eval_terms(sq, x, y) == fx * fx % p);
          CHECK(f.eval(x, y) == fx);
        }
    }
  }

  TEST_CASE("exact division") {
    std::mt19937_64 rng(5);
    const std::uint32_t p = 13;
    for (int t = 0; t < 30; ++t) {
      const auto f = random_poly(p, 5, rng), g = random_poly(p, 4, rng);
      if (g.is_zero()) continue;
      const auto q = divide_exact(f * g, g);
      REQUIRE(q);
      CHECK(*q == f);
    }
    const auto x = parse_polynomial("X", p), y = parse_polynomial("Y + 1", p);
    CHECK_FALSE(divide_exact(x, y));
    CHECK_FALSE(divide_exact(x * x + y, x));
  }

  TEST_CASE("swap, derivatives, monic") {
    const std::uint32_t p = 7;
    const auto f = parse_polynomial("3*X^3*Y + 2*X*Y^2 + Y + 5", p);
    CHECK(swap_xy(swap_xy(f)) == f);
    CHECK(swap_xy(f) == parse_polynomial("3*X*Y^3 + 2*X^2*Y + X + 5", p));
    CHECK(derivative_x(f) == parse_polynomial("2*X^2*Y + 2*Y^2", p));
    CHECK(derivative_y(f) == parse_polynomial("3*X^3 + 4*X*Y + 1", p));
    CHECK(lex_monic(f).lex_leading().c == 1);
    CHECK(f.degree_x() == 3);
    CHECK(f.degree_y() == 2);
    CHECK(f.top_form() == parse_polynomial("3*X^3*Y", p));
  }

  TEST_CASE("recursive form round trip") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
      const auto f = random_poly(19, 7, rng);
      CHECK(BivariatePolynomial::from_recursive(19, f.to_recursive()) == f);
    }
  }

  TEST_CASE("bad text is rejected") {
    CHECK_THROWS_AS(parse_polynomial("", 5), Error);
    CHECK_THROWS_AS(parse_polynomial("X^^2", 5), Error);
  }
}
