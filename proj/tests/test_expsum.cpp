#include "doctest.h"

#include <cmath>
#include <numeric>
#include <set>

#include "binsum/expsum.hpp"
#include "binsum/solcount.hpp"
#include "support/oracles.hpp"

using namespace binsum;

TEST_SUITE("expsum") {
  TEST_CASE("trivial and Gauss sums") {
    const PrimeContext ctx(5);
    const auto s = eval_sum(ctx, exponent_pair(ctx, 1, 3), ctx.residue(0), ctx.residue(0));
    CHECK(std::abs(s.value) == doctest::Approx(5.0).epsilon(1e-13));
    for (std::int64_t p : {7, 11, 13, 101}) {
      const PrimeContext c(p);
      const auto pair = exponent_pair(c, 1, 2);
      for (std::int64_t a = 0; a < p; a += 3)
        for (std::int64_t b = 1; b < p; b += 2) {
          const SumValue v = eval_sum(c, pair, c.residue(a), c.residue(b));
          CHECK(std::abs(std::abs(v.value) - std::sqrt(double(p))) <= v.err);
        }
    }
  }

  TEST_CASE("sums agree with direct long double evaluation") {
    for (auto [p, k, n] : {std::tuple{13, 2, 5}, {17, 3, 8}, {11, 1, 10}, {23, 4, 6}}) {
      const PrimeContext ctx(p);
      const SumEvaluator ev(ctx, exponent_pair(ctx, k, n));
      for (std::uint32_t a = 0; a < ctx.p(); ++a)
        for (std::uint32_t b = 0; b < ctx.p(); ++b) {
          const SumValue v = ev(a, b);
          const auto ref = oracle::direct_sum(p, k, n, a, b);
          const double diff = std::abs(v.value - std::complex<double>(double(ref.real()), double(ref.imag())));
          CHECK(diff <= v.err + 1e-13);
        }
    }
  }

  TEST_CASE("error bound is small at moderate p") {
    const PrimeContext ctx(9973);
    CHECK(SumEvaluator(ctx, exponent_pair(ctx, 1, 3)).err() <= 1e-10);
  }

  TEST_CASE("orbit representatives cover every orbit exactly once") {
    for (auto [p, k, n] : {std::tuple{13, 2, 4}, {13, 3, 6}, {11, 1, 5}, {19, 6, 9}}) {
      const PrimeContext ctx(p);
      const auto pair = exponent_pair(ctx, k, n);
      const auto reps = orbit_representatives(ctx, pair);
      CHECK(reps.size() == std::size_t{pair.s} * (ctx.p() - 1));
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (auto [a, b] : reps)
        for (std::uint32_t z = 1; z < ctx.p(); ++z)
          seen.insert({ctx.mul(a, ctx.pow(z, k)), ctx.mul(b, ctx.pow(z, n))});
      CHECK(seen.size() == std::size_t{ctx.p() - 1} * (ctx.p() - 1));
    }
  }

  TEST_CASE("max_sum: orbit scan, full scan and brute force agree") {
    for (auto [p, k, n] : {std::tuple{7, 1, 3}, {11, 2, 4}, {13, 3, 6}, {13, 4, 8}, {17, 2, 3}}) {
      const PrimeContext ctx(p);
      const auto pair = exponent_pair(ctx, k, n);
      const auto orbit = max_sum(ctx, pair, ScanMode::orbit);
      const auto full = max_sum(ctx, pair, ScanMode::full);
      CHECK(orbit.scanned == std::uint64_t{pair.s} * (p - 1));
      CHECK(full.scanned == std::uint64_t(p - 1) * (p - 1));
      CHECK(std::abs(orbit.m_value - full.m_value) <= 2 * std::max(orbit.err, full.err));
      CHECK(std::abs(orbit.m_value - double(oracle::brute_max(p, k, n))) <= orbit.err + 1e-12);
      CHECK(ctx.mul(orbit.a, orbit.b) != 0);
    }
  }

  TEST_CASE("fourth moment is p^2 T and second moment counts collisions of x -> (x^k, x^n)") {
    for (auto [p, k, n] : {std::tuple{5, 1, 3}, {7, 2, 3}, {11, 2, 6}, {13, 1, 4}}) {
      const PrimeContext ctx(p);
      const auto pair = exponent_pair(ctx, k, n);
      const MomentResult m4 = fourth_moment(ctx, pair);
      CHECK(m4.quotient == oracle::brute_T(p, k, n));
      CHECK(std::abs(m4.value / (double(p) * p) - double(m4.quotient)) < 1e-3);
      const MomentResult m2 = second_moment(ctx, pair);
      std::uint64_t pairs = 0;
      for (std::uint64_t x = 0; x < std::uint64_t(p); ++x)
        for (std::uint64_t y = 0; y < std::uint64_t(p); ++y)
          if (oracle::pw(x, k, p) == oracle::pw(y, k, p) && oracle::pw(x, n, p) == oracle::pw(y, n, p)) ++pairs;
      CHECK(m2.quotient == pairs);
      CHECK(std::abs(m2.value - double(p) * p * pairs) <= m2.err + 1e-9);
      if (std::gcd(std::gcd(k, n), p - 1) == 1) CHECK(m2.quotient == std::uint64_t(p));
    }
  }

  TEST_CASE("serial references give identical results") {
    for (auto [p, k, n] : {std::tuple{31, 2, 7}, {29, 4, 14}, {37, 1, 12}}) {
      const PrimeContext ctx(p);
      const auto pair = exponent_pair(ctx, k, n);
      for (ScanMode mode : {ScanMode::orbit, ScanMode::full}) {
        const auto a = max_sum(ctx, pair, mode), b = serial::max_sum(ctx, pair, mode);
        CHECK(a.m_value == b.m_value);
        CHECK(a.a == b.a);
        CHECK(a.b == b.b);
        CHECK(a.scanned == b.scanned);
      }
      CHECK(fourth_moment(ctx, pair).value == serial::fourth_moment(ctx, pair).value);
      CHECK(second_moment(ctx, pair).value == serial::second_moment(ctx, pair).value);
    }
  }

  TEST_CASE("sum is invariant along orbits") {
    const PrimeContext ctx(19);
    const auto pair = exponent_pair(ctx, 3, 7);
    const SumEvaluator ev(ctx, pair);
    for (std::uint32_t z = 1; z < 19; ++z) {
      const double base = ev.abs(2, 5);
      const double moved = ev.abs(ctx.mul(2, ctx.pow(z, 3)), ctx.mul(5, ctx.pow(z, 7)));
      CHECK(std::abs(base - moved) <= 2 * ev.err());
    }
  }
}
