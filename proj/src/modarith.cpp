#include "binsum/modarith.hpp"

#include <string>

namespace binsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

PrimeContext::PrimeContext(std::int64_t p) {
  if (p < 3) throw OutOfRange("modulus must be an odd prime >= 3, got " + std::to_string(p));
  if (p > static_cast<std::int64_t>(kMaxPrime))
    throw OutOfRange("modulus " + std::to_string(p) + " exceeds supported bound " +
                     std::to_string(kMaxPrime));
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeContext::pow(std::uint32_t x, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = x % p_;
  while (e != 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeContext::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("inverse of zero modulo " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::vector<std::uint32_t> PrimeContext::power_table(std::uint64_t e) const {
  std::vector<std::uint32_t> table(p_);
  for (std::uint32_t x = 0; x < p_; ++x) table[x] = pow(x, e);
  return table;
}

Residue mod_pow(Residue x, std::uint64_t e) {
  const std::uint64_t p = x.modulus();
  std::uint64_t result = 1;
  std::uint64_t base = x.value();
  while (e != 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(result % p), x.modulus()};
}

ExponentPair exponent_pair(const PrimeContext& ctx, std::int64_t k, std::int64_t n) {
  const std::int64_t p = ctx.p();
  if (k < 1 || k >= p || n < 1 || n >= p)
    throw OutOfRange("exponents must lie in [1, " + std::to_string(p) + "), got k=" +
                     std::to_string(k) + " n=" + std::to_string(n));
  ExponentPair pair;
  pair.k = static_cast<std::uint32_t>(k);
  pair.n = static_cast<std::uint32_t>(n);
  pair.r = static_cast<std::uint32_t>(gcd_u64(pair.k, pair.n));
  pair.s = static_cast<std::uint32_t>(gcd_u64(pair.r, ctx.p() - 1));
  return pair;
}

std::uint32_t coprime_divisor(std::uint32_t r, std::uint32_t m) {
  std::uint32_t d = r;
  for (std::uint64_t g = gcd_u64(d, m); g > 1; g = gcd_u64(d, m)) d /= static_cast<std::uint32_t>(g);
  return d;
}

ExponentPair reduce_exponents(const PrimeContext& ctx, const ExponentPair& pair) {
  const std::uint32_t d = coprime_divisor(pair.r, ctx.p() - 1);
  ExponentPair out;
  out.k = pair.k / d;
  out.n = pair.n / d;
  out.r = pair.r / d;
  out.s = static_cast<std::uint32_t>(gcd_u64(out.r, ctx.p() - 1));
  assert(out.s == pair.s);
  return out;
}

}  // namespace binsum
