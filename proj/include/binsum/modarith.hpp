#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "binsum/errors.hpp"

namespace binsum {

inline constexpr std::uint32_t kMaxPrime = 1u << 20;

// Deterministic trial division; exact for the supported range.
bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// An element of F_p that remembers its modulus. Mixing moduli is a
/// contract violation caught by assertions in debug builds.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {
    assert(modulus_ != 0 && value_ < modulus_);
  }

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    std::uint32_t s = a.value_ + b.value_;
    return {s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_};
  }
  friend Residue operator-(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
            a.modulus_};
  }
  friend Residue operator*(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    return {static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_),
            a.modulus_};
  }
  friend bool operator==(Residue a, Residue b) = default;

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Validated odd prime modulus. Immutable after construction.
class PrimeContext {
 public:
  explicit PrimeContext(std::int64_t p);

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  Residue residue(std::int64_t v) const { return {reduce(v), p_}; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element.
  std::uint32_t inv(std::uint32_t a) const;

  /// Table x -> x^e for x in [0, p). Uses 0^0 = 1.
  std::vector<std::uint32_t> power_table(std::uint64_t e) const;

 private:
  std::uint32_t p_;
};

/// Square-and-multiply; mod_pow(x, 0) == 1 for every x, including 0.
Residue mod_pow(Residue x, std::uint64_t e);

/// (k, n) together with r = gcd(k, n) and s = gcd(r, p - 1).
struct ExponentPair {
  std::uint32_t k = 1;
  std::uint32_t n = 1;
  std::uint32_t r = 1;
  std::uint32_t s = 1;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

ExponentPair exponent_pair(const PrimeContext& ctx, std::int64_t k, std::int64_t n);

/// Largest divisor of r that is coprime to m.
std::uint32_t coprime_divisor(std::uint32_t r, std::uint32_t m);

/// Divides k and n by the largest divisor d of r with gcd(d, p - 1) = 1.
/// The solution count T is unchanged because x -> x^d permutes F_p.
ExponentPair reduce_exponents(const PrimeContext& ctx, const ExponentPair& pair);

}  // namespace binsum
