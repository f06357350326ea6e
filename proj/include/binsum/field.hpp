#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

#include "binsum/errors.hpp"

namespace binsum {

template <class F>
concept FiniteField = requires(const F& f, const typename F::Elem& a, std::uint64_t i,
                               std::mt19937_64& rng) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.pth_root(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.element(i) } -> std::same_as<typename F::Elem>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { f.order() } -> std::same_as<std::uint64_t>;
  { f.characteristic() } -> std::same_as<std::uint32_t>;
  { a == a } -> std::convertible_to<bool>;
  { a < a } -> std::convertible_to<bool>;
};

/// Barrett reduction of 64-bit values by a fixed modulus below 2^32.
class FastMod {
 public:
  explicit FastMod(std::uint64_t p) : p_(p), m_(~std::uint64_t{0} / p) {}
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t operator()(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

/// Fields whose products can be summed unreduced: mul_acc adds a*b into
/// wide_size() 64-bit slots, reduce_wide turns the slots into an element.
/// Each slot absorbs at least 2^22 products before overflow.
template <class F>
concept LazyField = FiniteField<F> && requires(const F& f, std::uint64_t* acc, const typename F::Elem& a) {
  { f.wide_size() } -> std::convertible_to<std::size_t>;
  f.mul_acc(acc, a, a);
  { f.reduce_wide(acc) } -> std::same_as<typename F::Elem>;
};

/// F_p with elements stored as canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p), mod_(p) {}

  std::uint32_t p() const noexcept { return p_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(mod_(std::uint64_t{a} * b)); }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t0 = 0, t1 = 1, r0 = p_, r1 = a;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    return static_cast<Elem>(t0 < 0 ? t0 + p_ : t0);
  }
  Elem pth_root(Elem a) const noexcept { return a; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem element(std::uint64_t index) const noexcept { return static_cast<Elem>(index % p_); }
  Elem random(std::mt19937_64& rng) const { return static_cast<Elem>(rng() % p_); }
  std::uint64_t order() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  std::size_t wide_size() const noexcept { return 1; }
  void mul_acc(std::uint64_t* acc, Elem a, Elem b) const noexcept { acc[0] += std::uint64_t{a} * b; }
  Elem reduce_wide(const std::uint64_t* acc) const noexcept { return static_cast<Elem>(mod_(acc[0])); }
  const FastMod& fast_mod() const noexcept { return mod_; }

 private:
  std::uint32_t p_;
  FastMod mod_;
};

static_assert(LazyField<PrimeField>);

}  // namespace binsum
