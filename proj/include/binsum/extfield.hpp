#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "binsum/field.hpp"
#include "binsum/upoly.hpp"

namespace binsum {

/// F_{p^m} = F_p[t]/(mu(t)) for a monic irreducible mu of degree m <= 8.
/// Used only when F_p has too few points for a good specialization.
class ExtensionField {
 public:
  static constexpr int kMaxDegree = 8;
  using Elem = std::array<std::uint32_t, kMaxDegree>;

  ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// Smallest (lexicographic) monic irreducible modulus of degree m.
  static ExtensionField with_degree(std::uint32_t p, int m);

  int degree() const noexcept { return m_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return mu_; }

  Elem zero() const noexcept { return Elem{}; }
  Elem one() const noexcept {
    Elem e{};
    e[0] = 1;
    return e;
  }
  Elem embed(std::uint32_t c) const noexcept {
    Elem e{};
    e[0] = c % p_;
    return e;
  }
  /// The F_p value of a, if a lies in the prime subfield.
  std::optional<std::uint32_t> to_base(const Elem& a) const noexcept {
    for (int i = 1; i < m_; ++i)
      if (a[i] != 0) return std::nullopt;
    return a[0];
  }

  Elem add(const Elem& a, const Elem& b) const noexcept {
    Elem r{};
    for (int i = 0; i < m_; ++i) {
      std::uint32_t s = a[i] + b[i];
      r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const noexcept {
    Elem r{};
    for (int i = 0; i < m_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    return r;
  }
  Elem neg(const Elem& a) const noexcept {
    Elem r{};
    for (int i = 0; i < m_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const noexcept;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem inv(const Elem& a) const;
  Elem pth_root(const Elem& a) const noexcept { return pow(a, order() / p_); }
  bool is_zero(const Elem& a) const noexcept {
    for (int i = 0; i < m_; ++i)
      if (a[i] != 0) return false;
    return true;
  }
  /// Enumerates the field: base-p digits of index are the coordinates.
  Elem element(std::uint64_t index) const noexcept {
    Elem e{};
    for (int i = 0; i < m_; ++i) {
      e[i] = static_cast<std::uint32_t>(index % p_);
      index /= p_;
    }
    return e;
  }
  Elem random(std::mt19937_64& rng) const {
    Elem e{};
    for (int i = 0; i < m_; ++i) e[i] = static_cast<std::uint32_t>(rng() % p_);
    return e;
  }
  std::uint64_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  std::size_t wide_size() const noexcept { return static_cast<std::size_t>(2 * m_ - 1); }
  void mul_acc(std::uint64_t* acc, const Elem& a, const Elem& b) const noexcept {
    for (int i = 0; i < m_; ++i) {
      if (a[i] == 0) continue;
      const std::uint64_t ai = a[i];
      for (int j = 0; j < m_; ++j) acc[i + j] += ai * b[j];
    }
  }
  Elem reduce_wide(const std::uint64_t* acc) const noexcept;

 private:
  std::uint32_t p_;
  int m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> mu_;  // monic, low to high, size m + 1
  FastMod mod_;
};

static_assert(LazyField<ExtensionField>);

}  // namespace binsum
