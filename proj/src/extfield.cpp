#include "binsum/extfield.hpp"

#include <limits>
#include <string>

namespace binsum {

ExtensionField::ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), q_(1), mu_(std::move(modulus)), mod_(p) {
  if (m_ < 1 || m_ > kMaxDegree) throw OutOfRange("extension degree must lie in [1, 8]");
  if (mu_.back() != 1) throw Error("extension modulus must be monic");
  for (int i = 0; i < m_; ++i) {
    if (q_ > std::numeric_limits<std::uint64_t>::max() / 4 / p_)
      throw OutOfRange("extension field order exceeds 64 bits");
    q_ *= p_;
  }
}

ExtensionField ExtensionField::with_degree(std::uint32_t p, int m) {
  if (m < 1 || m > kMaxDegree) throw OutOfRange("extension degree must lie in [1, 8]");
  PolyRing<PrimeField> ring{PrimeField(p)};
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  // Smallest modulus in base-p order of its low coefficients.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> mu(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < m; ++i) {
      mu[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    mu[static_cast<std::size_t>(m)] = 1;
    if (ring.is_irreducible(mu)) return ExtensionField(p, std::move(mu));
  }
  throw Error("no irreducible polynomial of degree " + std::to_string(m));
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const noexcept {
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  mul_acc(t.data(), a, b);
  return reduce_wide(t.data());
}

ExtensionField::Elem ExtensionField::reduce_wide(const std::uint64_t* acc) const noexcept {
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  const int w = 2 * m_ - 1;
  for (int i = 0; i < w; ++i) t[i] = mod_(acc[i]);
  for (int i = w - 1; i >= m_; --i) {
    const std::uint64_t c = mod_(t[i]);
    if (c == 0) continue;
    for (int j = 0; j < m_; ++j) t[i - m_ + j] += c * (p_ - mu_[j]);
  }
  Elem r{};
  for (int i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(mod_(t[i]));
  return r;
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e != 0) a = mul(a, a);
  }
  return r;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error("inverse of zero in F_{p^m}");
  return pow(a, q_ - 2);
}

}  // namespace binsum
