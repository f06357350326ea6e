#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binsum/upoly.hpp"

namespace binsum {

/// c * X^i * Y^j with c a nonzero residue.
struct Term {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t c = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Coefficient of Y^j as a dense polynomial in X, for j = 0..deg_Y.
using RecursivePoly = std::vector<PolyRing<PrimeField>::Poly>;

/// Sparse polynomial in F_p[X, Y]. Terms are kept in canonical order:
/// total degree descending, then X-degree descending. No zero coefficients.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::uint32_t p) : p_(p) {}

  static BivariatePolynomial from_terms(std::uint32_t p, std::vector<Term> terms);
  static BivariatePolynomial constant(std::uint32_t p, std::uint32_t c);
  static BivariatePolynomial monomial(std::uint32_t p, std::uint32_t c, std::uint32_t i,
                                      std::uint32_t j);
  /// Embeds a polynomial in X (or in Y when in_y is set).
  static BivariatePolynomial univariate(std::uint32_t p, const PolyRing<PrimeField>::Poly& u,
                                        bool in_y = false);
  static BivariatePolynomial from_recursive(std::uint32_t p, const RecursivePoly& rows);

  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return total_degree() <= 0; }
  std::uint32_t coeff(std::uint32_t i, std::uint32_t j) const;

  /// -1 for the zero polynomial.
  int total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().i + terms_.front().j);
  }
  int degree_x() const noexcept;
  int degree_y() const noexcept;

  /// Leading term in lexicographic order with X > Y.
  Term lex_leading() const;
  /// Homogeneous part of top total degree.
  BivariatePolynomial top_form() const;

  std::uint32_t eval(std::uint32_t x, std::uint32_t y) const;
  RecursivePoly to_recursive() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::uint32_t p_ = 0;
  std::vector<Term> terms_;
};

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator-(const BivariatePolynomial& a);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial scale(const BivariatePolynomial& a, std::uint32_t c);
BivariatePolynomial pow(const BivariatePolynomial& a, unsigned e);

/// Quotient a / b when b divides a exactly in F_p[X, Y].
std::optional<BivariatePolynomial> divide_exact(const BivariatePolynomial& a,
                                                const BivariatePolynomial& b);

BivariatePolynomial swap_xy(const BivariatePolynomial& a);
BivariatePolynomial derivative_x(const BivariatePolynomial& a);
BivariatePolynomial derivative_y(const BivariatePolynomial& a);

/// Scales a so that its lexicographic leading coefficient is 1.
BivariatePolynomial lex_monic(const BivariatePolynomial& a);

/// Total order used to sort factors: degree, then canonical term sequence.
bool canonical_less(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// Coefficients printed as symmetric residues, e.g. "-2*X*Y + 2*X + 2*Y - 2".
std::string to_string(const BivariatePolynomial& a);
/// to_string followed by " (mod p)".
std::string canonical_text(const BivariatePolynomial& a);

/// Parses the to_string format (and loose variants such as "3X^2 y").
BivariatePolynomial parse_polynomial(std::string_view text, std::uint32_t p);

/// Removes trailing zero rows.
void trim_rows(RecursivePoly& rows);

}  // namespace binsum
