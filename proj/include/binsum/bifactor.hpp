#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binsum/bipoly.hpp"
#include "binsum/modarith.hpp"

namespace binsum {

/// F_n = X^n + Y^n - (X + Y - 1)^n - 1, for 2 <= n < p.
BivariatePolynomial build_Fn(const PrimeContext& ctx, std::int64_t n);

/// F_{k,n} = (X^n + Y^n - 1)^{k/r} - (X^k + Y^k - 1)^{n/r}. For k = 1 this
/// coincides with F_n term by term.
BivariatePolynomial build_Fkn(const PrimeContext& ctx, const ExponentPair& pair);

struct FactorOptions {
  std::uint64_t seed = 20190601;
  /// Restriction lines examined before the degree-pattern test gives up.
  int max_pattern_lines = 24;
  /// Same, for lines over F_{p^3} and F_{p^2} tried when F_p lines fail.
  int max_extension_lines = 12;
};

struct Factor {
  BivariatePolynomial poly;  // irreducible, lex-monic (X > Y)
  int multiplicity = 1;
};

struct Factorization {
  std::uint32_t unit = 1;
  std::vector<Factor> factors;
  std::uint64_t seed = 0;
};

/// Complete factorization into irreducibles over F_p.
Factorization factor(const PrimeContext& ctx, const BivariatePolynomial& poly,
                     const FactorOptions& options = {});

/// unit * prod factor^multiplicity.
BivariatePolynomial expand(std::uint32_t p, const Factorization& f);

/// e.g. "-2 * (X - 1) * (Y - 1)".
std::string to_string(std::uint32_t p, const Factorization& f);

/// Pairwise coprime squarefree parts with their multiplicities, sorted by
/// multiplicity. Product of part^multiplicity equals the input up to a unit.
std::vector<std::pair<BivariatePolynomial, int>> squarefree_decomposition(
    const BivariatePolynomial& poly);

/// Monic (lex) greatest common divisor in F_p[X, Y].
BivariatePolynomial gcd(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// Proves irreducibility of a squarefree polynomial without factors in X or Y
/// alone: intersects the subset sums of factor degrees of its restrictions
/// to lines over F_p. false means "not proven", not "reducible".
bool certify_irreducible_by_lines(const BivariatePolynomial& poly, std::uint64_t seed,
                                  int max_lines);

enum class Family { Fn, Fkn };

std::string to_string(Family family);

struct FactorReport {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t n = 0;
  Family family = Family::Fn;
  Factorization factorization;
  std::vector<Factor> trivial;
  std::vector<Factor> nontrivial;
  std::optional<int> min_nontrivial_degree;
  double degree_bound_value = 0.0;
  /// min_nontrivial_degree / degree_bound_value when both are positive.
  std::optional<double> ratio;
};

/// X^r - 1, Y^r - 1 and X^r + Y^r; for r = 1 this is X - 1, Y - 1, X + Y.
std::vector<BivariatePolynomial> trivial_divisors(std::uint32_t p, std::uint32_t r);

/// Lower bound expression on the degree of a nontrivial factor: min{p/n, n}
/// for k = 1, and the max-min expression in k, n, r otherwise.
double degree_bound(std::uint32_t p, const ExponentPair& pair);

/// Splits a factorization of F_n or F_{k,n} into factors dividing one of
/// trivial_divisors(r) and the rest.
FactorReport strip_trivial(const PrimeContext& ctx, const ExponentPair& pair,
                           const Factorization& f, Family family);

}  // namespace binsum
