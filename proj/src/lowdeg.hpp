#pragma once

#include <random>

#include "binsum/bipoly.hpp"

namespace binsum::detail {

struct LowDegreeSearch {
  enum class Outcome { found, none, undecided };
  Outcome outcome = Outcome::undecided;
  /// A factor of least total degree when outcome is found.
  BivariatePolynomial factor;
};

/// Searches a squarefree g without factors in X or Y alone for a factor of
/// total degree <= bound. Outcome none proves there is none.
LowDegreeSearch find_low_degree_factor(const BivariatePolynomial& g, int bound, std::mt19937_64& rng);

}  // namespace binsum::detail
