#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "binsum/modarith.hpp"

namespace binsum {

enum class BoundId {
  KARATSUBA,
  AKULINICHEV,
  AKU56,
  THM_MN,
  COR_MN_P1,
  THM_NN,
  COR_TN,
  THM_NKN,
  COR_TKN,
  THM_MKN,
  LEMMA31_EXPLICIT,
  COR_TKN_SIMPLIFIED,
  COR_TKN_REDUCED,
  WEIL,  // classical (n - 1) sqrt(p), context only
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::KARATSUBA,      BoundId::AKULINICHEV,       BoundId::AKU56,           BoundId::THM_MN,
    BoundId::COR_MN_P1,      BoundId::THM_NN,            BoundId::COR_TN,          BoundId::THM_NKN,
    BoundId::COR_TKN,        BoundId::THM_MKN,           BoundId::LEMMA31_EXPLICIT, BoundId::COR_TKN_SIMPLIFIED,
    BoundId::COR_TKN_REDUCED, BoundId::WEIL};

std::string to_string(BoundId id);
std::optional<BoundId> parse_bound_id(const std::string& name);

/// Bounds with an explicit constant can be violated; the others only report.
bool is_explicit(BoundId id);

enum class Quantity { M, N, T };
Quantity quantity_of(BoundId id);

enum class Verdict { HOLDS, VIOLATED, REPORT_ONLY, NOT_APPLICABLE };
std::string to_string(Verdict v);

/// Exact values for one (p, k, n).
struct ExactInputs {
  std::optional<double> M;
  std::optional<std::uint64_t> N;
  std::optional<std::uint64_t> T;
};

struct BoundEvaluation {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  BoundId id = BoundId::KARATSUBA;
  bool applicable = false;
  std::string reason;
  double bound_value = 0.0;
  double exact_value = 0.0;
  /// exact_value / bound_value
  double ratio = 0.0;
  Verdict verdict = Verdict::NOT_APPLICABLE;
};

/// Slack added to explicit-constant comparisons.
inline constexpr double kBoundSlack = 1e-9;

/// Applicability of a bound's hypotheses to (p, k, n), with a reason.
std::pair<bool, std::string> applicability(const PrimeContext& ctx, const ExponentPair& pair, BoundId id);

/// Right-hand side; meaningful only when applicable. For LEMMA31_EXPLICIT
/// this is (s p^2 T / (p - 1))^{1/4}, compared with M.
double bound_value(const PrimeContext& ctx, const ExponentPair& pair, BoundId id, const ExactInputs& in);

BoundEvaluation evaluate(const PrimeContext& ctx, const ExponentPair& pair, BoundId id, const ExactInputs& in);

/// Every bound in kAllBounds. Throws MissingInput when an applicable bound
/// needs a value that is absent.
std::vector<BoundEvaluation> evaluate_all(const PrimeContext& ctx, const ExponentPair& pair,
                                          const ExactInputs& in);

/// Like evaluate_all but skips bounds whose inputs are absent.
std::vector<BoundEvaluation> evaluate_available(const PrimeContext& ctx, const ExponentPair& pair,
                                                const ExactInputs& in);

/// sup of exact / bound over applicable rows with this id. Throws
/// NoApplicableInstance when there is none.
double empirical_constant(const std::vector<BoundEvaluation>& rows, BoundId id);

}  // namespace binsum
