#include "binsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "binsum/errors.hpp"

namespace binsum {
namespace {

struct BoundInfo {
  BoundId id;
  const char* name;
  Quantity quantity;
  bool explicit_constant;
  bool two_parameter;  // stated for F_{k,n}; otherwise only for k = 1
};

constexpr BoundInfo kInfo[] = {
    {BoundId::KARATSUBA, "KARATSUBA", Quantity::M, true, false},
    {BoundId::AKULINICHEV, "AKULINICHEV", Quantity::M, true, false},
    {BoundId::AKU56, "AKU56", Quantity::M, true, false},
    {BoundId::THM_MN, "THM_MN", Quantity::M, false, false},
    {BoundId::COR_MN_P1, "COR_MN_P1", Quantity::M, false, false},
    {BoundId::THM_NN, "THM_NN", Quantity::N, false, false},
    {BoundId::COR_TN, "COR_TN", Quantity::T, false, false},
    {BoundId::THM_NKN, "THM_NKN", Quantity::N, false, true},
    {BoundId::COR_TKN, "COR_TKN", Quantity::T, false, true},
    {BoundId::THM_MKN, "THM_MKN", Quantity::M, false, true},
    {BoundId::LEMMA31_EXPLICIT, "LEMMA31_EXPLICIT", Quantity::M, true, true},
    {BoundId::COR_TKN_SIMPLIFIED, "COR_TKN_SIMPLIFIED", Quantity::T, false, true},
    {BoundId::COR_TKN_REDUCED, "COR_TKN_REDUCED", Quantity::T, false, true},
    {BoundId::WEIL, "WEIL", Quantity::M, false, true},
};

const BoundInfo& info(BoundId id) {
  for (const auto& i : kInfo)
    if (i.id == id) return i;
  throw Error("unknown bound id");
}

bool needs_T(BoundId id) { return quantity_of(id) == Quantity::T || id == BoundId::LEMMA31_EXPLICIT; }

bool has_input(BoundId id, const ExactInputs& in) {
  const bool quantity_ok = [&] {
    switch (quantity_of(id)) {
      case Quantity::M: return in.M.has_value();
      case Quantity::N: return in.N.has_value();
      case Quantity::T: return in.T.has_value();
    }
    return false;
  }();
  return quantity_ok && (!needs_T(id) || in.T.has_value());
}

double exact_of(BoundId id, const ExactInputs& in) {
  switch (quantity_of(id)) {
    case Quantity::M: return *in.M;
    case Quantity::N: return static_cast<double>(*in.N);
    case Quantity::T: return static_cast<double>(*in.T);
  }
  return 0.0;
}

}  // namespace

std::string to_string(BoundId id) { return info(id).name; }

std::optional<BoundId> parse_bound_id(const std::string& name) {
  for (const auto& i : kInfo)
    if (name == i.name) return i.id;
  return std::nullopt;
}

bool is_explicit(BoundId id) { return info(id).explicit_constant; }

Quantity quantity_of(BoundId id) { return info(id).quantity; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HOLDS: return "HOLDS";
    case Verdict::VIOLATED: return "VIOLATED";
    case Verdict::REPORT_ONLY: return "REPORT_ONLY";
    case Verdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
  }
  return "?";
}

std::pair<bool, std::string> applicability(const PrimeContext& ctx, const ExponentPair& pair, BoundId id) {
  const std::uint32_t p = ctx.p();
  const double half_sqrt_n = 0.5 * std::sqrt(static_cast<double>(pair.n));
  if (pair.k == pair.n) return {false, "k = n"};
  if (pair.k >= p || pair.n >= p) return {false, "exponent not below p"};
  if (!info(id).two_parameter && pair.k != 1) return {false, "stated for k = 1 only"};
  switch (id) {
    case BoundId::AKU56:
    case BoundId::COR_MN_P1:
      if ((p - 1) % pair.n != 0) return {false, "n does not divide p - 1"};
      return {true, "n | p - 1"};
    case BoundId::THM_NKN:
    case BoundId::COR_TKN:
    case BoundId::THM_MKN:
    case BoundId::COR_TKN_SIMPLIFIED:
      if (pair.r > half_sqrt_n) return {false, "r > 0.5 sqrt(n)"};
      return {true, "r <= 0.5 sqrt(n)"};
    case BoundId::COR_TKN_REDUCED: {
      const ExponentPair red = reduce_exponents(ctx, pair);
      if (red.r > half_sqrt_n) return {false, "r* > 0.5 sqrt(n)"};
      return {true, "r* <= 0.5 sqrt(n)"};
    }
    default:
      return {true, "k != n"};
  }
}

double bound_value(const PrimeContext& ctx, const ExponentPair& pair, BoundId id, const ExactInputs& in) {
  const double p = ctx.p(), k = pair.k, n = pair.n, r = pair.r, s = pair.s;
  const double kn_r = k * n / r;
  switch (id) {
    case BoundId::KARATSUBA: return std::pow(n - 1, 0.25) * std::pow(p, 0.75);
    case BoundId::AKULINICHEV: return p / std::sqrt(static_cast<double>(gcd_u64(pair.n, ctx.p() - 1)));
    case BoundId::AKU56: return std::pow(p, 5.0 / 6.0);
    case BoundId::THM_MN: return std::pow(p, 0.75) + std::cbrt(n) * std::pow(p, 2.0 / 3.0);
    case BoundId::COR_MN_P1: return std::pow(p, 0.8);
    case BoundId::THM_NN: return p + std::pow(n, 4.0 / 3.0) * std::pow(p, 2.0 / 3.0);
    case BoundId::COR_TN: return p * p + std::pow(n, 4.0 / 3.0) * std::pow(p, 5.0 / 3.0);
    case BoundId::THM_NKN: return k * std::sqrt(n) * p / r + std::pow(kn_r, 4.0 / 3.0) * std::pow(p, 2.0 / 3.0);
    case BoundId::COR_TKN:
      return k * std::sqrt(n) * s * p * p / r + std::pow(kn_r, 4.0 / 3.0) * s * std::pow(p, 5.0 / 3.0);
    case BoundId::THM_MKN:
      return std::pow(k, 0.25) * std::pow(n, 0.125) * std::sqrt(s) * std::pow(p, 0.75) / std::pow(r, 0.25) +
             std::cbrt(kn_r) * std::sqrt(s) * std::pow(p, 2.0 / 3.0);
    case BoundId::LEMMA31_EXPLICIT:
      if (!in.T) throw MissingInput("LEMMA31_EXPLICIT needs T");
      return std::pow(s * p * p * static_cast<double>(*in.T) / (p - 1), 0.25);
    case BoundId::COR_TKN_SIMPLIFIED:
      return k * std::sqrt(n) * p * p + std::pow(k * n, 4.0 / 3.0) * std::pow(r, -1.0 / 3.0) * std::pow(p, 5.0 / 3.0);
    case BoundId::COR_TKN_REDUCED: {
      const double rs = reduce_exponents(ctx, pair).r;
      return k * std::sqrt(n * rs) * s * p * p / std::pow(r, 1.5) +
             std::pow(k * n * rs / (r * r), 4.0 / 3.0) * s * std::pow(p, 5.0 / 3.0);
    }
    case BoundId::WEIL: return (n - 1) * std::sqrt(p);
  }
  throw Error("unknown bound id");
}

BoundEvaluation evaluate(const PrimeContext& ctx, const ExponentPair& pair, BoundId id, const ExactInputs& in) {
  BoundEvaluation ev;
  ev.p = ctx.p();
  ev.k = pair.k;
  ev.n = pair.n;
  ev.id = id;
  auto [ok, reason] = applicability(ctx, pair, id);
  ev.applicable = ok;
  ev.reason = std::move(reason);
  if (!ok) return ev;
  if (!has_input(id, in)) throw MissingInput(to_string(id) + " needs an exact value that was not supplied");
  ev.bound_value = bound_value(ctx, pair, id, in);
  ev.exact_value = exact_of(id, in);
  ev.ratio = ev.exact_value / ev.bound_value;
  if (is_explicit(id))
    ev.verdict = ev.exact_value <= ev.bound_value + kBoundSlack ? Verdict::HOLDS : Verdict::VIOLATED;
  else
    ev.verdict = Verdict::REPORT_ONLY;
  return ev;
}

std::vector<BoundEvaluation> evaluate_all(const PrimeContext& ctx, const ExponentPair& pair,
                                          const ExactInputs& in) {
  std::vector<BoundEvaluation> out;
  for (BoundId id : kAllBounds) out.push_back(evaluate(ctx, pair, id, in));
  return out;
}

std::vector<BoundEvaluation> evaluate_available(const PrimeContext& ctx, const ExponentPair& pair,
                                                const ExactInputs& in) {
  std::vector<BoundEvaluation> out;
  for (BoundId id : kAllBounds)
    if (has_input(id, in)) out.push_back(evaluate(ctx, pair, id, in));
  return out;
}

double empirical_constant(const std::vector<BoundEvaluation>& rows, BoundId id) {
  double sup = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& ev : rows)
    if (ev.id == id && ev.applicable) {
      sup = std::max(sup, ev.ratio);
      any = true;
    }
  if (!any) throw NoApplicableInstance("no applicable instance for " + to_string(id));
  return sup;
}

}  // namespace binsum
