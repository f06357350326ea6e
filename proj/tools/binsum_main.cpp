// binsum: exact computations for binomial exponential sums over F_p.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binsum/bifactor.hpp"
#include "binsum/errors.hpp"
#include "binsum/expsum.hpp"
#include "binsum/solcount.hpp"
#include "binsum/sweep.hpp"

using namespace binsum;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::int64_t p = 0;
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  std::int64_t k = 1;
  std::int64_t n = 0;
  std::int64_t a = 1;
  std::int64_t b = 1;
  bool k1_only = false;
  bool all_kn = false;
  std::string tasks;
  std::string format;
  std::string out;
  std::string cache;
  int workers = 0;
  std::uint64_t seed = FactorOptions{}.seed;
  std::string scan = "orbit";
};

// Single-instance commands print text unless a format was asked for.
void emit_single(const Options& o, const Row& row, const std::string& text) {
  if (o.format.empty()) {
    std::cout << text;
    return;
  }
  Table t{"result", {}, {row}};
  for (const auto& [key, _] : row.items()) t.columns.push_back(key);
  std::cout << (o.format == "csv" ? to_csv(t) : to_json(t) + "\n");
}

ExponentPair single_pair(const PrimeContext& ctx, const Options& o) {
  if (o.n == 0) throw OutOfRange("--n is required");
  return exponent_pair(ctx, o.k, o.n);
}

std::int64_t single_prime(const Options& o) {
  if (o.p == 0) throw OutOfRange("--p is required");
  return o.p;
}

int cmd_sum(const Options& o) {
  const PrimeContext ctx(single_prime(o));
  const ExponentPair pair = single_pair(ctx, o);
  const Row r = sum_value_row(ctx, pair, o.a, o.b);
  std::ostringstream os;
  os.precision(12);
  os << "S = " << r["re"].get<double>() << (r["im"].get<double>() < 0 ? " - " : " + ")
     << std::abs(r["im"].get<double>()) << "i\n"
     << "|S| = " << r["magnitude"].get<double>() << "\nerr = " << r["err"].get<double>() << '\n';
  emit_single(o, r, os.str());
  return 0;
}

int cmd_max(const Options& o) {
  const PrimeContext ctx(single_prime(o));
  if (ctx.p() > scale_cap(Task::max)) throw OutOfRange("max is capped at p <= 101");
  const ExponentPair pair = single_pair(ctx, o);
  const ScanMode mode = o.scan == "full" ? ScanMode::full : ScanMode::orbit;
  const MaxSumResult m = max_sum(ctx, pair, mode);
  Row r{{"p", ctx.p()}, {"k", pair.k}, {"n", pair.n}, {"scan", o.scan}, {"M", round12(m.m_value)},
        {"a", m.a},     {"b", m.b},     {"err", round12(m.err)}, {"scanned", m.scanned}};
  std::ostringstream os;
  os.precision(12);
  os << "M = " << m.m_value << " at (a, b) = (" << m.a << ", " << m.b << ")\nerr = " << m.err
     << "\nscanned = " << m.scanned << '\n';
  emit_single(o, r, os.str());
  return 0;
}

int cmd_count(const Options& o) {
  const PrimeContext ctx(single_prime(o));
  if (ctx.p() > scale_cap(Task::count)) throw OutOfRange("count is capped at p <= 127");
  const ExponentPair pair = single_pair(ctx, o);
  if (pair.k == pair.n) throw DegenerateFamily("k = n makes F_{k,n} vanish");
  Row r{{"p", ctx.p()}, {"k", pair.k}, {"n", pair.n}};
  const Row payload = count_payload(ctx, pair);
  for (const auto& [key, v] : payload.items()) r[key] = v;
  std::ostringstream os;
  os << "T = " << r["T"] << "\nN = " << r["N"] << '\n';
  if (!r["A0"].is_null()) os << "A0 = " << r["A0"] << '\n';
  emit_single(o, r, os.str());
  return 0;
}

int cmd_factor(const Options& o) {
  const PrimeContext ctx(single_prime(o));
  if (ctx.p() > scale_cap(Task::factor)) throw OutOfRange("factor is capped at p <= 67");
  if (o.k == o.n) throw DegenerateFamily("k = n makes F_{k,n} vanish");
  const ExponentPair pair = single_pair(ctx, o);
  Row r{{"p", ctx.p()}, {"k", pair.k}, {"n", pair.n}};
  const Row payload = factor_payload(ctx, pair, o.seed);
  for (const auto& [key, v] : payload.items()) r[key] = v;
  std::ostringstream os;
  os << r["factorization"].get<std::string>() << '\n'
     << "trivial: " << r["trivial"].get<std::string>() << '\n'
     << "nontrivial: " << r["nontrivial"].get<std::string>() << '\n';
  emit_single(o, r, os.str());
  return r["round_trip"].get<bool>() ? 0 : kExitFailure;
}

SweepSpec sweep_spec(const Options& o, const std::string& default_tasks) {
  SweepSpec spec;
  if (o.p != 0) {
    spec.p_min = spec.p_max = static_cast<std::uint32_t>(o.p);
  } else {
    if (o.p_max == 0) throw OutOfRange("--p or --pmax is required");
    spec.p_min = static_cast<std::uint32_t>(o.p_min == 0 ? 3 : o.p_min);
    spec.p_max = static_cast<std::uint32_t>(o.p_max);
  }
  if (o.k1_only && o.all_kn) throw OutOfRange("--k1-only and --all-kn exclude each other");
  if (o.all_kn) {
    spec.selector = Selector::all_kn;
  } else if (o.n != 0) {
    spec.selector = Selector::explicit_list;
    spec.pairs = {{static_cast<std::uint32_t>(o.k), static_cast<std::uint32_t>(o.n)}};
  } else {
    spec.selector = Selector::k1_only;
  }
  std::stringstream ss(o.tasks.empty() ? default_tasks : o.tasks);
  for (std::string name; std::getline(ss, name, ',');) {
    const auto t = parse_task(name);
    if (!t) throw OutOfRange("unknown task '" + name + "'");
    spec.tasks.push_back(*t);
  }
  spec.format = o.format.empty() ? "json" : o.format;
  spec.cache_dir = o.cache;
  spec.out_dir = o.out;
  spec.workers = o.workers;
  spec.seed = o.seed;
  validate(spec);
  return spec;
}

void emit_tables(const SweepSpec& spec, const std::vector<Table>& tables) {
  if (spec.out_dir.empty())
    std::cout << render(tables, spec.format);
  else
    write_tables(tables, spec.out_dir, spec.format);
}

int cmd_sweep(const Options& o) {
  const SweepSpec spec = sweep_spec(o, "sum,max,count");
  const SweepResult result = run_sweep(spec);
  std::vector<Table> tables = record_tables(result);
  int code = 0;
  if (std::find(spec.tasks.begin(), spec.tasks.end(), Task::verify) != spec.tasks.end()) {
    VerifyReport report = build_report(result);
    for (auto& t : report.tables) tables.push_back(std::move(t));
    code = report.exit_code();
  }
  emit_tables(spec, tables);
  std::cerr << "computed " << result.computed << ", cached " << result.cache_hits << '\n';
  return code;
}

int cmd_verify(const Options& o) {
  const SweepSpec spec = sweep_spec(o, "count,max");
  const SweepResult result = run_sweep(spec);
  VerifyReport report = build_report(result);
  std::vector<Table> tables = record_tables(result);
  for (auto& t : report.tables) tables.push_back(std::move(t));
  emit_tables(spec, tables);
  for (const auto& t : report.tables) {
    if (t.name != "factor_summary" && t.name != "quadratic") continue;
    std::cerr << "# " << t.name << '\n' << to_csv(t);
  }
  std::cerr << "violated " << report.violated << ", invariant failures " << report.invariant_failures << '\n';
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for binomial exponential sums over F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--p", o.p, "prime modulus");
  app.add_option("--pmin", o.p_min, "smallest prime of a sweep (default 3)");
  app.add_option("--pmax", o.p_max, "largest prime of a sweep");
  app.add_option("--k", o.k, "first exponent (default 1)");
  app.add_option("--n", o.n, "second exponent");
  app.add_option("--a", o.a, "coefficient of x^k (default 1)");
  app.add_option("--b", o.b, "coefficient of x^n (default 1)");
  app.add_flag("--k1-only", o.k1_only, "sweep k = 1, 2 <= n < p");
  app.add_flag("--all-kn", o.all_kn, "sweep all 1 <= k < n < p");
  app.add_option("--tasks", o.tasks, "comma list of sum,max,count,factor,verify");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "directory for report files");
  app.add_option("--cache", o.cache, "directory of cached results");
  app.add_option("--workers", o.workers, "worker threads, 0 for all, 1 for serial");
  app.add_option("--seed", o.seed, "seed for randomized factoring");

  auto* sum = app.add_subcommand("sum", "evaluate S(a, b)");
  auto* max = app.add_subcommand("max", "maximum of |S(a, b)| over ab != 0");
  max->add_option("--scan", o.scan, "orbit or full")->check(CLI::IsMember({"orbit", "full"}));
  auto* count = app.add_subcommand("count", "solution counts T and N");
  auto* fac = app.add_subcommand("factor", "factor F_n or F_{k,n} over F_p");
  auto* sweep = app.add_subcommand("sweep", "run tasks over a prime range");
  auto* verify = app.add_subcommand("verify", "sweep and check bounds and invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sum) return cmd_sum(o);
    if (*max) return cmd_max(o);
    if (*count) return cmd_count(o);
    if (*fac) return cmd_factor(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
  } catch (const CompositeModulus& e) {
    std::cerr << "CompositeModulus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateFamily& e) {
    std::cerr << "DegenerateFamily: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    std::cerr << "IdentityViolation: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
