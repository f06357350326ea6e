#include "binsum/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "binsum/bounds.hpp"
#include "binsum/errors.hpp"
#include "binsum/expsum.hpp"
#include "binsum/solcount.hpp"

namespace binsum {

using json = nlohmann::ordered_json;

namespace {

constexpr Task kTaskOrder[] = {Task::sum, Task::max, Task::count, Task::factor, Task::verify};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<Task> normalized_tasks(const std::vector<Task>& tasks) {
  std::vector<Task> out;
  for (Task t : kTaskOrder)
    if (std::find(tasks.begin(), tasks.end(), t) != tasks.end()) out.push_back(t);
  return out;
}

std::string join_factors(std::uint32_t p, const std::vector<Factor>& factors) {
  if (factors.empty()) return "";
  Factorization f;
  f.factors = factors;
  return to_string(p, f);
}

std::string join_degrees(const std::vector<Factor>& factors) {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += ';';
    s += std::to_string(f.poly.total_degree());
  }
  return s;
}

using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

struct CacheFile {
  std::map<std::pair<std::uint32_t, std::uint32_t>, json> records;
};

CacheFile load_cache(const std::string& path, std::uint32_t p, Task task, std::uint64_t seed) {
  CacheFile out;
  std::ifstream in(path);
  if (!in) return out;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return out;
  if (doc.value("version", "") != kToolkitVersion || doc.value("task", "") != to_string(task) ||
      doc.value("p", 0u) != p || doc.value("seed", std::uint64_t{0}) != seed)
    return out;
  for (const auto& rec : doc["records"])
    out.records[{rec.at("k").get<std::uint32_t>(), rec.at("n").get<std::uint32_t>()}] = rec.at("payload");
  return out;
}

void store_cache(const std::string& path, std::uint32_t p, Task task, std::uint64_t seed, const CacheFile& file) {
  json doc;
  doc["version"] = kToolkitVersion;
  doc["task"] = to_string(task);
  doc["p"] = p;
  doc["seed"] = seed;
  doc["timestamp"] = utc_timestamp();
  json recs = json::array();
  for (const auto& [kn, payload] : file.records)
    recs.push_back(json{{"k", kn.first}, {"n", kn.second}, {"payload", payload}});
  doc["records"] = std::move(recs);
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump(1) << '\n';
    if (!out) throw Error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string to_string(Task task) {
  switch (task) {
    case Task::sum: return "sum";
    case Task::max: return "max";
    case Task::count: return "count";
    case Task::factor: return "factor";
    case Task::verify: return "verify";
  }
  return "?";
}

std::optional<Task> parse_task(const std::string& name) {
  for (Task t : kTaskOrder)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::uint32_t scale_cap(Task task) {
  switch (task) {
    case Task::factor: return 67;
    case Task::max: return 101;
    case Task::sum:
    case Task::count: return 127;
    case Task::verify: break;
  }
  return kMaxPrime;
}

void validate(const SweepSpec& spec) {
  if (spec.tasks.empty()) throw OutOfRange("no tasks given");
  if (spec.p_min < 3) throw OutOfRange("p_min must be at least 3");
  if (spec.p_min > spec.p_max) throw OutOfRange("p_min exceeds p_max");
  for (Task t : spec.tasks)
    if (spec.p_max > scale_cap(t))
      throw OutOfRange("task " + to_string(t) + " is capped at p <= " + std::to_string(scale_cap(t)));
  if (spec.format != "json" && spec.format != "csv") throw OutOfRange("format must be json or csv");
  if (spec.workers < 0) throw OutOfRange("workers must be non-negative");
  if (spec.selector == Selector::explicit_list) {
    if (spec.pairs.empty()) throw OutOfRange("no exponent pairs given");
    for (const auto& [k, n] : spec.pairs) {
      if (k == n) throw DegenerateFamily("k = n = " + std::to_string(k) + " is degenerate");
      if (k < 1 || n < 1) throw OutOfRange("exponents must be positive");
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> instances(const SweepSpec& spec, std::uint32_t p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  switch (spec.selector) {
    case Selector::k1_only:
      for (std::uint32_t n = 2; n < p; ++n) out.emplace_back(1, n);
      break;
    case Selector::all_kn:
      for (std::uint32_t k = 1; k < p; ++k)
        for (std::uint32_t n = k + 1; n < p; ++n) out.emplace_back(k, n);
      break;
    case Selector::explicit_list:
      for (const auto& kn : spec.pairs)
        if (kn.first < p && kn.second < p) out.push_back(kn);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Row sum_payload(const PrimeContext& ctx, const ExponentPair& pair) {
  const MomentResult fourth = fourth_moment(ctx, pair);
  const MomentResult second = second_moment(ctx, pair);
  Row r;
  r["fourth_moment"] = round12(fourth.value);
  r["fourth_err"] = round12(fourth.err);
  r["fourth_quotient"] = fourth.quotient;
  r["second_moment"] = round12(second.value);
  r["second_err"] = round12(second.err);
  r["second_quotient"] = second.quotient;
  return r;
}

Row max_payload(const PrimeContext& ctx, const ExponentPair& pair) {
  const MaxSumResult m = max_sum(ctx, pair, ScanMode::orbit);
  Row r;
  r["M"] = round12(m.m_value);
  r["a"] = m.a;
  r["b"] = m.b;
  r["err"] = round12(m.err);
  r["scanned"] = m.scanned;
  return r;
}

Row count_payload(const PrimeContext& ctx, const ExponentPair& pair) {
  Row r;
  std::uint64_t T = 0;
  if (pair.k == 1) {
    const Decomposition d = decompose_T(ctx, pair.n);
    T = d.T;
    r["T"] = d.T;
    r["N"] = d.N;
    r["A0"] = d.A0;
  } else {
    const CountReport c = count_N(ctx, pair);
    T = c.T;
    r["T"] = c.T;
    r["N"] = *c.N;
    r["A0"] = nullptr;
  }
  const RootExtractionReport re = root_extraction(ctx, pair);
  r["R"] = re.R;
  r["s"] = re.s;
  r["root_extraction_holds"] = re.holds;
  const ExponentPair red = reduce_exponents(ctx, pair);
  r["k_reduced"] = red.k;
  r["n_reduced"] = red.n;
  r["T_reduced"] = red == pair ? T : count_T(ctx, red).T;
  return r;
}

Row factor_payload(const PrimeContext& ctx, const ExponentPair& pair, std::uint64_t seed) {
  const Family family = pair.k == 1 ? Family::Fn : Family::Fkn;
  const BivariatePolynomial F = family == Family::Fn ? build_Fn(ctx, pair.n) : build_Fkn(ctx, pair);
  FactorOptions opts;
  opts.seed = seed;
  const Factorization f = factor(ctx, F, opts);
  const FactorReport rep = strip_trivial(ctx, pair, f, family);
  Row r;
  r["family"] = to_string(family);
  r["degree"] = F.total_degree();
  r["factorization"] = to_string(ctx.p(), f);
  r["trivial"] = join_factors(ctx.p(), rep.trivial);
  r["nontrivial"] = join_factors(ctx.p(), rep.nontrivial);
  r["nontrivial_count"] = rep.nontrivial.size();
  r["nontrivial_degrees"] = join_degrees(rep.nontrivial);
  r["min_nontrivial_degree"] = rep.min_nontrivial_degree ? json(*rep.min_nontrivial_degree) : json(nullptr);
  r["degree_bound"] = round12(rep.degree_bound_value);
  r["ratio"] = rep.ratio ? json(round12(*rep.ratio)) : json(nullptr);
  r["round_trip"] = expand(ctx.p(), f) == F;
  r["seed"] = seed;
  return r;
}

Row compute_payload(Task task, const PrimeContext& ctx, const ExponentPair& pair, std::uint64_t seed) {
  switch (task) {
    case Task::sum: return sum_payload(ctx, pair);
    case Task::max: return max_payload(ctx, pair);
    case Task::count: return count_payload(ctx, pair);
    case Task::factor: return factor_payload(ctx, pair, seed);
    case Task::verify: break;
  }
  throw Error("task " + to_string(task) + " has no payload");
}

Row sum_value_row(const PrimeContext& ctx, const ExponentPair& pair, std::int64_t a, std::int64_t b) {
  const SumValue v = eval_sum(ctx, pair, ctx.residue(a), ctx.residue(b));
  Row r;
  r["p"] = ctx.p();
  r["k"] = pair.k;
  r["n"] = pair.n;
  r["a"] = ctx.reduce(a);
  r["b"] = ctx.reduce(b);
  r["re"] = round12(v.value.real());
  r["im"] = round12(v.value.imag());
  r["magnitude"] = round12(std::abs(v.value));
  r["err"] = round12(v.err);
  return r;
}

std::string cache_path(const std::string& dir, std::uint32_t p, Task task) {
  return (std::filesystem::path(dir) / ("p" + std::to_string(p) + "_" + to_string(task) + ".json")).string();
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<Task> tasks = normalized_tasks(spec.tasks);

  struct Slot {
    std::uint32_t p;
    Task task;
    CacheFile cache;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> wanted;
  };
  struct Job {
    std::size_t slot;
    std::uint32_t k, n;
    json payload;
  };
  std::vector<Slot> slots;
  std::vector<Job> jobs;
  SweepResult result;

  for (std::uint32_t p = spec.p_min; p <= spec.p_max; ++p) {
    if (!is_prime(p)) continue;
    const auto kns = instances(spec, p);
    for (Task task : tasks) {
      if (task == Task::verify) continue;
      Slot slot{p, task, {}, kns};
      if (!spec.cache_dir.empty()) slot.cache = load_cache(cache_path(spec.cache_dir, p, task), p, task, spec.seed);
      for (const auto& [k, n] : kns) {
        if (slot.cache.records.count({k, n}))
          ++result.cache_hits;
        else
          jobs.push_back(Job{slots.size(), k, n, {}});
      }
      slots.push_back(std::move(slot));
    }
  }

  const int workers = spec.workers > 0 ? spec.workers : omp_get_max_threads();
  if (workers == 1) omp_set_num_threads(1);
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Job& job = jobs[static_cast<std::size_t>(i)];
    const Slot& slot = slots[job.slot];
    try {
      const PrimeContext ctx(slot.p);
      job.payload = compute_payload(slot.task, ctx, exponent_pair(ctx, job.k, job.n), spec.seed);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  result.computed = jobs.size();

  std::vector<bool> dirty(slots.size(), false);
  for (auto& job : jobs) {
    slots[job.slot].cache.records[{job.k, job.n}] = std::move(job.payload);
    dirty[job.slot] = true;
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const Slot& slot = slots[s];
    for (const auto& [k, n] : slot.wanted)
      result.records.push_back(Record{slot.p, k, n, slot.task, slot.cache.records.at({k, n})});
    if (dirty[s] && !spec.cache_dir.empty())
      store_cache(cache_path(spec.cache_dir, slot.p, slot.task), slot.p, slot.task, spec.seed, slot.cache);
  }
  return result;
}

std::string cell_text(const json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string to_json(const Table& table) {
  json arr = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (const auto& c : table.columns) obj[c] = row.contains(c) ? row.at(c) : json(nullptr);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_quote(table.columns[i]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const auto& c = table.columns[i];
      os << (i ? "," : "") << csv_quote(row.contains(c) ? cell_text(row.at(c)) : "");
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Table> record_tables(const SweepResult& result) {
  std::vector<Table> out;
  for (Task task : kTaskOrder) {
    Table t;
    t.name = to_string(task);
    for (const auto& rec : result.records) {
      if (rec.task != task) continue;
      if (t.columns.empty()) {
        t.columns = {"p", "k", "n"};
        for (const auto& [key, _] : rec.payload.items()) t.columns.push_back(key);
      }
      json row{{"p", rec.p}, {"k", rec.k}, {"n", rec.n}};
      for (const auto& [key, v] : rec.payload.items()) row[key] = v;
      t.rows.push_back(std::move(row));
    }
    if (!t.rows.empty()) out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct Inputs {
  const json* sum = nullptr;
  const json* max = nullptr;
  const json* count = nullptr;
  const json* factor = nullptr;
};

json claim_status(std::uint32_t p, std::uint32_t k, std::uint32_t n, const json& fac, std::string& expected) {
  const auto count = fac.at("nontrivial_count").get<std::size_t>();
  if (k == 1 && n <= 3) {
    expected = "empty";
    return count == 0 ? "confirmed" : "contradicts";
  }
  if (k == 1 && 2 * n == p + 1) {
    expected = "quadratic";
    if (count == 0) return "finding";
    const std::string degs = fac.at("nontrivial_degrees").get<std::string>();
    bool all2 = true;
    std::stringstream ss(degs);
    for (std::string d; std::getline(ss, d, ';');) all2 = all2 && d == "2";
    return all2 ? "confirmed" : "contradicts";
  }
  expected = "unique";
  if (count == 1) return "confirmed";
  return count == 0 ? "finding" : "contradicts";
}

}  // namespace

VerifyReport build_report(const SweepResult& result) {
  std::map<Key, Inputs> by_key;
  for (const auto& rec : result.records) {
    Inputs& in = by_key[{rec.p, rec.k, rec.n}];
    switch (rec.task) {
      case Task::sum: in.sum = &rec.payload; break;
      case Task::max: in.max = &rec.payload; break;
      case Task::count: in.count = &rec.payload; break;
      case Task::factor: in.factor = &rec.payload; break;
      case Task::verify: break;
    }
  }

  VerifyReport report;
  Table verdicts{"verdicts",
                 {"p", "k", "n", "bound_id", "applicable", "reason", "bound_value", "exact_value", "ratio", "verdict"},
                 {}};
  Table invariants{"invariants", {"p", "k", "n", "check", "holds", "detail"}, {}};
  Table claims{"factor_claims", {"p", "k", "n", "family", "nontrivial_count", "nontrivial_degrees", "expected", "status"}, {}};
  Table quadratic{"quadratic", {"p", "n", "nontrivial_count", "nontrivial_degrees", "all_quadratic"}, {}};
  std::vector<BoundEvaluation> evaluations;

  const auto check = [&](const Key& key, const std::string& name, bool holds, const std::string& detail) {
    invariants.rows.push_back(json{{"p", std::get<0>(key)},
                                   {"k", std::get<1>(key)},
                                   {"n", std::get<2>(key)},
                                   {"check", name},
                                   {"holds", holds},
                                   {"detail", detail}});
    if (!holds) ++report.invariant_failures;
  };

  for (const auto& [key, in] : by_key) {
    const auto [p, k, n] = key;
    const PrimeContext ctx(p);
    const ExponentPair pair = exponent_pair(ctx, k, n);

    if (in.sum) {
      const auto q2 = in.sum->at("second_quotient").get<std::uint64_t>();
      // x -> (x^k, x^n) is g-to-1 on F_p^*, so the sum is p^2 (1 + (p - 1) g); p^3 when g = 1.
      const std::uint64_t g = std::gcd(std::gcd(k, n), p - 1);
      const std::uint64_t expect = 1 + (p - 1) * g;
      check(key, "second_moment_orthogonality", q2 == expect,
            "quotient " + std::to_string(q2) + " vs " + std::to_string(expect));
    }
    if (in.sum && in.count) {
      const auto q4 = in.sum->at("fourth_quotient").get<std::uint64_t>();
      const auto T = in.count->at("T").get<std::uint64_t>();
      check(key, "fourth_moment_equals_p2_T", q4 == T, std::to_string(q4) + " vs " + std::to_string(T));
    }
    if (in.max) {
      const auto scanned = in.max->at("scanned").get<std::uint64_t>();
      const std::uint64_t expect = std::uint64_t{pair.s} * (p - 1);
      check(key, "orbit_count", scanned == expect, std::to_string(scanned) + " vs " + std::to_string(expect));
    }
    if (in.count) {
      const auto T = in.count->at("T").get<std::uint64_t>();
      if (!in.count->at("A0").is_null()) {
        const auto A0 = in.count->at("A0").get<std::uint64_t>();
        const auto N = in.count->at("N").get<std::uint64_t>();
        check(key, "T_decomposition", A0 + (p - 1) * N == T,
              std::to_string(A0) + " + " + std::to_string(p - 1) + "*" + std::to_string(N));
      }
      check(key, "root_extraction", in.count->at("root_extraction_holds").get<bool>(),
            "R " + in.count->at("R").dump());
      check(key, "T_reduction", in.count->at("T_reduced").get<std::uint64_t>() == T,
            "T_reduced " + in.count->at("T_reduced").dump());
    }
    if (in.factor) {
      check(key, "factor_round_trip", in.factor->at("round_trip").get<bool>(), "");
      std::string expected;
      const json status = claim_status(p, k, n, *in.factor, expected);
      claims.rows.push_back(json{{"p", p},
                                 {"k", k},
                                 {"n", n},
                                 {"family", in.factor->at("family")},
                                 {"nontrivial_count", in.factor->at("nontrivial_count")},
                                 {"nontrivial_degrees", in.factor->at("nontrivial_degrees")},
                                 {"expected", expected},
                                 {"status", status}});
      if (k == 1 && n > 3 && 2 * n == p + 1) {
        const std::string degs = in.factor->at("nontrivial_degrees").get<std::string>();
        bool all2 = !degs.empty();
        std::stringstream ss(degs);
        for (std::string d; std::getline(ss, d, ';');) all2 = all2 && d == "2";
        quadratic.rows.push_back(json{{"p", p},
                                      {"n", n},
                                      {"nontrivial_count", in.factor->at("nontrivial_count")},
                                      {"nontrivial_degrees", degs},
                                      {"all_quadratic", all2}});
      }
    }

    if (in.max || in.count) {
      ExactInputs exact;
      if (in.max) exact.M = in.max->at("M").get<double>();
      if (in.count) {
        exact.N = in.count->at("N").get<std::uint64_t>();
        exact.T = in.count->at("T").get<std::uint64_t>();
      }
      for (const auto& ev : evaluate_available(ctx, pair, exact)) {
        json row{{"p", p}, {"k", k}, {"n", n}, {"bound_id", to_string(ev.id)}, {"applicable", ev.applicable},
                 {"reason", ev.reason}};
        row["bound_value"] = ev.applicable ? json(round12(ev.bound_value)) : json(nullptr);
        row["exact_value"] = ev.applicable ? json(round12(ev.exact_value)) : json(nullptr);
        row["ratio"] = ev.applicable ? json(round12(ev.ratio)) : json(nullptr);
        row["verdict"] = to_string(ev.verdict);
        if (ev.verdict == Verdict::VIOLATED) ++report.violated;
        verdicts.rows.push_back(std::move(row));
        evaluations.push_back(ev);
      }
    }
  }

  if (!verdicts.rows.empty()) {
    Table constants{"empirical_constants",
                    {"bound_id", "explicit", "instances", "constant", "at_p", "at_k", "at_n"},
                    {}};
    for (BoundId id : kAllBounds) {
      std::size_t used = 0;
      const BoundEvaluation* best = nullptr;
      for (const auto& ev : evaluations)
        if (ev.id == id && ev.applicable) {
          ++used;
          if (!best || ev.ratio > best->ratio) best = &ev;
        }
      bool any = false;
      for (const auto& ev : evaluations) any = any || ev.id == id;
      if (!any) continue;
      json row{{"bound_id", to_string(id)}, {"explicit", is_explicit(id)}, {"instances", used}};
      if (best) {
        row["constant"] = round12(empirical_constant(evaluations, id));
        row["at_p"] = best->p;
        row["at_k"] = best->k;
        row["at_n"] = best->n;
      } else {
        row["constant"] = nullptr;
        row["at_p"] = nullptr;
        row["at_k"] = nullptr;
        row["at_n"] = nullptr;
      }
      constants.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(verdicts));
    report.tables.push_back(std::move(constants));
  }
  if (!claims.rows.empty()) {
    Table summary{"factor_summary", {"p", "family", "instances", "confirmed", "findings", "contradicts"}, {}};
    std::map<std::pair<std::uint32_t, std::string>, std::array<std::size_t, 4>> agg;
    for (const auto& row : claims.rows) {
      auto& a = agg[{row.at("p").get<std::uint32_t>(), row.at("family").get<std::string>()}];
      ++a[0];
      const auto status = row.at("status").get<std::string>();
      ++a[status == "confirmed" ? 1 : status == "finding" ? 2 : 3];
    }
    for (const auto& [pk, a] : agg)
      summary.rows.push_back(json{{"p", pk.first},
                                  {"family", pk.second},
                                  {"instances", a[0]},
                                  {"confirmed", a[1]},
                                  {"findings", a[2]},
                                  {"contradicts", a[3]}});
    report.tables.push_back(std::move(summary));
    report.tables.push_back(std::move(claims));
    if (!quadratic.rows.empty()) report.tables.push_back(std::move(quadratic));
  }
  if (!invariants.rows.empty()) report.tables.push_back(std::move(invariants));
  return report;
}

void write_tables(const std::vector<Table>& tables, const std::string& dir, const std::string& format) {
  std::filesystem::create_directories(dir);
  for (const auto& t : tables) {
    const auto path = std::filesystem::path(dir) / (t.name + "." + format);
    std::ofstream out(path);
    out << (format == "csv" ? to_csv(t) : to_json(t) + "\n");
    if (!out) throw Error("cannot write " + path.string());
  }
}

std::string render(const std::vector<Table>& tables, const std::string& format) {
  if (format == "csv") {
    std::string s;
    for (const auto& t : tables) s += "# " + t.name + "\n" + to_csv(t) + "\n";
    return s;
  }
  json doc = json::object();
  for (const auto& t : tables) doc[t.name] = json::parse(to_json(t));
  return doc.dump(2) + "\n";
}

}  // namespace binsum
