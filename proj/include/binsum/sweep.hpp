#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "binsum/bifactor.hpp"
#include "binsum/modarith.hpp"

namespace binsum {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class Task { sum, max, count, factor, verify };

std::string to_string(Task task);
std::optional<Task> parse_task(const std::string& name);

/// Largest p a task is run for in sweeps.
std::uint32_t scale_cap(Task task);

enum class Selector { k1_only, all_kn, explicit_list };

struct SweepSpec {
  std::uint32_t p_min = 3;
  std::uint32_t p_max = 3;
  Selector selector = Selector::k1_only;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // explicit_list only
  std::vector<Task> tasks;
  std::string format = "json";
  std::string cache_dir;
  std::string out_dir;
  /// 0 means available parallelism; 1 is fully serial.
  int workers = 0;
  std::uint64_t seed = FactorOptions{}.seed;
};

/// Throws OutOfRange on an empty task list, p_min < 3, p_min > p_max or a
/// scale cap exceeded.
void validate(const SweepSpec& spec);

/// (k, n) instances run at p, in increasing (k, n) order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> instances(const SweepSpec& spec, std::uint32_t p);

/// Flat object of scalars: numbers, strings, booleans or null.
using Row = nlohmann::ordered_json;

/// Doubles are stored rounded to 12 significant digits.
double round12(double x);

/// Deterministic task payloads. verify has none and throws.
Row sum_payload(const PrimeContext& ctx, const ExponentPair& pair);
Row max_payload(const PrimeContext& ctx, const ExponentPair& pair);
Row count_payload(const PrimeContext& ctx, const ExponentPair& pair);
Row factor_payload(const PrimeContext& ctx, const ExponentPair& pair, std::uint64_t seed);
Row compute_payload(Task task, const PrimeContext& ctx, const ExponentPair& pair, std::uint64_t seed);

/// Single evaluation S(a, b).
Row sum_value_row(const PrimeContext& ctx, const ExponentPair& pair, std::int64_t a, std::int64_t b);

struct Record {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  Task task = Task::sum;
  Row payload;
};

struct SweepResult {
  /// Ordered by (p, task, k, n).
  std::vector<Record> records;
  std::size_t cache_hits = 0;
  std::size_t computed = 0;
};

/// Cache file for (p, task) under dir.
std::string cache_path(const std::string& dir, std::uint32_t p, Task task);

SweepResult run_sweep(const SweepSpec& spec);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string to_json(const Table& table);
std::string to_csv(const Table& table);
/// Cell text as it appears in CSV, before quoting.
std::string cell_text(const nlohmann::ordered_json& value);

/// One table per task present, with columns p, k, n then the payload.
std::vector<Table> record_tables(const SweepResult& result);

struct VerifyReport {
  std::vector<Table> tables;
  std::size_t violated = 0;
  std::size_t invariant_failures = 0;
  int exit_code() const { return violated + invariant_failures == 0 ? 0 : 1; }
};

/// Bound verdicts, invariant checks, factor claim tables and empirical
/// constants computed from the sweep records.
VerifyReport build_report(const SweepResult& result);

/// Writes each table as <dir>/<name>.<format>.
void write_tables(const std::vector<Table>& tables, const std::string& dir, const std::string& format);

/// All tables as one document on a stream-ready string.
std::string render(const std::vector<Table>& tables, const std::string& format);

}  // namespace binsum
