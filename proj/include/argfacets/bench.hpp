#pragma once

// Benchmark harness: per (instance, semantics), time extension enumeration
// and facet computation independently under a cooperative deadline.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "argfacets/facets.hpp"
#include "argfacets/io.hpp"
#include "argfacets/search.hpp"

namespace argfacets {

enum class BenchStatus { ok, timeout_enum, timeout_facets, error };

inline std::string_view to_string(BenchStatus s) {
  switch (s) {
    case BenchStatus::ok: return "ok";
    case BenchStatus::timeout_enum: return "timeout_enum";
    case BenchStatus::timeout_facets: return "timeout_facets";
    case BenchStatus::error: return "error";
  }
  return "?";
}

struct BenchRow {
  std::string instance;
  Semantics semantics = Semantics::stab;
  std::size_t n_args = 0;
  std::size_t n_attacks = 0;
  std::size_t n_extensions = 0;  // lower bound when !exhausted
  bool exhausted = false;
  std::optional<std::size_t> n_facets;
  double t_enum_ms = 0;
  double t_facets_ms = 0;
  BenchStatus status = BenchStatus::ok;
};

struct BenchOptions {
  std::chrono::milliseconds timeout{60'000};
  std::optional<std::size_t> max_models;
  unsigned workers = 1;
};

namespace detail {
inline double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}
}  // namespace detail

inline BenchRow bench_framework(const ArgumentationFramework& af, std::string instance,
                                Semantics semantics, const BenchOptions& options) {
  BenchRow row;
  row.instance = std::move(instance);
  row.semantics = semantics;
  row.n_args = af.size();
  row.n_attacks = af.attack_count();

  auto start = Clock::now();
  auto result = enumerate(af, semantics, Constraints::none(af),
                          Budget{options.max_models, options.timeout});
  row.t_enum_ms = detail::elapsed_ms(start);
  row.n_extensions = result.extensions.size();
  row.exhausted = result.exhausted;

  start = Clock::now();
  Reasoner reasoner(af, semantics, Clock::now() + options.timeout);
  auto report = facet_report(reasoner, Constraints::none(af));
  row.t_facets_ms = detail::elapsed_ms(start);
  if (report.complete) row.n_facets = report.facets.size();

  if (!report.complete) {
    row.status = BenchStatus::timeout_facets;
  } else if (result.timed_out) {
    row.status = BenchStatus::timeout_enum;
  }
  return row;
}

inline BenchRow bench_file(const std::string& path, Semantics semantics,
                           const BenchOptions& options) {
  try {
    return bench_framework(load_framework(path), path, semantics, options);
  } catch (const Error&) {
    BenchRow row;
    row.instance = path;
    row.semantics = semantics;
    row.status = BenchStatus::error;
    return row;
  }
}

/// Framework files (.apx, .tgf, .af, .i23) directly inside dir, sorted by path.
inline std::vector<std::string> list_instances(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto path = entry.path().string();
    if (format_from_path(path)) out.push_back(path);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One row per (instance, semantics), instance-major. Workers each take whole
/// rows; the output order does not depend on the worker count.
inline std::vector<BenchRow> run_bench(const std::vector<std::string>& instances,
                                       const std::vector<Semantics>& semantics,
                                       const BenchOptions& options) {
  std::vector<BenchRow> rows(instances.size() * semantics.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++)
      rows[i] = bench_file(instances[i / semantics.size()], semantics[i % semantics.size()], options);
  };
  const auto n = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(rows.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  return rows;
}

inline constexpr const char* kBenchCsvHeader =
    "instance,semantics,n_args,n_attacks,n_extensions,exhausted,n_facets,t_enum_ms,t_facets_ms,status";

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << detail::csv_field(r.instance) << ',' << to_string(r.semantics) << ',' << r.n_args << ','
        << r.n_attacks << ',' << r.n_extensions << ',' << (r.exhausted ? "true" : "false") << ',';
    if (r.n_facets) out << *r.n_facets;
    out << ',' << std::fixed << std::setprecision(3) << r.t_enum_ms << ',' << r.t_facets_ms << ','
        << to_string(r.status) << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace argfacets
