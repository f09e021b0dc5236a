#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "argfacets/bench.hpp"
#include "test_util.hpp"

using namespace argfacets;
using namespace argfacets::testing;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("argfacets_bench_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Bench, SmallInstances) {
  auto dir = scratch_dir("small");
  write(dir / "EX1.apx", kEx1Apx);
  write(dir / "FX.apx", render_framework(fx(), Format::apx));
  write(dir / "FXX.apx", render_framework(fxx(), Format::apx));
  write(dir / "notes.txt", "ignored");
  auto files = list_instances(dir.string());
  ASSERT_EQ(files.size(), 3U);
  auto rows = run_bench(files, {Semantics::stab}, BenchOptions{});
  ASSERT_EQ(rows.size(), 3U);
  std::map<std::string, std::size_t> facets;
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, BenchStatus::ok);
    EXPECT_TRUE(r.exhausted);
    ASSERT_TRUE(r.n_facets);
    facets[std::filesystem::path(r.instance).filename().string()] = *r.n_facets;
  }
  EXPECT_EQ(facets["EX1.apx"], 6U);
  EXPECT_EQ(facets["FX.apx"], 4U);
  EXPECT_EQ(facets["FXX.apx"], 4U);
}

TEST(Bench, EmptyDirectoryGivesHeaderOnly) {
  auto dir = scratch_dir("empty");
  std::ostringstream out;
  write_bench_csv(out, run_bench(list_instances(dir.string()), {Semantics::stab}, BenchOptions{}));
  EXPECT_EQ(out.str(), std::string(kBenchCsvHeader) + "\n");
}

TEST(Bench, ParseErrorIsARowNotAFailure) {
  auto dir = scratch_dir("broken");
  write(dir / "bad.apx", "att(a,b).");
  auto rows = run_bench(list_instances(dir.string()), {Semantics::adm}, BenchOptions{});
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].status, BenchStatus::error);
  EXPECT_FALSE(rows[0].n_facets);
}

TEST(Bench, MaxModelsLeavesFacetsExact) {
  auto row = bench_framework(pairs(16), "pairs16", Semantics::stab,
                             BenchOptions{std::chrono::seconds(60), 10000, 1});
  EXPECT_FALSE(row.exhausted);
  EXPECT_EQ(row.n_extensions, 10000U);
  EXPECT_EQ(row.n_facets, 32U);
  EXPECT_EQ(row.status, BenchStatus::ok);
}

TEST(Bench, EnumerationTimeoutIsRecorded) {
  auto row = bench_framework(pairs(26), "pairs26", Semantics::stab,
                             BenchOptions{std::chrono::milliseconds(100), std::nullopt, 1});
  EXPECT_EQ(row.status, BenchStatus::timeout_enum);
  EXPECT_FALSE(row.exhausted);
  EXPECT_EQ(row.n_facets, 52U);
}

TEST(Bench, CsvRowsAndWorkerIndependence) {
  auto dir = scratch_dir("csv");
  write(dir / "a,b.apx", kEx1Apx);
  write(dir / "FX.apx", render_framework(fx(), Format::apx));
  auto files = list_instances(dir.string());
  std::vector<Semantics> sems{Semantics::adm, Semantics::stab, Semantics::pref};
  auto serial = run_bench(files, sems, BenchOptions{});
  auto parallel = run_bench(files, sems, BenchOptions{std::chrono::seconds(60), std::nullopt, 4});
  ASSERT_EQ(serial.size(), 6U);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].instance, parallel[i].instance);
    EXPECT_EQ(serial[i].n_extensions, parallel[i].n_extensions);
    EXPECT_EQ(serial[i].n_facets, parallel[i].n_facets);
  }
  std::ostringstream out;
  write_bench_csv(out, serial);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  std::size_t count = 0, quoted = 0;
  while (std::getline(in, line)) {
    ++count;
    if (line.find("a,b.apx") != std::string::npos) {
      EXPECT_EQ(line.front(), '"');
      ++quoted;
    }
  }
  EXPECT_EQ(count, 6U);
  EXPECT_EQ(quoted, 3U);
}
