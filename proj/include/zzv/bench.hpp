#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zzv {

struct BenchRow {
  std::size_t m = 0;
  std::string op;  // switch-mixed, switch-updown, expand-in, ..., init
  std::uint64_t time_ns = 0;
  std::uint64_t chain_adds = 0;
};

struct BenchConfig {
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;  // target m values
  std::size_t reps = 20;           // samples per (m, op)
  bool with_init = true;
};

// One row per sample.  Filtrations are random walks sized so that m matches
// the target (expansions start from m - 2).
std::vector<BenchRow> run_bench(const BenchConfig& cfg);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Median of the rows matching (m, op); field picks time or adds.
double median_time(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op);
double median_adds(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op);
std::uint64_t max_adds(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op);

}  // namespace zzv
