#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rkmatch/datagen.hpp"
#include "rkmatch/match.hpp"
#include "rkmatch/parallel.hpp"

namespace rk::bench {

// A matcher produced a different answer than its own earlier runs, the other
// engine, or the brute-force oracle.
class CorrectnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either the sequential matcher or search_parallel with a fixed config.
struct Engine {
  enum class Kind { sequential, parallel };

  Kind kind = Kind::sequential;
  LaunchConfig cfg;
  std::size_t workers = 1;

  static Engine sequential() { return {}; }
  static Engine parallel(const LaunchConfig& cfg, std::size_t workers) {
    return {Kind::parallel, cfg, workers};
  }

  MatchResult run(std::string_view text, std::string_view pattern) const;
};

struct Timing {
  double median_ms = 0.0;
  std::vector<double> samples_ms;
  MatchResult result;
};

// One untimed warmup, then `reps` timed runs on a monotonic clock. Throws
// CorrectnessError if any run disagrees with the warmup.
Timing time_search(const Engine& engine, std::string_view text, std::string_view pattern,
                   std::size_t reps);

double median(std::vector<double> samples);

// t_base / t_par. Throws std::invalid_argument unless both are positive.
double speedup(double t_base_ms, double t_par_ms);

enum class Axis { workers, pattern_length, file_size, block_dim };

std::string_view axis_name(Axis axis) noexcept;

// workers {1,2,4,8}; pattern_length {25,50,100,200,800};
// file_size {2MB,10MB,20MB,40MB}; block_dim {32,...,1024}.
std::vector<std::uint64_t> default_values(Axis axis);
// Throws std::invalid_argument for unknown names.
Axis parse_axis(std::string_view name);

struct PatternSpec {
  enum class Provenance { sampled, random };

  std::size_t length = 7;
  Provenance provenance = Provenance::sampled;
  std::uint64_t seed = 7;
};

std::string_view provenance_name(PatternSpec::Provenance p) noexcept;

// sampled: a substring of text at a seeded position. random: an independent
// draw from the corpus alphabet. Throws std::invalid_argument if a sampled
// pattern would not fit in text or the length is zero.
std::string make_pattern(std::string_view text, const PatternSpec& spec,
                         std::string_view alphabet);

struct SweepParams {
  DnaSpec corpus{42, std::size_t{20} << 20, "ACGT"};
  PatternSpec pattern;
  std::size_t reps = 3;
  std::size_t workers = 0;  // 0 selects the machine's worker capacity
  std::uint32_t block_dim = 256;
  std::size_t verify_samples = 4096;
};

struct BenchRow {
  std::uint64_t axis_value = 0;
  double t_seq_ms = 0.0;
  double t_par_ms = 0.0;
  double speedup = 0.0;
  std::size_t matches = 0;
  std::size_t workers = 0;
  LaunchConfig cfg;
};

struct BenchEnvironment {
  unsigned worker_capacity = 0;
  DnaSpec corpus;
  PatternSpec pattern;
  std::size_t reps = 0;
  std::size_t workers = 0;
  std::uint32_t block_dim = 0;
};

struct BenchReport {
  Axis axis = Axis::workers;
  std::vector<BenchRow> rows;
  BenchEnvironment environment;
};

unsigned worker_capacity() noexcept;

// One row per value with every other parameter held at `params`. Each row's
// results are checked against the oracle on every reported offset plus
// `verify_samples` seeded offsets; a mismatch throws CorrectnessError.
// Throws std::invalid_argument on empty values, reps < 3, or a value the
// corpus cannot accommodate.
BenchReport sweep(Axis axis, const std::vector<std::uint64_t>& values,
                  const SweepParams& params);

// Oracle cross-check used by sweep. Throws CorrectnessError on mismatch.
void verify_against_oracle(std::string_view text, std::string_view pattern,
                           const MatchResult& result, std::size_t samples,
                           std::uint64_t seed);

// Column order: axis_value,t_seq_ms,t_par_ms,speedup
inline constexpr std::string_view kCsvHeader = "axis_value,t_seq_ms,t_par_ms,speedup";

std::string to_csv(const BenchReport& report);
nlohmann::json to_json(const BenchReport& report);
void print_table(std::ostream& os, const BenchReport& report);

}  // namespace rk::bench
