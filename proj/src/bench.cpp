#include "rkmatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace rk::bench {

MatchResult Engine::run(std::string_view text, std::string_view pattern) const {
  if (kind == Kind::sequential) {
    return search_sequential(text, pattern);
  }
  return search_parallel(text, pattern, cfg, workers);
}

double median(std::vector<double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("median: no samples");
  }
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid),
                   samples.end());
  const double upper = samples[mid];
  if (samples.size() % 2 == 1) {
    return upper;
  }
  const double lower =
      *std::max_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

Timing time_search(const Engine& engine, std::string_view text, std::string_view pattern,
                   std::size_t reps) {
  if (reps < 1) {
    throw std::invalid_argument("time_search: reps must be >= 1");
  }
  using clock = std::chrono::steady_clock;
  Timing timing;
  timing.result = engine.run(text, pattern);  // warmup
  timing.samples_ms.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = clock::now();
    MatchResult result = engine.run(text, pattern);
    const auto stop = clock::now();
    timing.samples_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    if (result != timing.result) {
      throw CorrectnessError("time_search: run " + std::to_string(r) +
                             " produced a different match set than the warmup run");
    }
  }
  timing.median_ms = median(timing.samples_ms);
  return timing;
}

double speedup(double t_base_ms, double t_par_ms) {
  if (!(t_base_ms > 0.0) || !(t_par_ms > 0.0)) {
    throw std::invalid_argument("speedup: times must be positive");
  }
  return t_base_ms / t_par_ms;
}

std::string_view axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::workers:
      return "workers";
    case Axis::pattern_length:
      return "pattern_length";
    case Axis::file_size:
      return "file_size";
    case Axis::block_dim:
      return "block_dim";
  }
  return "unknown";
}

std::vector<std::uint64_t> default_values(Axis axis) {
  constexpr std::uint64_t kMiB = 1 << 20;
  switch (axis) {
    case Axis::workers:
      return {1, 2, 4, 8};
    case Axis::pattern_length:
      return {25, 50, 100, 200, 800};
    case Axis::file_size:
      return {2 * kMiB, 10 * kMiB, 20 * kMiB, 40 * kMiB};
    case Axis::block_dim:
      return {32, 64, 128, 256, 512, 1024};
  }
  return {};
}

Axis parse_axis(std::string_view name) {
  for (const Axis a : {Axis::workers, Axis::pattern_length, Axis::file_size, Axis::block_dim}) {
    if (axis_name(a) == name) {
      return a;
    }
  }
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                              "' (expected workers, pattern_length, file_size or block_dim)");
}

std::string_view provenance_name(PatternSpec::Provenance p) noexcept {
  return p == PatternSpec::Provenance::sampled ? "sampled" : "random";
}

std::string make_pattern(std::string_view text, const PatternSpec& spec,
                         std::string_view alphabet) {
  if (spec.length == 0) {
    throw std::invalid_argument("make_pattern: pattern length must be >= 1");
  }
  if (spec.provenance == PatternSpec::Provenance::random) {
    return generate(DnaSpec{spec.seed, spec.length, std::string(alphabet)});
  }
  if (spec.length > text.size()) {
    throw std::invalid_argument("make_pattern: pattern length " + std::to_string(spec.length) +
                                " exceeds text length " + std::to_string(text.size()));
  }
  SplitMix64 rng(spec.seed);
  const std::size_t pos = rng.next() % window_count(text.size(), spec.length);
  return std::string(text.substr(pos, spec.length));
}

unsigned worker_capacity() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

void verify_against_oracle(std::string_view text, std::string_view pattern,
                           const MatchResult& result, std::size_t samples,
                           std::uint64_t seed) {
  const std::size_t m = pattern.size();
  const std::size_t windows = window_count(text.size(), m);
  auto matches_at = [&](std::size_t x) {
    return std::memcmp(text.data() + x, pattern.data(), m) == 0;
  };
  if (result.text_length != text.size() || result.pattern_length != m) {
    throw CorrectnessError("oracle check: result describes a different text or pattern");
  }
  for (std::size_t i = 0; i < result.offsets.size(); ++i) {
    const std::size_t x = result.offsets[i];
    if (x >= windows || !matches_at(x) || (i > 0 && result.offsets[i - 1] >= x)) {
      throw CorrectnessError("oracle check: reported offset " + std::to_string(x) +
                             " is not a valid match");
    }
  }
  if (windows == 0) {
    return;
  }
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t x = rng.next() % windows;
    const bool reported = std::binary_search(result.offsets.begin(), result.offsets.end(), x);
    if (reported != matches_at(x)) {
      throw CorrectnessError("oracle check: offset " + std::to_string(x) +
                             (reported ? " reported but does not match"
                                       : " matches but was not reported"));
    }
  }
}

BenchReport sweep(Axis axis, const std::vector<std::uint64_t>& values,
                  const SweepParams& params) {
  if (values.empty()) {
    throw std::invalid_argument("sweep: no axis values given");
  }
  if (params.reps < 3) {
    throw std::invalid_argument("sweep: reps must be >= 3");
  }
  params.corpus.validate();

  BenchReport report;
  report.axis = axis;
  report.environment = {worker_capacity(), params.corpus,   params.pattern,
                        params.reps,       params.workers ? params.workers : worker_capacity(),
                        params.block_dim};

  std::string text;
  std::optional<std::size_t> text_length;
  for (const std::uint64_t value : values) {
    DnaSpec corpus = params.corpus;
    PatternSpec pattern_spec = params.pattern;
    std::size_t workers = report.environment.workers;
    std::uint32_t block_dim = params.block_dim;
    switch (axis) {
      case Axis::workers:
        if (value < 1) throw std::invalid_argument("sweep: workers must be >= 1");
        workers = static_cast<std::size_t>(value);
        break;
      case Axis::pattern_length:
        pattern_spec.length = static_cast<std::size_t>(value);
        break;
      case Axis::file_size:
        corpus.length = static_cast<std::size_t>(value);
        break;
      case Axis::block_dim:
        if (value < 1 || value > kMaxBlockDim) {
          throw std::invalid_argument("sweep: block_dim " + std::to_string(value) +
                                      " outside [1, 1024]");
        }
        block_dim = static_cast<std::uint32_t>(value);
        break;
    }
    if (pattern_spec.length > corpus.length) {
      throw std::invalid_argument("sweep: pattern length " + std::to_string(pattern_spec.length) +
                                  " exceeds corpus length " + std::to_string(corpus.length));
    }
    if (text_length != corpus.length) {
      text = generate(corpus);
      text_length = corpus.length;
    }
    const std::string pattern = make_pattern(text, pattern_spec, corpus.alphabet);
    const LaunchConfig cfg = plan_launch(text.size(), pattern.size(), block_dim);

    const Timing seq = time_search(Engine::sequential(), text, pattern, params.reps);
    const Timing par = time_search(Engine::parallel(cfg, workers), text, pattern, params.reps);
    if (seq.result != par.result) {
      throw CorrectnessError("sweep: sequential and parallel engines disagree at " +
                             std::string(axis_name(axis)) + "=" + std::to_string(value));
    }
    verify_against_oracle(text, pattern, seq.result, params.verify_samples, value);

    BenchRow row;
    row.axis_value = value;
    row.t_seq_ms = seq.median_ms;
    row.t_par_ms = par.median_ms;
    row.speedup = speedup(row.t_seq_ms, row.t_par_ms);
    row.matches = seq.result.offsets.size();
    row.workers = workers;
    row.cfg = cfg;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string to_csv(const BenchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : report.rows) {
    out += std::to_string(row.axis_value) + ',' + format_double(row.t_seq_ms) + ',' +
           format_double(row.t_par_ms) + ',' + format_double(row.speedup) + '\n';
  }
  return out;
}

nlohmann::json to_json(const BenchReport& report) {
  using nlohmann::json;
  const auto& env = report.environment;
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"axis_value", row.axis_value},
                    {"t_seq_ms", row.t_seq_ms},
                    {"t_par_ms", row.t_par_ms},
                    {"speedup", row.speedup},
                    {"matches", row.matches},
                    {"workers", row.workers},
                    {"block_dim", row.cfg.block_dim},
                    {"grid", {row.cfg.grid.x, row.cfg.grid.y, row.cfg.grid.z}},
                    {"total_threads", row.cfg.total_threads()}});
  }
  return {
      {"axis", axis_name(report.axis)},
      {"rows", std::move(rows)},
      {"environment",
       {{"worker_capacity", env.worker_capacity},
        {"corpus", {{"seed", env.corpus.seed},
                    {"length", env.corpus.length},
                    {"alphabet", env.corpus.alphabet}}},
        {"pattern", {{"length", env.pattern.length},
                     {"provenance", provenance_name(env.pattern.provenance)},
                     {"seed", env.pattern.seed}}},
        {"repetitions", env.reps},
        {"warmup_runs", 1},
        {"statistic", "median"},
        {"workers", env.workers},
        {"block_dim", env.block_dim},
        {"timing_scope", "hashing, matching and merge; excludes corpus generation and I/O"},
        {"workers_axis_meaning", "worker capacity of the CPU pool, standing in for device cores"}}},
  };
}

void print_table(std::ostream& os, const BenchReport& report) {
  os << std::setw(14) << axis_name(report.axis) << std::setw(14) << "t_seq_ms"
     << std::setw(14) << "t_par_ms" << std::setw(12) << "speedup" << std::setw(12)
     << "matches" << '\n';
  os << std::fixed;
  for (const auto& row : report.rows) {
    os << std::setw(14) << row.axis_value << std::setw(14) << std::setprecision(3)
       << row.t_seq_ms << std::setw(14) << row.t_par_ms << std::setw(12)
       << std::setprecision(4) << row.speedup << std::setw(12) << row.matches << '\n';
  }
  os << std::defaultfloat;
}

}  // namespace rk::bench
