#include "rkmatch/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "rkmatch/bench.hpp"
#include "rkmatch/datagen.hpp"
#include "rkmatch/parallel.hpp"

namespace rk::cli {

namespace {

// Raised for bad input that is detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternArgs {
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
};

struct EngineArgs {
  std::string engine = "seq";
  std::size_t workers = 0;
  std::uint32_t block_dim = 256;
};

struct SearchArgs {
  std::string text_path;
  PatternArgs patterns;
  EngineArgs engine;
  bool list = false;
};

struct GenArgs {
  std::uint64_t seed = 42;
  std::string size = "0";
  std::string alphabet = "ACGT";
  std::string out;
};

struct BenchArgs {
  std::string axis;
  std::string values;
  std::string size = "20MB";
  std::size_t pattern_len = 7;
  std::string pattern_source = "sampled";
  std::uint64_t seed = 42;
  std::uint64_t pattern_seed = 7;
  std::size_t reps = 3;
  std::size_t workers = 0;
  std::uint32_t block_dim = 256;
  std::string out;
  std::string format = "table";
};

void add_pattern_options(CLI::App& cmd, PatternArgs& args) {
  auto* inline_opt = cmd.add_option("--pattern", args.pattern, "Pattern bytes");
  auto* file_opt =
      cmd.add_option("--pattern-file", args.pattern_file, "Newline-delimited pattern file");
  inline_opt->excludes(file_opt);
}

void add_engine_options(CLI::App& cmd, EngineArgs& args, bool with_engine) {
  if (with_engine) {
    cmd.add_option("--engine", args.engine, "Matcher: naive, seq or par")
        ->check(CLI::IsMember({"naive", "seq", "par"}));
  }
  cmd.add_option("--workers", args.workers, "Worker count for the parallel engine")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  cmd.add_option("--block-dim", args.block_dim, "Threads per block (1..1024)")
      ->check(CLI::Range(1u, kMaxBlockDim));
}

EngineOptions resolve(const EngineArgs& args) {
  return {args.workers ? args.workers : bench::worker_capacity(), args.block_dim};
}

std::string read_input(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw UsageError("no such file: " + path);
  }
  return read_bytes(path);
}

PatternSet load_patterns(const PatternArgs& args) {
  if (args.pattern) {
    if (args.pattern->empty()) {
      throw UsageError("pattern must be non-empty");
    }
    return PatternSet({*args.pattern});
  }
  if (args.pattern_file) {
    try {
      return PatternSet(split_patterns(read_input(*args.pattern_file)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(*args.pattern_file + ": " + e.what());
    }
  }
  throw UsageError("one of --pattern or --pattern-file is required");
}

std::vector<MatchResult> run_engine(const MatchFn& fn, std::string_view text,
                                    const PatternSet& patterns, const EngineOptions& opts) {
  std::vector<MatchResult> results;
  results.reserve(patterns.size());
  for (const auto& p : patterns.patterns()) {
    results.push_back(fn(text, p, opts));
  }
  return results;
}

// (offset, pattern index) ascending.
void print_listing(std::ostream& out, const std::vector<MatchResult>& results) {
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const std::size_t x : results[i].offsets) {
      rows.emplace_back(x, i);
    }
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [x, i] : rows) {
    out << "MATCH " << i << ' ' << x << '\n';
  }
}

std::size_t total_matches(const std::vector<MatchResult>& results) {
  std::size_t n = 0;
  for (const auto& r : results) {
    n += r.offsets.size();
  }
  return n;
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  DnaSpec spec{args.seed, static_cast<std::size_t>(parse_size(args.size)), args.alphabet};
  write_bytes(args.out, generate(spec));
  out << "wrote " << spec.length << " bytes (seed " << spec.seed << ") to " << args.out << '\n';
  return kExitOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out, const Engines& engines) {
  const PatternSet patterns = load_patterns(args.patterns);
  const std::string text = read_input(args.text_path);
  const EngineOptions opts = resolve(args.engine);

  std::vector<MatchResult> results;
  if (args.engine.engine == "naive") {
    results = run_engine(engines.naive, text, patterns, opts);
  } else if (args.engine.engine == "par") {
    results = run_engine(engines.parallel, text, patterns, opts);
  } else {
    for (auto& [idx, r] : search_multi(text, patterns)) {
      results.push_back(std::move(r));
    }
  }
  print_listing(out, results);
  const std::size_t count = total_matches(results);
  out << "MATCHES " << count << '\n';
  return count > 0 ? kExitOk : kExitNoMatch;
}

void print_diff(std::ostream& out, std::size_t idx, std::string_view engine,
                const MatchResult& expected, const MatchResult& actual) {
  std::vector<std::size_t> missing;
  std::vector<std::size_t> extra;
  std::set_difference(expected.offsets.begin(), expected.offsets.end(), actual.offsets.begin(),
                      actual.offsets.end(), std::back_inserter(missing));
  std::set_difference(actual.offsets.begin(), actual.offsets.end(), expected.offsets.begin(),
                      expected.offsets.end(), std::back_inserter(extra));
  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (const std::size_t x : v) {
      s += (s.empty() ? "" : ",") + std::to_string(x);
    }
    return s;
  };
  out << "DIFF " << idx << ' ' << engine << " missing=[" << join(missing) << "] extra=["
      << join(extra) << "]\n";
}

int cmd_verify(const SearchArgs& args, std::ostream& out, const Engines& engines) {
  const PatternSet patterns = load_patterns(args.patterns);
  const std::string text = read_input(args.text_path);
  const EngineOptions opts = resolve(args.engine);

  const auto naive = run_engine(engines.naive, text, patterns, opts);
  const auto sequential = run_engine(engines.sequential, text, patterns, opts);
  const auto parallel = run_engine(engines.parallel, text, patterns, opts);
  std::vector<MatchResult> multi;
  for (auto& [idx, r] : search_multi(text, patterns)) {
    multi.push_back(std::move(r));
  }

  const std::pair<std::string_view, const std::vector<MatchResult>*> checked[] = {
      {"seq", &sequential}, {"par", &parallel}, {"multi", &multi}};
  bool pass = true;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (const auto& [name, results] : checked) {
      if ((*results)[i] != naive[i]) {
        pass = false;
        print_diff(out, i, name, naive[i], (*results)[i]);
      }
    }
  }
  if (args.list) {
    print_listing(out, naive);
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out << "PATTERN " << i << " matches=" << naive[i].offsets.size() << '\n';
  }
  out << (pass ? "PASS" : "FAIL") << ' ' << total_matches(naive) << " matches, workers="
      << opts.workers << " block_dim=" << opts.block_dim << '\n';
  return pass ? kExitOk : kExitNoMatch;
}

std::vector<std::uint64_t> parse_values(const std::string& csv) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string_view item(csv.data() + start, comma - start);
    if (item.empty()) {
      throw UsageError("--values contains an empty item");
    }
    values.push_back(parse_size(item));
    start = comma + 1;
  }
  return values;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const bench::Axis axis = bench::parse_axis(args.axis);
  const auto values =
      args.values.empty() ? bench::default_values(axis) : parse_values(args.values);

  bench::SweepParams params;
  params.corpus = DnaSpec{args.seed, static_cast<std::size_t>(parse_size(args.size)), "ACGT"};
  params.pattern.length = args.pattern_len;
  params.pattern.seed = args.pattern_seed;
  params.pattern.provenance = args.pattern_source == "random"
                                  ? bench::PatternSpec::Provenance::random
                                  : bench::PatternSpec::Provenance::sampled;
  params.reps = args.reps;
  params.workers = args.workers;
  params.block_dim = args.block_dim;

  const bench::BenchReport report = bench::sweep(axis, values, params);
  if (!args.out.empty()) {
    const std::string csv = bench::to_csv(report);
    write_bytes(args.out + ".csv", csv);
    write_bytes(args.out + ".json", bench::to_json(report).dump(2) + "\n");
  }
  if (args.format == "csv") {
    out << bench::to_csv(report);
  } else if (args.format == "json") {
    out << bench::to_json(report).dump(2) << '\n';
  } else {
    bench::print_table(out, report);
  }
  return kExitOk;
}

}  // namespace

Engines Engines::defaults() {
  return {
      [](std::string_view t, std::string_view p, const EngineOptions&) {
        return search_naive(t, p);
      },
      [](std::string_view t, std::string_view p, const EngineOptions&) {
        return search_sequential(t, p);
      },
      [](std::string_view t, std::string_view p, const EngineOptions& o) {
        if (p.size() > t.size()) {
          return MatchResult{t.size(), p.size(), {}};
        }
        return search_parallel(t, p, plan_launch(t.size(), p.size(), o.block_dim), o.workers);
      },
  };
}

std::uint64_t parse_size(std::string_view text) {
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) {
    ++digits;
  }
  if (digits == 0) {
    throw std::invalid_argument("invalid size '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + digits, value);
  if (ec != std::errc{}) {
    throw std::invalid_argument("invalid size '" + std::string(text) + "'");
  }
  std::string suffix(text.substr(digits));
  std::transform(suffix.begin(), suffix.end(), suffix.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  unsigned shift = 0;
  if (suffix == "KB" || suffix == "K") {
    shift = 10;
  } else if (suffix == "MB" || suffix == "M") {
    shift = 20;
  } else if (suffix == "GB" || suffix == "G") {
    shift = 30;
  } else if (!suffix.empty() && suffix != "B") {
    throw std::invalid_argument("invalid size suffix in '" + std::string(text) + "'");
  }
  if (shift > 0 && value > (~std::uint64_t{0} >> shift)) {
    throw std::invalid_argument("size '" + std::string(text) + "' overflows");
  }
  return value << shift;
}

std::vector<std::string> split_patterns(std::string_view contents) {
  if (contents.empty()) {
    throw std::invalid_argument("pattern file is empty");
  }
  if (contents.back() == '\n') {
    contents.remove_suffix(1);
  }
  std::vector<std::string> patterns;
  std::size_t line = 1;
  std::size_t start = 0;
  while (start <= contents.size()) {
    const std::size_t nl = std::min(contents.find('\n', start), contents.size());
    if (nl == start) {
      throw std::invalid_argument("blank line " + std::to_string(line) + " in pattern file");
    }
    patterns.emplace_back(contents.substr(start, nl - start));
    start = nl + 1;
    ++line;
  }
  return patterns;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Engines& engines) {
  CLI::App app{"Rabin-Karp exact string matcher with a grid/block/thread parallel engine",
               "rkmatch"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random DNA corpus");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--size", gen.size, "Byte count, e.g. 2MB (powers of 1024)");
  gen_cmd->add_option("--alphabet", gen.alphabet, "Symbols to draw from");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "List every match of the pattern(s)");
  search_cmd->add_option("text", search.text_path, "Text file (raw bytes)")->required();
  add_pattern_options(*search_cmd, search.patterns);
  add_engine_options(*search_cmd, search.engine, true);

  SearchArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check the naive, sequential and parallel engines");
  verify_cmd->add_option("text", verify.text_path, "Text file (raw bytes)")->required();
  add_pattern_options(*verify_cmd, verify.patterns);
  add_engine_options(*verify_cmd, verify.engine, false);
  verify_cmd->add_flag("--list", verify.list, "Also print the MATCH listing");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time sequential vs parallel over a sweep");
  bench_cmd->add_option("--axis", bench_args.axis, "workers, pattern_length, file_size or block_dim")
      ->required()
      ->check(CLI::IsMember({"workers", "pattern_length", "file_size", "block_dim"}));
  bench_cmd->add_option("--values", bench_args.values,
                        "Comma-separated axis values (default depends on --axis)");
  bench_cmd->add_option("--size", bench_args.size, "Corpus size (powers of 1024)");
  bench_cmd->add_option("--pattern-len", bench_args.pattern_len, "Pattern length")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--pattern-source", bench_args.pattern_source, "sampled or random")
      ->check(CLI::IsMember({"sampled", "random"}));
  bench_cmd->add_option("--seed", bench_args.seed, "Corpus seed");
  bench_cmd->add_option("--pattern-seed", bench_args.pattern_seed, "Pattern seed");
  bench_cmd->add_option("--reps", bench_args.reps, "Timed repetitions (>= 3)")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000}));
  bench_cmd->add_option("--workers", bench_args.workers, "Worker count (0 = capacity)");
  bench_cmd->add_option("--block-dim", bench_args.block_dim, "Threads per block (1..1024)")
      ->check(CLI::Range(1u, kMaxBlockDim));
  bench_cmd->add_option("--out", bench_args.out, "Write <out>.csv and <out>.json");
  bench_cmd->add_option("--format", bench_args.format, "Stdout format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen_cmd->parsed()) {
      return cmd_gen(gen, out);
    }
    if (search_cmd->parsed()) {
      return cmd_search(search, out, engines);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify, out, engines);
    }
    return cmd_bench(bench_args, out);
  } catch (const bench::CorrectnessError& e) {
    err << "rkmatch: correctness failure: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "rkmatch: error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace rk::cli
