#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rkmatch/cli.hpp"
#include "rkmatch/datagen.hpp"
#include "rkmatch/match.hpp"

namespace fs = std::filesystem;
namespace cli = rk::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const cli::Engines& engines = cli::Engines::defaults()) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, engines);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("parse_size") {
  CHECK(cli::parse_size("0") == 0);
  CHECK(cli::parse_size("512") == 512);
  CHECK(cli::parse_size("512B") == 512);
  CHECK(cli::parse_size("10KB") == 10240);
  CHECK(cli::parse_size("2MB") == 2u << 20);
  CHECK(cli::parse_size("2mb") == 2u << 20);
  CHECK(cli::parse_size("1GB") == 1u << 30);
  CHECK_THROWS_AS(cli::parse_size(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_size("MB"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_size("3TB"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_size("-1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_size("99999999999999999999"), std::invalid_argument);
}

TEST_CASE("split_patterns") {
  CHECK(cli::split_patterns("ab") == std::vector<std::string>{"ab"});
  CHECK(cli::split_patterns("ab\nba\n") == std::vector<std::string>{"ab", "ba"});
  CHECK_THROWS_AS(cli::split_patterns(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::split_patterns("\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::split_patterns("ab\n\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::split_patterns("\nab"), std::invalid_argument);
}

TEST_CASE("gen writes exact sizes deterministically") {
  TempDir dir("rkmatch_cli_gen");
  const auto a = run({"gen", "--seed", "42", "--size", "2MB", "--out", dir.file("a.bin")});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out.find("2097152 bytes") != std::string::npos);
  CHECK(a.out.find("seed 42") != std::string::npos);
  CHECK(fs::file_size(dir.file("a.bin")) == 2u << 20);

  run({"gen", "--seed", "42", "--size", "2MB", "--out", dir.file("b.bin")});
  CHECK(rk::read_bytes(dir.file("a.bin")) == rk::read_bytes(dir.file("b.bin")));
  CHECK(rk::read_bytes(dir.file("a.bin")) == rk::generate(rk::DnaSpec{42, 2u << 20}));

  CHECK(run({"gen", "--size", "0", "--out", dir.file("z.bin")}).code == cli::kExitOk);
  CHECK(fs::file_size(dir.file("z.bin")) == 0);

  CHECK(run({"gen", "--size", "12XB", "--out", dir.file("x.bin")}).code == cli::kExitError);
  CHECK(run({"gen", "--size", "1KB", "--alphabet", "AA", "--out", dir.file("x.bin")}).code ==
        cli::kExitError);
  CHECK(run({"gen", "--size", "1KB", "--out", dir.file("missing/dir/x.bin")}).code ==
        cli::kExitError);
  CHECK(run({"gen", "--size", "1KB"}).code == cli::kExitError);
}

TEST_CASE("search golden suite") {
  TempDir dir("rkmatch_cli_golden");
  std::ifstream in(std::string(RKMATCH_GOLDEN_DIR) + "/search_cases.json");
  REQUIRE(in);
  const auto cases = nlohmann::json::parse(in);
  REQUIRE(cases.size() >= 20);

  for (const auto& c : cases) {
    const std::string name = c["name"];
    CAPTURE(name);
    const std::string text_path = dir.file("text.bin");
    fs::remove(text_path);
    if (!c["text"].is_null()) {
      rk::write_bytes(text_path, c["text"].get<std::string>());
    }
    const std::string pattern_path = dir.file("patterns.txt");
    if (c.contains("pattern_file")) {
      rk::write_bytes(pattern_path, c["pattern_file"].get<std::string>());
    }
    std::vector<std::string> args{"search", text_path};
    for (const auto& a : c["args"]) {
      const std::string s = a;
      args.push_back(s == "{patterns}" ? pattern_path : s);
    }
    const Outcome got = run(args);
    CHECK(got.code == c["exit"].get<int>());
    CHECK(got.out == c["stdout"].get<std::string>());
    if (got.code == cli::kExitError) {
      CHECK_FALSE(got.err.empty());
    }
  }
}

TEST_CASE("search listings are identical across engines") {
  TempDir dir("rkmatch_cli_engines");
  const std::string text = rk::generate(rk::DnaSpec{42, 200'000});
  rk::write_bytes(dir.file("t.bin"), text);
  rk::write_bytes(dir.file("p.txt"), "ACGTA\nTTT\n" + text.substr(5000, 9) + "\n");

  const auto seq = run({"search", dir.file("t.bin"), "--pattern-file", dir.file("p.txt"),
                        "--engine", "seq"});
  const auto par = run({"search", dir.file("t.bin"), "--pattern-file", dir.file("p.txt"),
                        "--engine", "par", "--workers", "8", "--block-dim", "256"});
  const auto naive = run({"search", dir.file("t.bin"), "--pattern-file", dir.file("p.txt"),
                          "--engine", "naive"});
  CHECK(seq.code == cli::kExitOk);
  CHECK(seq.out == par.out);
  CHECK(seq.out == naive.out);
  const auto expected = rk::search_naive(text, "TTT").offsets.size() +
                        rk::search_naive(text, "ACGTA").offsets.size() +
                        rk::search_naive(text, text.substr(5000, 9)).offsets.size();
  CHECK(seq.out.find("MATCHES " + std::to_string(expected) + "\n") != std::string::npos);

  CHECK(run({"search", dir.file("t.bin"), "--pattern", "zz"}).code == cli::kExitNoMatch);
}

TEST_CASE("verify passes on planted corpora and lists every planted offset") {
  TempDir dir("rkmatch_cli_verify");
  const std::string pattern = "GATTACAGATTACA";
  const std::vector<std::size_t> planted = {0, 977, 5000, 12345, 65536 - 14};
  const std::string text = rk::plant(rk::generate(rk::DnaSpec{7, 65536}), pattern, planted);
  rk::write_bytes(dir.file("t.bin"), text);

  const auto r = run({"verify", dir.file("t.bin"), "--pattern", pattern, "--workers", "4",
                      "--block-dim", "64", "--list"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  for (const std::size_t x : planted) {
    CHECK(r.out.find("MATCH 0 " + std::to_string(x) + "\n") != std::string::npos);
  }
  CHECK(r.out.find("PATTERN 0 matches=") != std::string::npos);
}

TEST_CASE("verify fails when an engine is corrupted") {
  TempDir dir("rkmatch_cli_verify_bad");
  rk::write_bytes(dir.file("t.bin"), "abababab");

  cli::Engines broken = cli::Engines::defaults();
  broken.parallel = [](std::string_view t, std::string_view p, const cli::EngineOptions&) {
    auto r = rk::search_naive(t, p);
    if (!r.offsets.empty()) r.offsets.pop_back();  // drop the last match
    r.offsets.push_back(1);
    std::sort(r.offsets.begin(), r.offsets.end());
    return r;
  };
  const auto r = run({"verify", dir.file("t.bin"), "--pattern", "ab"}, broken);
  CHECK(r.code == cli::kExitNoMatch);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("DIFF 0 par missing=[6] extra=[1]") != std::string::npos);

  CHECK(run({"verify", dir.file("t.bin"), "--pattern", "ab"}).code == cli::kExitOk);
  CHECK(run({"verify", dir.file("nope.bin"), "--pattern", "ab"}).code == cli::kExitError);
}

TEST_CASE("bench writes csv and json reports") {
  TempDir dir("rkmatch_cli_bench");
  const auto r = run({"bench", "--axis", "block_dim", "--values", "32,64,128,256,512,1024",
                      "--size", "64KB", "--pattern-len", "7", "--workers", "2", "--out",
                      dir.file("report")});
  REQUIRE(r.code == cli::kExitOk);
  const std::string csv = rk::read_bytes(dir.file("report.csv"));
  CHECK(csv.rfind("axis_value,t_seq_ms,t_par_ms,speedup\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const auto json = nlohmann::json::parse(rk::read_bytes(dir.file("report.json")));
  CHECK(json["rows"].size() == 6);
  CHECK(json["axis"] == "block_dim");
  CHECK(r.out.find("block_dim") != std::string::npos);

  const auto lens = run({"bench", "--axis", "pattern_length", "--values", "25,50,100,200,800",
                         "--size", "32KB", "--format", "csv"});
  REQUIRE(lens.code == cli::kExitOk);
  CHECK(std::count(lens.out.begin(), lens.out.end(), '\n') == 6);

  const auto one = run({"bench", "--axis", "workers", "--values", "1", "--size", "16KB",
                        "--format", "json"});
  REQUIRE(one.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(one.out)["rows"][0]["workers"] == 1);
}

TEST_CASE("bench falls back to the axis defaults") {
  const auto r = run({"bench", "--axis", "block_dim", "--size", "8KB", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("bench error paths") {
  CHECK(run({"bench", "--axis", "cores", "--values", "1"}).code == cli::kExitError);
  CHECK(run({"bench", "--axis", "workers", "--values", "1,,2", "--size", "1KB"}).code ==
        cli::kExitError);
  CHECK(run({"bench", "--axis", "pattern_length", "--values", "2048", "--size", "1KB"}).code ==
        cli::kExitError);
  CHECK(run({"bench", "--axis", "workers", "--values", "1", "--reps", "2"}).code ==
        cli::kExitError);
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
