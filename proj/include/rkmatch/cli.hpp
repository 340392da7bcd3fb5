#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rkmatch/match.hpp"

namespace rk::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoMatch = 1;  // search: no match; verify: engines disagree
inline constexpr int kExitError = 2;

struct EngineOptions {
  std::size_t workers = 1;
  std::uint32_t block_dim = 256;
};

using MatchFn =
    std::function<MatchResult(std::string_view text, std::string_view pattern, const EngineOptions&)>;

// The matchers `verify` cross-checks. Replaceable so tests can inject a broken
// engine and watch verify fail.
struct Engines {
  MatchFn naive;
  MatchFn sequential;
  MatchFn parallel;

  static Engines defaults();
};

// "2MB", "10KB", "1GB", "512" or "512B"; suffixes are powers of 1024 and
// case-insensitive. Throws std::invalid_argument on malformed input.
std::uint64_t parse_size(std::string_view text);

// Newline-delimited patterns. A single trailing newline is allowed; any other
// empty line, or an empty file, throws std::invalid_argument.
std::vector<std::string> split_patterns(std::string_view contents);

// Entry point for the rkmatch tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Engines& engines = Engines::defaults());

}  // namespace rk::cli
