#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rkmatch/hash.hpp"

namespace rk {

// Verified match offsets for one (text, pattern) search. Offsets are sorted,
// unique and each lies in [0, text_length - pattern_length].
struct MatchResult {
  std::size_t text_length = 0;
  std::size_t pattern_length = 0;
  std::vector<std::size_t> offsets;

  // Dense boolean form, one entry per text position.
  std::vector<bool> to_bitmap() const;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Counters for the hash-then-verify gate. Optional in every matcher.
struct SearchStats {
  std::uint64_t windows = 0;           // windows hashed
  std::uint64_t hash_hits = 0;         // windows whose hash equalled the pattern hash
  std::uint64_t verify_failures = 0;   // hash hits rejected by the byte compare

  SearchStats& operator+=(const SearchStats& other) noexcept {
    windows += other.windows;
    hash_hits += other.hash_hits;
    verify_failures += other.verify_failures;
    return *this;
  }
};

// Number of window offsets in [0, n - m], zero when m > n.
constexpr std::size_t window_count(std::size_t n, std::size_t m) noexcept {
  return m > n ? 0 : n - m + 1;
}

// Direct byte comparison at every offset. Ground truth for everything else.
MatchResult search_naive(std::string_view text, std::string_view pattern);

// Hashes the pattern once, then recomputes the hash of every window and
// byte-verifies on equality.
MatchResult search_sequential(std::string_view text, std::string_view pattern,
                              SearchStats* stats = nullptr);

// Distinct non-empty patterns grouped by length with a per-length hash index.
class PatternSet {
 public:
  // Duplicates collapse onto their first occurrence. Throws
  // std::invalid_argument on an empty list or an empty pattern.
  explicit PatternSet(std::vector<std::string> patterns);

  const std::vector<std::string>& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  const std::string& operator[](std::size_t i) const { return patterns_[i]; }

  // Index of the pattern with these bytes, or size() if absent.
  std::size_t index_of(std::string_view pattern) const;

  const std::map<std::size_t, std::vector<std::size_t>>& by_length() const noexcept {
    return by_length_;
  }

  // Pattern indices of length m with hash h; empty if none.
  const std::vector<std::size_t>& candidates(std::size_t m, HashValue h) const;

 private:
  std::vector<std::string> patterns_;
  std::map<std::size_t, std::vector<std::size_t>> by_length_;
  std::map<std::size_t, std::unordered_map<std::uint64_t, std::vector<std::size_t>>>
      hash_index_;
};

// One sliding pass per distinct pattern length. Returns one entry per pattern
// in PatternSet order.
std::vector<std::pair<std::size_t, MatchResult>> search_multi(std::string_view text,
                                                              const PatternSet& patterns,
                                                              SearchStats* stats = nullptr);

}  // namespace rk
