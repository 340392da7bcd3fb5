#include "rkmatch/match.hpp"

#include <cstring>
#include <stdexcept>

namespace rk {

namespace {

void require_pattern(std::string_view pattern, const char* who) {
  if (pattern.empty()) {
    throw std::invalid_argument(std::string(who) + ": pattern must be non-empty");
  }
}

bool bytes_equal(std::string_view text, std::size_t x, std::string_view pattern) noexcept {
  return std::memcmp(text.data() + x, pattern.data(), pattern.size()) == 0;
}

}  // namespace

std::vector<bool> MatchResult::to_bitmap() const {
  std::vector<bool> bits(text_length, false);
  for (const std::size_t x : offsets) {
    bits[x] = true;
  }
  return bits;
}

MatchResult search_naive(std::string_view text, std::string_view pattern) {
  require_pattern(pattern, "search_naive");
  MatchResult result{text.size(), pattern.size(), {}};
  const std::size_t windows = window_count(text.size(), pattern.size());
  for (std::size_t x = 0; x < windows; ++x) {
    bool equal = true;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (text[x + i] != pattern[i]) {
        equal = false;
        break;
      }
    }
    if (equal) {
      result.offsets.push_back(x);
    }
  }
  return result;
}

MatchResult search_sequential(std::string_view text, std::string_view pattern,
                              SearchStats* stats) {
  require_pattern(pattern, "search_sequential");
  const std::size_t m = pattern.size();
  MatchResult result{text.size(), m, {}};
  const HashValue hx = hash_full(pattern);
  const std::size_t windows = window_count(text.size(), m);

  SearchStats local;
  local.windows = windows;
  // Inclusive bound: the last window starts at n - m.
  for (std::size_t x = 0; x < windows; ++x) {
    const HashValue hy = hash_window_unchecked(text, x, m);
    if (hx == hy) {
      ++local.hash_hits;
      if (bytes_equal(text, x, pattern)) {
        result.offsets.push_back(x);
      } else {
        ++local.verify_failures;
      }
    }
  }
  if (stats != nullptr) {
    *stats += local;
  }
  return result;
}

PatternSet::PatternSet(std::vector<std::string> patterns) {
  if (patterns.empty()) {
    throw std::invalid_argument("PatternSet: at least one pattern is required");
  }
  for (auto& p : patterns) {
    require_pattern(p, "PatternSet");
    if (index_of(p) != patterns_.size()) {
      continue;
    }
    const std::size_t idx = patterns_.size();
    by_length_[p.size()].push_back(idx);
    hash_index_[p.size()][hash_full(p).value].push_back(idx);
    patterns_.push_back(std::move(p));
  }
}

std::size_t PatternSet::index_of(std::string_view pattern) const {
  const auto group = hash_index_.find(pattern.size());
  if (group != hash_index_.end()) {
    const auto bucket = group->second.find(hash_full(pattern).value);
    if (bucket != group->second.end()) {
      for (const std::size_t idx : bucket->second) {
        if (patterns_[idx] == pattern) {
          return idx;
        }
      }
    }
  }
  return patterns_.size();
}

const std::vector<std::size_t>& PatternSet::candidates(std::size_t m, HashValue h) const {
  static const std::vector<std::size_t> kNone;
  const auto group = hash_index_.find(m);
  if (group == hash_index_.end()) {
    return kNone;
  }
  const auto bucket = group->second.find(h.value);
  return bucket == group->second.end() ? kNone : bucket->second;
}

std::vector<std::pair<std::size_t, MatchResult>> search_multi(std::string_view text,
                                                              const PatternSet& patterns,
                                                              SearchStats* stats) {
  std::vector<std::pair<std::size_t, MatchResult>> out;
  out.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out.emplace_back(i, MatchResult{text.size(), patterns[i].size(), {}});
  }

  SearchStats local;
  for (const auto& [m, members] : patterns.by_length()) {
    const std::size_t windows = window_count(text.size(), m);
    local.windows += windows;
    for (std::size_t x = 0; x < windows; ++x) {
      const HashValue hy = hash_window_unchecked(text, x, m);
      for (const std::size_t idx : patterns.candidates(m, hy)) {
        ++local.hash_hits;
        if (bytes_equal(text, x, patterns[idx])) {
          out[idx].second.offsets.push_back(x);
        } else {
          ++local.verify_failures;
        }
      }
    }
  }
  if (stats != nullptr) {
    *stats += local;
  }
  return out;
}

}  // namespace rk
