#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "rkmatch/datagen.hpp"

namespace rk::testing {

// Sum of b_i * 2^(m-1-i) mod 2^64, evaluated term by term with an explicit
// power rather than the shift-add fold.
inline std::uint64_t polynomial_hash(std::string_view bytes) {
  std::uint64_t sum = 0;
  const std::size_t m = bytes.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t weight = 1;
    for (std::size_t k = 0; k < m - 1 - i; ++k) {
      weight *= 2;
    }
    sum += static_cast<unsigned char>(bytes[i]) * weight;
  }
  return sum;
}

// Alphabet of the first k byte values starting at 'a' (k = 256 covers all bytes).
inline std::string alphabet_of(std::size_t k) {
  std::string a;
  for (std::size_t i = 0; i < k; ++i) {
    a.push_back(static_cast<char>(k == 256 ? i : 'a' + i));
  }
  return a;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_.next() % bound; }
  std::size_t in_range(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }

  std::string text(std::size_t n, std::string_view alphabet) {
    std::string s(n, '\0');
    for (auto& c : s) {
      c = alphabet[below(alphabet.size())];
    }
    return s;
  }

 private:
  SplitMix64 rng_;
};

}  // namespace rk::testing
