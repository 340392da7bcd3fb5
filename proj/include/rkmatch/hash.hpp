#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rk {

// Shift-add window hash. All arithmetic wraps modulo 2^64.
struct HashValue {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(HashValue, HashValue) = default;
};

// Folds h <- 2*h + byte over the input. Bytes are treated as unsigned.
constexpr HashValue hash_full(std::string_view bytes) noexcept {
  std::uint64_t h = 0;
  for (const char c : bytes) {
    h = (h << 1) + static_cast<unsigned char>(c);
  }
  return HashValue{h};
}

// Hash of text[offset, offset + m), recomputed from scratch.
// Throws std::out_of_range if the window does not fit and
// std::invalid_argument if m == 0.
HashValue hash_window(std::string_view text, std::size_t offset, std::size_t m);

// Unchecked variant used in the matching hot loops. Caller guarantees
// offset + m <= text.size().
inline HashValue hash_window_unchecked(std::string_view text, std::size_t offset,
                                       std::size_t m) noexcept {
  const auto* p = reinterpret_cast<const unsigned char*>(text.data()) + offset;
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < m; ++i) {
    h = (h << 1) + p[i];
  }
  return HashValue{h};
}

// 2^(m-1) mod 2^64; zero once m exceeds 64.
constexpr std::uint64_t leading_weight(std::size_t m) noexcept {
  return m - 1 < 64 ? std::uint64_t{1} << (m - 1) : 0;
}

// Slides a window of length m one byte to the right. Only used to
// cross-check hash_window; the matchers always recompute each window.
HashValue roll(HashValue prev, unsigned char outgoing, unsigned char incoming,
               std::size_t m);

}  // namespace rk
