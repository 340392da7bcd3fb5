#include "rkmatch/hash.hpp"

#include <stdexcept>
#include <string>

namespace rk {

HashValue hash_window(std::string_view text, std::size_t offset, std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("hash_window: window length must be >= 1");
  }
  if (offset > text.size() || m > text.size() - offset) {
    throw std::out_of_range("hash_window: window [" + std::to_string(offset) + ", " +
                            std::to_string(offset) + "+" + std::to_string(m) +
                            ") exceeds text length " + std::to_string(text.size()));
  }
  return hash_window_unchecked(text, offset, m);
}

HashValue roll(HashValue prev, unsigned char outgoing, unsigned char incoming,
               std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("roll: window length must be >= 1");
  }
  const std::uint64_t without_head = prev.value - std::uint64_t{outgoing} * leading_weight(m);
  return HashValue{(without_head << 1) + incoming};
}

}  // namespace rk
