#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rk {

// Vigna's splitmix64.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct DnaSpec {
  std::uint64_t seed = 0;
  std::size_t length = 0;
  std::string alphabet = "ACGT";

  // Throws std::invalid_argument on an empty alphabet or repeated symbols.
  void validate() const;
};

// Byte i is alphabet[next() % |alphabet|] from a splitmix64 stream seeded with
// spec.seed.
std::string generate(const DnaSpec& spec);

// Copy of text with pattern written at every offset. Throws
// std::invalid_argument for an empty pattern or overlapping offsets and
// std::out_of_range when a placement runs past the end of text.
std::string plant(std::string_view text, std::string_view pattern,
                  const std::vector<std::size_t>& offsets);

// Raw byte files: no header, no framing.
void write_bytes(const std::filesystem::path& path, std::string_view bytes);
std::string read_bytes(const std::filesystem::path& path);

}  // namespace rk
