#include "rkmatch/datagen.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>

namespace rk {

void DnaSpec::validate() const {
  if (alphabet.empty()) {
    throw std::invalid_argument("DnaSpec: alphabet must be non-empty");
  }
  std::array<bool, 256> seen{};
  for (const char c : alphabet) {
    auto& slot = seen[static_cast<unsigned char>(c)];
    if (slot) {
      throw std::invalid_argument("DnaSpec: alphabet symbols must be distinct");
    }
    slot = true;
  }
}

std::string generate(const DnaSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  const std::uint64_t k = spec.alphabet.size();
  std::string out(spec.length, '\0');
  for (auto& c : out) {
    c = spec.alphabet[rng.next() % k];
  }
  return out;
}

std::string plant(std::string_view text, std::string_view pattern,
                  const std::vector<std::size_t>& offsets) {
  if (pattern.empty()) {
    throw std::invalid_argument("plant: pattern must be non-empty");
  }
  std::vector<std::size_t> sorted = offsets;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > text.size() || pattern.size() > text.size() - sorted[i]) {
      throw std::out_of_range("plant: offset " + std::to_string(sorted[i]) +
                              " runs past end of text");
    }
    if (i > 0 && sorted[i] - sorted[i - 1] < pattern.size()) {
      throw std::invalid_argument("plant: offsets " + std::to_string(sorted[i - 1]) + " and " +
                                  std::to_string(sorted[i]) + " overlap");
    }
  }
  std::string out(text);
  for (const std::size_t x : sorted) {
    std::copy(pattern.begin(), pattern.end(), out.begin() + static_cast<std::ptrdiff_t>(x));
  }
  return out;
}

void write_bytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::string read_bytes(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) {
    throw std::runtime_error(path.string() + " is a directory");
  }
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  std::string out;
  is.seekg(0, std::ios::end);
  const auto size = is.tellg();
  if (size < 0) {
    throw std::runtime_error("cannot determine size of " + path.string());
  }
  out.resize(static_cast<std::size_t>(size));
  is.seekg(0, std::ios::beg);
  is.read(out.data(), size);
  if (!is && !out.empty()) {
    throw std::runtime_error("read failed: " + path.string());
  }
  return out;
}

}  // namespace rk
