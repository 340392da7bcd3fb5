#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rkmatch/hash.hpp"
#include "rkmatch/match.hpp"

namespace rk {

inline constexpr std::uint32_t kMaxBlockDim = 1024;
inline constexpr std::uint32_t kDefaultAxisCap = 65535;

struct Dim3 {
  std::uint32_t x = 1;
  std::uint32_t y = 1;
  std::uint32_t z = 1;

  friend bool operator==(const Dim3&, const Dim3&) = default;
};

// Grid of blocks, each block_dim threads wide. Every thread owns one
// candidate window offset.
struct LaunchConfig {
  Dim3 grid;
  std::uint32_t block_dim = 1;

  std::uint64_t block_count() const noexcept {
    return std::uint64_t{grid.x} * grid.y * grid.z;
  }
  std::uint64_t total_threads() const noexcept { return block_count() * block_dim; }

  // Throws std::invalid_argument unless 1 <= block_dim <= 1024 and all grid
  // dimensions are >= 1.
  void validate() const;

  friend bool operator==(const LaunchConfig&, const LaunchConfig&) = default;
};

struct ThreadCoord {
  Dim3 block_idx{0, 0, 0};
  std::uint32_t thread_idx = 0;
};

// blockId = bx + by*gx + gx*gy*bz; x = blockId*block_dim + thread_idx.
constexpr std::uint64_t offset_of_unchecked(const ThreadCoord& c, const LaunchConfig& cfg) noexcept {
  const std::uint64_t gx = cfg.grid.x;
  const std::uint64_t gy = cfg.grid.y;
  const std::uint64_t block_id = c.block_idx.x + c.block_idx.y * gx + gx * gy * c.block_idx.z;
  return block_id * cfg.block_dim + c.thread_idx;
}

// Checked form. Throws std::out_of_range if coord lies outside cfg.
std::uint64_t offset_of(const ThreadCoord& coord, const LaunchConfig& cfg);

// Inverse of offset_of for a linear thread id in [0, cfg.total_threads()).
ThreadCoord coord_of(std::uint64_t linear_id, const LaunchConfig& cfg);

// Enough blocks of block_dim threads to cover the n - m + 1 windows. The grid
// grows along x first and spills onto y and then z once an axis would exceed
// axis_cap. Throws std::invalid_argument for block_dim outside [1, 1024],
// m > n, axis_cap == 0, or a window count no grid within the cap can cover.
LaunchConfig plan_launch(std::size_t n, std::size_t m, std::uint32_t block_dim,
                         std::uint32_t axis_cap = kDefaultAxisCap);

// Host-side pattern hash handed to every kernel instance.
HashValue hash_pattern_host(std::string_view pattern);

// Runs the per-window kernel for every thread of cfg, splitting the flattened
// coordinate space into `workers` contiguous ranges executed concurrently.
// Threads whose offset lies beyond n - m do nothing. The result is identical
// to search_sequential for every valid cfg and worker count.
MatchResult search_parallel(std::string_view text, std::string_view pattern,
                            const LaunchConfig& cfg, std::size_t workers,
                            SearchStats* stats = nullptr);

}  // namespace rk
