#include "rkmatch/parallel.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rk {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

struct WorkerOutput {
  std::vector<std::size_t> offsets;
  SearchStats stats;
};

// Executes linear thread ids [begin, end). Each id is mapped back to its
// block/thread coordinate and the kernel derives its window offset from that.
void run_range(std::string_view text, std::string_view pattern, HashValue hx,
               const LaunchConfig& cfg, std::uint64_t begin, std::uint64_t end,
               WorkerOutput& out) {
  const std::size_t m = pattern.size();
  const std::uint64_t windows = window_count(text.size(), m);
  const std::uint64_t bd = cfg.block_dim;
  // Counters stay in locals; stores through `out` would force reloads of the
  // text bytes since char reads may alias them.
  std::vector<std::size_t> offsets;
  std::uint64_t visited = 0;
  std::uint64_t hits = 0;
  std::uint64_t rejected = 0;

  std::uint64_t id = begin;
  while (id < end) {
    const std::uint64_t block_linear = id / bd;
    const auto first_thread = static_cast<std::uint32_t>(id % bd);
    const auto last_thread =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(bd, first_thread + (end - id)));

    ThreadCoord coord;
    coord.block_idx.x = static_cast<std::uint32_t>(block_linear % cfg.grid.x);
    coord.block_idx.y = static_cast<std::uint32_t>((block_linear / cfg.grid.x) % cfg.grid.y);
    coord.block_idx.z =
        static_cast<std::uint32_t>(block_linear / (std::uint64_t{cfg.grid.x} * cfg.grid.y));

    for (std::uint32_t t = first_thread; t < last_thread; ++t) {
      coord.thread_idx = t;
      const std::uint64_t x = offset_of_unchecked(coord, cfg);
      if (x >= windows) {
        continue;  // guard: x <= n - m
      }
      ++visited;
      const HashValue hy = hash_window_unchecked(text, x, m);
      if (hx == hy) {
        ++hits;
        if (std::memcmp(text.data() + x, pattern.data(), m) == 0) {
          offsets.push_back(static_cast<std::size_t>(x));
        } else {
          ++rejected;
        }
      }
    }
    id += last_thread - first_thread;
  }
  out.offsets = std::move(offsets);
  out.stats = SearchStats{visited, hits, rejected};
}

}  // namespace

void LaunchConfig::validate() const {
  if (block_dim < 1 || block_dim > kMaxBlockDim) {
    throw std::invalid_argument("LaunchConfig: block_dim " + std::to_string(block_dim) +
                                " outside [1, 1024]");
  }
  if (grid.x < 1 || grid.y < 1 || grid.z < 1) {
    throw std::invalid_argument("LaunchConfig: grid dimensions must be >= 1");
  }
}

std::uint64_t offset_of(const ThreadCoord& coord, const LaunchConfig& cfg) {
  cfg.validate();
  if (coord.block_idx.x >= cfg.grid.x || coord.block_idx.y >= cfg.grid.y ||
      coord.block_idx.z >= cfg.grid.z || coord.thread_idx >= cfg.block_dim) {
    throw std::out_of_range("offset_of: thread coordinate outside launch config");
  }
  return offset_of_unchecked(coord, cfg);
}

ThreadCoord coord_of(std::uint64_t linear_id, const LaunchConfig& cfg) {
  cfg.validate();
  if (linear_id >= cfg.total_threads()) {
    throw std::out_of_range("coord_of: linear id outside launch config");
  }
  const std::uint64_t block_linear = linear_id / cfg.block_dim;
  ThreadCoord c;
  c.thread_idx = static_cast<std::uint32_t>(linear_id % cfg.block_dim);
  c.block_idx.x = static_cast<std::uint32_t>(block_linear % cfg.grid.x);
  c.block_idx.y = static_cast<std::uint32_t>((block_linear / cfg.grid.x) % cfg.grid.y);
  c.block_idx.z =
      static_cast<std::uint32_t>(block_linear / (std::uint64_t{cfg.grid.x} * cfg.grid.y));
  return c;
}

LaunchConfig plan_launch(std::size_t n, std::size_t m, std::uint32_t block_dim,
                         std::uint32_t axis_cap) {
  if (block_dim < 1 || block_dim > kMaxBlockDim) {
    throw std::invalid_argument("plan_launch: block_dim " + std::to_string(block_dim) +
                                " outside [1, 1024]");
  }
  if (m > n) {
    throw std::invalid_argument("plan_launch: pattern length exceeds text length");
  }
  if (axis_cap == 0) {
    throw std::invalid_argument("plan_launch: axis cap must be >= 1");
  }
  const std::uint64_t blocks = ceil_div(n - m + 1, block_dim);
  LaunchConfig cfg;
  cfg.block_dim = block_dim;
  cfg.grid.x = static_cast<std::uint32_t>(std::min<std::uint64_t>(blocks, axis_cap));
  const std::uint64_t rows = ceil_div(blocks, cfg.grid.x);
  cfg.grid.y = static_cast<std::uint32_t>(std::min<std::uint64_t>(rows, axis_cap));
  const std::uint64_t layers = ceil_div(blocks, std::uint64_t{cfg.grid.x} * cfg.grid.y);
  if (layers > axis_cap) {
    throw std::invalid_argument("plan_launch: window count too large for axis cap");
  }
  cfg.grid.z = static_cast<std::uint32_t>(layers);
  return cfg;
}

HashValue hash_pattern_host(std::string_view pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("hash_pattern_host: pattern must be non-empty");
  }
  return hash_full(pattern);
}

MatchResult search_parallel(std::string_view text, std::string_view pattern,
                            const LaunchConfig& cfg, std::size_t workers,
                            SearchStats* stats) {
  const HashValue hx = hash_pattern_host(pattern);
  cfg.validate();
  if (workers < 1) {
    throw std::invalid_argument("search_parallel: workers must be >= 1");
  }
  const std::uint64_t windows = window_count(text.size(), pattern.size());
  const std::uint64_t total = cfg.total_threads();
  if (total < windows) {
    throw std::invalid_argument("search_parallel: launch config covers " +
                                std::to_string(total) + " threads but " +
                                std::to_string(windows) + " windows are needed");
  }

  const std::uint64_t chunk = ceil_div(total, workers);
  std::vector<WorkerOutput> outputs(workers);
  auto range_for = [&](std::size_t w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    run_range(text, pattern, hx, cfg, begin, end, outputs[w]);
  };

  if (workers == 1) {
    range_for(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(range_for, w);
    }
    range_for(0);
  }  // jthreads join here

  // Ranges are contiguous and ascending, so concatenation is already sorted.
  MatchResult result{text.size(), pattern.size(), {}};
  std::size_t count = 0;
  for (const auto& o : outputs) {
    count += o.offsets.size();
  }
  result.offsets.reserve(count);
  SearchStats merged;
  for (auto& o : outputs) {
    result.offsets.insert(result.offsets.end(), o.offsets.begin(), o.offsets.end());
    merged += o.stats;
  }
  if (stats != nullptr) {
    *stats += merged;
  }
  return result;
}

}  // namespace rk
