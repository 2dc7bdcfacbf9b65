#pragma once

#include <cstdint>

namespace sumprod {

// Caps that gate the memory- or time-unbounded operations. All counts are
// exact: an operation checks before (or while) growing past the cap and
// throws the matching budget Errc instead of thrashing.
struct Budgets {
  std::uint64_t counter_entries = 20'000'000;  // max distinct keys in one Counter
  std::uint64_t enumeration = 2'000'000;       // max elements of a boxed group slice
  std::uint64_t matrix_dim = 2048;             // max side of a cycle-count matrix
  std::uint64_t brute_force = 200'000'000;     // max tuples visited by brute-force counts
  std::uint64_t pair_ops = 400'000'000;        // max membership probes in quotient graphs
};

// Execution settings threaded through shardable operations. Results are
// exact and independent of `threads` by construction (commutative merges).
struct Exec {
  unsigned threads = 1;
  Budgets budgets{};
};

}  // namespace sumprod
