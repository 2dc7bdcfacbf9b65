#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sumprod {

// Runs work(shard, begin, end, local) over a contiguous index range split
// into up to `threads` shards and returns the locals in shard order. The
// caller merges sequentially; merges used in this project are commutative
// set/counter unions, so the result never depends on the shard count.
template <class Local, class Work>
std::vector<Local> sharded(std::size_t n, unsigned threads, Work work) {
  if (threads == 0) threads = 1;
  std::size_t shards = std::min<std::size_t>(threads, n == 0 ? 1 : n);
  std::vector<Local> locals(shards);
  if (shards <= 1) {
    work(std::size_t{0}, std::size_t{0}, n, locals[0]);
    return locals;
  }
  std::vector<std::thread> pool;
  pool.reserve(shards);
  std::size_t chunk = (n + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    std::size_t begin = s * chunk;
    std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, s, begin, end] { work(s, begin, end, locals[s]); });
  }
  for (auto& t : pool) t.join();
  return locals;
}

}  // namespace sumprod
