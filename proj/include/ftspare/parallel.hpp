#ifndef FTSPARE_PARALLEL_HPP
#define FTSPARE_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace ftspare {

/// Split [0, total) into at most `threads` contiguous chunks and run
/// fn(chunk_index, begin, end) on each, one worker thread per chunk.
/// Callers merge per-chunk results in chunk order, which keeps outputs
/// independent of the thread count.
template <typename Fn>
void parallel_ranges(std::uint64_t total, unsigned threads, Fn &&fn) {
  if (threads == 0) threads = 1;
  if (threads == 1 || total < 2) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  if (threads > total) threads = static_cast<unsigned>(total);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  std::uint64_t chunk = total / threads, rem = total % threads, begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t end = begin + chunk + (t < rem ? 1 : 0);
    workers.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    begin = end;
  }
  for (auto &w : workers) w.join();
}

/// Thread count resolution used by the CLI: explicit value, else the
/// FTSPARE_THREADS environment variable, else hardware concurrency.
unsigned resolve_threads(int requested);

} // namespace ftspare

#endif
