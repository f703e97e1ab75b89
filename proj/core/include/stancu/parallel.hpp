#pragma once

#include <cstddef>
#include <functional>

namespace stancu {

struct ParallelOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

[[nodiscard]] unsigned resolve_threads(unsigned requested) noexcept;

/// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks must
/// write to disjoint outputs. If any task throws, the exception of the
/// lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t count, ParallelOptions options, const std::function<void(std::size_t)>& task);

}  // namespace stancu
