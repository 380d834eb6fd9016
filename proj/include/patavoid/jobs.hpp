#pragma once

#include <cstddef>
#include <functional>

namespace patavoid {

// Resolves a job-count request: 0 means "use hardware concurrency".
int effective_jobs(int jobs);

// Runs fn(0..count-1) on up to `jobs` worker threads. Callers keep results in
// per-index slots, so outcomes do not depend on scheduling. The first
// exception thrown by any task is rethrown on the calling thread.
void parallel_for_index(std::size_t count, int jobs,
                        const std::function<void(std::size_t)>& fn);

}  // namespace patavoid
