#pragma once

#include <cstdint>
#include <functional>

namespace scm {

// Effective worker count: min(hardware, SCM_THREADS if set, job count).
int worker_count(int64_t jobs);

// Runs fn(i) for i in [0, n). Results must be written to per-index slots;
// the schedule is a static block partition, so output is independent of the
// worker count.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

}  // namespace scm
