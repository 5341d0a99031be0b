#pragma once

#include <cstddef>
#include <functional>

namespace reupload::lab {

// Runs fn(0..count-1) on up to `workers` threads. Tasks are claimed from a
// shared counter; callers that write results into index i of a preallocated
// buffer get output independent of the worker count. Exceptions from tasks
// are rethrown on the calling thread.
void parallel_for_indexed(std::size_t count, int workers,
                          const std::function<void(std::size_t)>& fn);

}  // namespace reupload::lab
