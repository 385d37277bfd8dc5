#pragma once

#include <cstddef>
#include <functional>

namespace rlab {

// Worker count from REEDY_LAB_THREADS (default 1).
unsigned thread_count();
// Runs f(0..n-1); results must not depend on the schedule. Rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace rlab
