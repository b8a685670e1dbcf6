#pragma once

#include <cstddef>
#include <functional>

namespace heartlib {

// worker cap: HEART_THREADS when set (>= 1), else hardware concurrency
int max_threads();

// runs fn(0..n-1) across workers; rethrows the first exception after joining
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace heartlib
