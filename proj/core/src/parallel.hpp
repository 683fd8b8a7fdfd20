#ifndef CDIM_PARALLEL_HPP
#define CDIM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cdim::internal {

/// Worker cap: CDIM_THREADS when set, otherwise all hardware threads.
unsigned worker_count();

/// Runs fn(0..n-1) across workers; rethrows the first exception after join.
/// Callers index into preallocated output slots, so results stay ordered.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace cdim::internal

#endif
