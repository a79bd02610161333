#pragma once

#include <cstddef>
#include <functional>

namespace subapprox {

/// Worker count: SUBSPACE_APPROX_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
[[nodiscard]] unsigned worker_count();

/// Calls body(k) once for every k in [0, n), spreading indices over
/// worker_count() threads with dynamic scheduling. The first exception
/// thrown by any call is rethrown after all workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace subapprox
