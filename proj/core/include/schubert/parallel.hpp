#pragma once

#include <cstddef>
#include <functional>

namespace schubert {

/// Number of worker threads to use when the caller asks for "all of them".
unsigned default_jobs();

/// Runs fn(k) for every k in [0, n) on up to `jobs` threads. Indices are handed
/// out dynamically; fn must only write to storage owned by index k. The first
/// exception thrown by any worker is rethrown after all workers have joined.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace schubert
