#pragma once

#include <cstddef>
#include <functional>

namespace privclust {

// Calls body(i) for i in [0, count). threads == 0 picks the hardware
// concurrency; threads == 1 runs inline. body must only write to slot i of
// caller-owned storage, so results are independent of scheduling.
// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

}  // namespace privclust
