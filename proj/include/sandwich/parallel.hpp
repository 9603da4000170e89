#pragma once

#include <cstdint>
#include <functional>

namespace sandwich {

/// Runs body(0..count-1) on up to `workers` threads. Work items are claimed
/// from a shared atomic counter; callers get determinism by writing results
/// into per-index slots, never by relying on completion order. The first
/// exception thrown by any item is rethrown on the calling thread after all
/// workers join.
void parallel_for(std::int64_t count, int workers, const std::function<void(std::int64_t)>& body);

}  // namespace sandwich
