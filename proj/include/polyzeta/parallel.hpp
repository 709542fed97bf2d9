#pragma once

#include <cstddef>
#include <cstdint>

namespace polyzeta {

/// Fixed work-unit sizes. Reductions combine per-chunk partials in chunk
/// order, so results do not depend on the thread count.
inline constexpr std::int64_t kSeriesChunk = 1 << 14;
inline constexpr std::int64_t kSampleChunk = 1 << 16;

int max_threads();
void set_threads(int n);

}  // namespace polyzeta
