#ifndef GF2COH_PARALLEL_HPP
#define GF2COH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gf2coh {

/// Worker count from the GF2COH_THREADS environment variable, clamped to
/// the hardware; 1 when unset or unparsable.
unsigned thread_count_from_env();

/// Runs fn(0), ..., fn(count-1) on up to `threads` workers. Each index is
/// processed exactly once; callers keep results per index, so the output
/// does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

} // namespace gf2coh

#endif
