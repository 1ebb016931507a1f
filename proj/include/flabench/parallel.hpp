#pragma once

#include <cstdint>
#include <functional>

namespace flabench {

// Process-wide worker pool for data-parallel kernels.
//
// parallel_for runs body(i) once for each i in [begin, end). Bodies must
// write disjoint output locations and perform no cross-index reductions;
// under that contract results are bit-identical for any thread count, so
// determinism survives parallelism.
void set_threads(int n);
int threads();
void parallel_for(int64_t begin, int64_t end, const std::function<void(int64_t)>& body);

}  // namespace flabench
