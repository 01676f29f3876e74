#pragma once

#include <cstddef>

namespace stircalc::parallel {

// Thread budget for the OpenMP kernels. Defaults to the OpenMP runtime's
// max; 1 forces every kernel onto the serial path.
int max_threads();
void set_max_threads(int n);

// True when a kernel over `work_items` units should take the OpenMP path.
bool use_parallel(std::size_t work_items);

} // namespace stircalc::parallel
