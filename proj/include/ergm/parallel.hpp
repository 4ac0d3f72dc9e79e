#pragma once

#include <cstddef>
#include <functional>

namespace ergm {

// Worker-thread hint for the embarrassingly parallel loops (density tables,
// energy tables). Results never depend on it: every worker writes disjoint
// slots and reductions run afterwards in index order.
void set_thread_hint(int threads);
int thread_hint();

void parallel_for(std::size_t count, const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace ergm
