#include "ergm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ergm {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_hint(int threads) { g_threads.store(std::max(1, threads)); }

int thread_hint() { return g_threads.load(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_hint()), std::max<std::size_t>(1, count / 4096));
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(body, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace ergm
