#include "subapprox/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace subapprox {

unsigned worker_count() {
    if (const char* env = std::getenv("SUBSPACE_APPROX_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < n; k = next++) {
                    try {
                        body(k);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = n;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace subapprox
