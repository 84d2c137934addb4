#ifndef DIAMCRIT_PARALLEL_HPP
#define DIAMCRIT_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace diamcrit {

// Worker count: explicit request > DIAMCRIT_THREADS env > hardware.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DIAMCRIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(index) over [0, count) on `threads` workers, chunked dynamically.
// Workers only write to per-index state, so results are independent of the
// thread count.  If stop is non-null, workers cease picking up new chunks
// once it becomes true.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn,
                  std::atomic<bool>* stop = nullptr) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            if (stop && stop->load(std::memory_order_relaxed)) return;
            fn(i);
        }
        return;
    }
    const std::size_t chunk = std::max<std::size_t>(1, count / (static_cast<std::size_t>(threads) * 8));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            if (stop && stop->load(std::memory_order_relaxed)) return;
            std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= count) return;
            std::size_t end = std::min(count, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) {
                if (stop && stop->load(std::memory_order_relaxed)) return;
                fn(i);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace diamcrit

#endif  // DIAMCRIT_PARALLEL_HPP
