#include "ph0/worker_pool.hpp"

#include <condition_variable>
#include <mutex>
#include <stdexcept>

namespace ph0 {

namespace {

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#else
    std::this_thread::yield();
#endif
}

} // namespace

struct WorkerPool::Sync {
    std::mutex mu;
    std::condition_variable cv;
};

WorkerPool::WorkerPool(unsigned lanes) : lanes_(lanes), sync_(std::make_unique<Sync>()) {
    if (lanes_ < 1) throw std::invalid_argument("worker pool needs at least one lane");
    threads_.reserve(lanes_ - 1);
    for (unsigned lane = 1; lane < lanes_; ++lane)
        threads_.emplace_back([this, lane] { lane_main(lane); });
}

WorkerPool::~WorkerPool() {
    if (!threads_.empty()) {
        {
            std::lock_guard<std::mutex> lock(sync_->mu);
            stop_.store(true, std::memory_order_relaxed);
            epoch_.fetch_add(1, std::memory_order_release);
        }
        sync_->cv.notify_all();
        for (auto& t : threads_) t.join();
    }
}

void WorkerPool::dispatch(TaskFn fn, void* ctx) {
    task_fn_ = fn;
    task_ctx_ = ctx;
    done_.store(0, std::memory_order_relaxed);
    {
        std::lock_guard<std::mutex> lock(sync_->mu);
        epoch_.fetch_add(1, std::memory_order_release);
    }
    sync_->cv.notify_all();

    fn(ctx, 0);

    // Lanes finish within microseconds once running; pause first, then
    // cooperate when the machine is oversubscribed.
    unsigned spins = 0;
    while (done_.load(std::memory_order_acquire) != lanes_ - 1) {
        if (++spins < 256)
            cpu_relax();
        else
            std::this_thread::yield();
    }
}

void WorkerPool::lane_main(unsigned lane) {
    std::uint64_t seen = 0;
    for (;;) {
        unsigned spins = 0;
        while (epoch_.load(std::memory_order_acquire) == seen) {
            ++spins;
            if (spins < 256) {
                cpu_relax();
            } else if (spins < 2048) {
                std::this_thread::yield();
            } else {
                std::unique_lock<std::mutex> lock(sync_->mu);
                sync_->cv.wait(lock, [this, seen] {
                    return epoch_.load(std::memory_order_acquire) != seen;
                });
                break;
            }
        }
        seen = epoch_.load(std::memory_order_acquire);
        if (stop_.load(std::memory_order_relaxed)) return;
        task_fn_(task_ctx_, lane);
        done_.fetch_add(1, std::memory_order_release);
    }
}

} // namespace ph0
