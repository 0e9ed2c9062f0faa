#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <thread>
#include <type_traits>
#include <vector>

namespace ph0 {

// Fixed set of worker lanes with fork-join dispatch. Lane 0 is the calling
// thread; lanes 1..count-1 are pooled threads that spin-wait between
// dispatches, so a fork-join costs well under a microsecond. Tasks must not
// throw across the lane boundary.
class WorkerPool {
public:
    explicit WorkerPool(unsigned lanes);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    unsigned lanes() const { return lanes_; }

    // Runs fn(lane) on every lane and returns once all lanes finished.
    template <typename F>
    void run(F&& fn) {
        if (lanes_ == 1) {
            fn(0u);
            return;
        }
        using Fn = std::remove_reference_t<F>;
        dispatch([](void* ctx, unsigned lane) { (*static_cast<Fn*>(ctx))(lane); },
                 std::addressof(fn));
    }

private:
    using TaskFn = void (*)(void*, unsigned);
    struct Sync;

    void dispatch(TaskFn fn, void* ctx);
    void lane_main(unsigned lane);

    unsigned lanes_;
    std::unique_ptr<Sync> sync_;
    std::atomic<std::uint64_t> epoch_{0};
    std::atomic<unsigned> done_{0};
    std::atomic<bool> stop_{false};
    TaskFn task_fn_ = nullptr;
    void* task_ctx_ = nullptr;
    std::vector<std::thread> threads_;
};

} // namespace ph0
