#include "ph0/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "ph0/worker_pool.hpp"

namespace ph0 {

namespace {

constexpr std::uint32_t kNoLow = BitVector::npos;
constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

class ReduceEngine {
public:
    ReduceEngine(BoundaryMatrix& m, const ReductionOptions& opts, WorkerPool* pool)
        : m_(m), opts_(opts), pool_(pool) {
        if (opts_.pivoting)
            claimed_by_.assign(m_.n_rows, kNoColumn);
        else
            final_low_.assign(m_.columns.size(), kNoLow);
        if (pool_ != nullptr && pool_->lanes() > 1) {
            lane_hit_.assign(pool_->lanes(), kNoColumn);
            lane_probes_.assign(pool_->lanes(), 0);
        }
    }

    ReductionStats run() {
        const std::size_t cols = m_.columns.size();
        for (std::size_t j = 0; j < cols; ++j) {
            BoundaryColumn& col = m_.columns[j];
            std::uint32_t low = col.support.top();
            while (low != kNoLow) {
                const std::size_t k = find_collider(j, low);
                if (k == kNoColumn) break;
                add_column(col.support, m_.columns[k].support);
                ++stats_.additions;
                stats_.row_ops += m_.n_rows;
                low = col.support.top();
            }
            if (opts_.pivoting) {
                if (low != kNoLow) claimed_by_[low] = j;
            } else {
                final_low_[j] = low;
            }
        }
        return stats_;
    }

private:
    // Earlier surviving column with the same low, or kNoColumn. At most one
    // exists at any time, so every lookup strategy returns the same column.
    std::size_t find_collider(std::size_t j, std::uint32_t low) {
        if (opts_.pivoting) {
            ++stats_.probe_ops;
            return claimed_by_[low];
        }
        if (lane_hit_.empty()) {
            for (std::size_t k = 0; k < j; ++k) {
                ++stats_.probe_ops;
                if (final_low_[k] == low) return k;
            }
            return kNoColumn;
        }
        return scan_parallel(j, low);
    }

    // Strided partition so every lane walks the early columns first, with a
    // shared flag that lets the other lanes bail at the next block boundary.
    // The hit is unique, so exactly one lane can set the flag.
    std::size_t scan_parallel(std::size_t j, std::uint32_t low) {
        constexpr std::size_t kBlock = 1024;
        const unsigned lanes = pool_->lanes();
        const std::uint32_t* lows = final_low_.data();
        std::atomic<bool> found{false};
        pool_->run([this, &found, lanes, lows, j, low](unsigned lane) {
            std::size_t hit = kNoColumn;
            std::uint64_t probes = 0;
            for (std::size_t base = 0; base < j && hit == kNoColumn; base += kBlock) {
                if (found.load(std::memory_order_relaxed)) break;
                const std::size_t end = std::min(j, base + kBlock);
                for (std::size_t k = base + lane; k < end; k += lanes) {
                    ++probes;
                    if (lows[k] == low) {
                        hit = k;
                        found.store(true, std::memory_order_relaxed);
                        break;
                    }
                }
            }
            lane_hit_[lane] = hit;
            lane_probes_[lane] = probes;
        });
        std::size_t hit = kNoColumn;
        for (unsigned lane = 0; lane < lanes; ++lane) {
            stats_.probe_ops += lane_probes_[lane];
            if (lane_hit_[lane] < hit) hit = lane_hit_[lane];
        }
        return hit;
    }

    void add_column(BitVector& dst, const BitVector& src) {
        if (pool_ == nullptr || pool_->lanes() == 1) {
            dst.xor_with(src);
            return;
        }
        const unsigned lanes = pool_->lanes();
        const std::size_t words = dst.word_count();
        pool_->run([&dst, &src, words, lanes](unsigned lane) {
            dst.xor_word_range(src, words * lane / lanes, words * (lane + 1) / lanes);
        });
    }

    BoundaryMatrix& m_;
    const ReductionOptions& opts_;
    WorkerPool* pool_;
    ReductionStats stats_;
    std::vector<std::size_t> claimed_by_;   // row -> claiming column (pivoting on)
    std::vector<std::uint32_t> final_low_;  // column -> finalized low (pivoting off)
    std::vector<std::size_t> lane_hit_;
    std::vector<std::uint64_t> lane_probes_;
};

} // namespace

ReductionStats reduce(BoundaryMatrix& m, const ReductionOptions& opts) {
    return ReduceEngine(m, opts, nullptr).run();
}

ReductionStats reduce_parallel(BoundaryMatrix& m, const ReductionOptions& opts) {
    if (opts.workers < 1) throw std::invalid_argument("worker count must be at least 1");
    if (opts.workers == 1) return reduce(m, opts);
    WorkerPool pool(opts.workers);
    return ReduceEngine(m, opts, &pool).run();
}

Barcode extract_barcode(const BoundaryMatrix& reduced, const Filtration& filtration) {
    Barcode barcode;
    for (const BoundaryColumn& col : reduced.columns) {
        if (!col.support.any()) continue;
        if (col.grade < 1 || col.grade > filtration.scale.size())
            throw std::invalid_argument("column grade outside the filtration scale");
        barcode.finite.push_back({0.0, col.grade, filtration.scale[col.grade - 1]});
    }
    barcode.essential_count = reduced.n_rows - barcode.finite.size();
    return barcode;
}

} // namespace ph0
