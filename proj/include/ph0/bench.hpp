#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ph0/parmodel.hpp"

namespace ph0 {

enum class BenchMode { Seq, Par, Model };

std::string_view to_string(BenchMode mode);
BenchMode bench_mode_from_string(std::string_view name);

// One measured repetition. value is wall-clock seconds for seq/par and the
// model step total for model mode; NaN marks a repetition that failed (for
// example from resource exhaustion) without aborting the sweep.
struct BenchRecord {
    std::uint64_t n = 0;
    unsigned workers = 1;
    BenchMode mode = BenchMode::Seq;
    unsigned rep = 1;            // 1-based
    std::uint64_t seed = 0;      // cloud seed actually used
    double value = 0.0;
};

struct SweepOptions {
    std::vector<std::uint64_t> n_values;   // nonempty, ascending
    unsigned workers = 1;
    unsigned reps = 1;
    BenchMode mode = BenchMode::Seq;
    std::uint64_t seed = 1;
    std::size_t dim = 2;
    std::uint64_t width = 1000;            // model mode machine width
    bool pivoting = true;
    bool warmup = true;                    // one untimed run per n
};

// Per-repetition cloud seed; a pure function, recorded in each BenchRecord
// so any run can be reproduced from the CSV alone.
std::uint64_t derive_cloud_seed(std::uint64_t base_seed, std::uint64_t n, unsigned rep);

// Runs the pipeline (distances through barcode; generation untimed) for each
// (n, rep) and records wall seconds, or delegates to predict_steps in model
// mode. Record structure and seeds are deterministic; timings are not.
std::vector<BenchRecord> run_sweep(const SweepOptions& opts);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;      // natural-log intercept
    double r_squared = 0.0;
};

// Ordinary least squares on (log n, log measure). Requires two distinct
// positive n and strictly positive measures.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

double speedup(double base_mean_seconds, double variant_mean_seconds);

// Mean value per (n, workers, mode) with failed reps dropped, sorted by
// (mode, workers, n).
struct SeriesPoint {
    std::uint64_t n = 0;
    unsigned workers = 1;
    BenchMode mode = BenchMode::Seq;
    double mean = 0.0;
};

std::vector<SeriesPoint> aggregate_means(const std::vector<BenchRecord>& records);

// CSV with header "n,workers,mode,rep,seed,value"; values round-trip.
std::string emit_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& in);

struct SeriesFit {
    BenchMode mode = BenchMode::Seq;
    unsigned workers = 1;
    FitResult fit;
};

// Static log-log SVG chart: one polyline per (mode, workers) series of
// rep-averaged points, dashed fitted lines, and reference curves for slopes
// {1,2,3,4}. Throws on an empty record set.
std::string emit_plot(const std::vector<BenchRecord>& records,
                      const std::vector<SeriesFit>& fits);

} // namespace ph0
