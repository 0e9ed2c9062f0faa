#include "ph0/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ph0/boundary_matrix.hpp"
#include "ph0/format.hpp"
#include "ph0/oracle.hpp"
#include "ph0/point_cloud.hpp"
#include "ph0/reduction.hpp"
#include "ph0/splitmix64.hpp"

namespace ph0 {

std::string_view to_string(BenchMode mode) {
    switch (mode) {
        case BenchMode::Seq: return "seq";
        case BenchMode::Par: return "par";
        case BenchMode::Model: return "model";
    }
    return "unknown";
}

BenchMode bench_mode_from_string(std::string_view name) {
    if (name == "seq") return BenchMode::Seq;
    if (name == "par") return BenchMode::Par;
    if (name == "model") return BenchMode::Model;
    throw std::invalid_argument("unknown bench mode '" + std::string(name) + "'");
}

std::uint64_t derive_cloud_seed(std::uint64_t base_seed, std::uint64_t n, unsigned rep) {
    return base_seed ^ mix64(n * kGoldenGamma + rep);
}

namespace {

// Distances through barcode; returns seconds. The bar-count law doubles as a
// cheap result sink so the work cannot be optimized away.
double timed_pipeline(const PointCloud& cloud, const SweepOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const Filtration filtration = build_filtration(pairwise_distances(cloud));
    BoundaryMatrix m = build_boundary_matrix(filtration, static_cast<std::size_t>(cloud.size()));
    ReductionOptions ropts{opts.pivoting, opts.workers};
    if (opts.mode == BenchMode::Par)
        reduce_parallel(m, ropts);
    else
        reduce(m, ropts);
    const Barcode barcode = extract_barcode(m, filtration);
    const auto t1 = std::chrono::steady_clock::now();
    if (cloud.size() > 0 && barcode.finite.size() + 1 != static_cast<std::size_t>(cloud.size()))
        throw std::logic_error("pipeline produced a wrong bar count");
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

std::vector<BenchRecord> run_sweep(const SweepOptions& opts) {
    if (opts.n_values.empty()) throw std::invalid_argument("n_values must be nonempty");
    if (!std::is_sorted(opts.n_values.begin(), opts.n_values.end()))
        throw std::invalid_argument("n_values must be ascending");
    if (opts.reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (opts.workers < 1) throw std::invalid_argument("workers must be at least 1");

    std::vector<BenchRecord> records;
    records.reserve(opts.n_values.size() * opts.reps);
    for (const std::uint64_t n : opts.n_values) {
        if (opts.mode == BenchMode::Model) {
            const auto steps = predict_steps(n, MachineProfile{opts.width});
            for (unsigned rep = 1; rep <= opts.reps; ++rep)
                records.push_back({n, opts.workers, opts.mode, rep,
                                   derive_cloud_seed(opts.seed, n, rep),
                                   static_cast<double>(steps.total)});
            continue;
        }
        if (opts.warmup) {
            try {
                timed_pipeline(generate_uniform_cloud(n, opts.dim,
                                                      derive_cloud_seed(opts.seed, n, 0)),
                               opts);
            } catch (const std::exception&) {
                // warm-up failures surface on the timed reps
            }
        }
        for (unsigned rep = 1; rep <= opts.reps; ++rep) {
            const std::uint64_t seed = derive_cloud_seed(opts.seed, n, rep);
            double value = std::numeric_limits<double>::quiet_NaN();
            try {
                const PointCloud cloud = generate_uniform_cloud(n, opts.dim, seed);
                value = timed_pipeline(cloud, opts);
            } catch (const std::exception&) {
                // leave the failure marker in place
            }
            records.push_back({n, opts.workers, opts.mode, rep, seed, value});
        }
    }
    return records;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [n, measure] : points) {
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::domain_error("fit requires positive n");
        if (!(measure > 0.0) || !std::isfinite(measure))
            throw std::domain_error("fit requires positive measurements");
        xs.push_back(std::log(n));
        ys.push_back(std::log(measure));
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        throw std::domain_error("fit requires at least 2 distinct n values");

    const double count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

double speedup(double base_mean_seconds, double variant_mean_seconds) {
    if (!(base_mean_seconds > 0.0) || !(variant_mean_seconds > 0.0))
        throw std::domain_error("speedup requires positive means");
    return base_mean_seconds / variant_mean_seconds;
}

std::vector<SeriesPoint> aggregate_means(const std::vector<BenchRecord>& records) {
    // key: (mode, workers, n)
    std::map<std::tuple<int, unsigned, std::uint64_t>, std::pair<double, std::size_t>> acc;
    for (const BenchRecord& r : records) {
        if (std::isnan(r.value)) continue;
        auto& slot = acc[{static_cast<int>(r.mode), r.workers, r.n}];
        slot.first += r.value;
        slot.second += 1;
    }
    std::vector<SeriesPoint> out;
    out.reserve(acc.size());
    for (const auto& [key, slot] : acc)
        out.push_back({std::get<2>(key), std::get<1>(key),
                       static_cast<BenchMode>(std::get<0>(key)),
                       slot.first / static_cast<double>(slot.second)});
    return out;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::string out = "n,workers,mode,rep,seed,value\n";
    for (const BenchRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.workers);
        out += ',';
        out += to_string(r.mode);
        out += ',';
        out += std::to_string(r.rep);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.value);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(line.substr(begin, i - begin));
            begin = i + 1;
        }
    }
    return fields;
}

} // namespace

std::vector<BenchRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,workers,mode,rep,seed,value")
        throw std::runtime_error("unexpected CSV header '" + line + "'");
    std::vector<BenchRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 6)
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 6 fields");
        BenchRecord r;
        unsigned long long n = 0, workers = 0, rep = 0, seed = 0;
        if (!parse_uint64(fields[0], n) || !parse_uint64(fields[1], workers) ||
            !parse_uint64(fields[3], rep) || !parse_uint64(fields[4], seed))
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": malformed integer");
        if (!parse_double(fields[5], r.value))
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": malformed value");
        r.n = n;
        r.workers = static_cast<unsigned>(workers);
        r.mode = bench_mode_from_string(fields[2]);
        r.rep = static_cast<unsigned>(rep);
        r.seed = seed;
        records.push_back(r);
    }
    return records;
}

} // namespace ph0
