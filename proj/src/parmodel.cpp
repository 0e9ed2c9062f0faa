#include "ph0/parmodel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ph0/boundary_matrix.hpp"
#include "ph0/point_cloud.hpp"
#include "ph0/reduction.hpp"

namespace ph0 {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("step count overflows 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("step count overflows 64 bits");
    return r;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return a / b + (a % b != 0);
}

void require_valid(std::uint64_t n, const MachineProfile& profile) {
    if (n < 2) throw std::invalid_argument("degenerate input: need at least 2 points");
    if (profile.width < 1) throw std::invalid_argument("machine width must be at least 1");
}

std::uint64_t pair_count(std::uint64_t n) {
    return (n % 2 == 0) ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

// ceil(log2 k); 0 for k <= 1.
std::uint64_t ceil_log2(std::uint64_t k) {
    return k <= 1 ? 0 : std::uint64_t(std::bit_width(k - 1));
}

std::uint64_t finish_total(StepCount& sc) {
    sc.total = checked_add(
        checked_add(checked_add(sc.distance_steps, sc.sort_steps), sc.build_steps),
        checked_add(sc.reduce_steps, sc.extract_steps));
    return sc.total;
}

} // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Element: return "ELEMENT";
        case Regime::Row: return "ROW";
        case Regime::Column: return "COLUMN";
        case Regime::Sequential: return "SEQUENTIAL";
    }
    return "UNKNOWN";
}

double regime_exponent(Regime regime) {
    switch (regime) {
        case Regime::Element: return 1.0;
        case Regime::Row: return 2.0;
        case Regime::Column: return 3.0;
        case Regime::Sequential: return 4.0;
    }
    return 0.0;
}

Regime classify_regime(std::uint64_t n, MachineProfile profile) {
    require_valid(n, profile);
    const std::uint64_t k = pair_count(n);
    const std::uint64_t p = profile.width;
    if (k <= p / n) return Regime::Element;   // p >= n*k without overflow
    if (p >= k) return Regime::Row;
    if (p >= n) return Regime::Column;
    return Regime::Sequential;
}

StepCount predict_steps(std::uint64_t n, MachineProfile profile) {
    require_valid(n, profile);
    const std::uint64_t k = pair_count(n);
    const std::uint64_t p = profile.width;
    const std::uint64_t l = ceil_log2(k);

    StepCount sc;
    sc.distance_steps = ceil_div(k, p);
    sc.sort_steps = std::max(ceil_div(checked_mul(k, l), p), l);
    sc.build_steps = ceil_div(k, p);

    std::uint64_t round_steps = 0;
    switch (classify_regime(n, profile)) {
        case Regime::Element:
            round_steps = 1;
            break;
        case Regime::Row:
            round_steps = checked_mul(n, ceil_div(k, p));
            break;
        case Regime::Column:
        case Regime::Sequential:
            round_steps = checked_mul(k, ceil_div(n, p));
            break;
    }
    sc.reduce_steps = checked_mul(n - 1, round_steps);
    sc.extract_steps = ceil_div(n, p);
    finish_total(sc);
    return sc;
}

RegimeThresholds regime_thresholds(MachineProfile profile) {
    if (profile.width < 1) throw std::invalid_argument("machine width must be at least 1");
    const std::uint64_t p = profile.width;
    // Largest n with n(n-1)/2 <= p, found from the integer sqrt estimate and
    // corrected in both directions.
    std::uint64_t n = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
    if (n < 2) n = 2;
    while (pair_count(n + 1) <= p) ++n;
    while (n > 2 && pair_count(n) > p) --n;
    return {n, p};
}

StepCount simulate_steps(std::uint64_t n, MachineProfile profile, std::uint64_t /*seed*/) {
    require_valid(n, profile);
    const std::uint64_t k = pair_count(n);
    const std::uint64_t p = profile.width;
    const std::uint64_t l = ceil_log2(k);

    // One dispatch of `ops` unit operations, filled into width-p batches.
    const auto batched = [p](std::uint64_t ops) {
        std::uint64_t steps = 0;
        while (ops > 0) {
            ops -= std::min(ops, p);
            ++steps;
        }
        return steps;
    };

    StepCount sc;
    sc.distance_steps = batched(k);
    sc.sort_steps = std::max(batched(checked_mul(k, l)), l);
    sc.build_steps = batched(k);

    const Regime regime = classify_regime(n, profile);
    for (std::uint64_t round = 1; round < n; ++round) {
        switch (regime) {
            case Regime::Element:
                sc.reduce_steps = checked_add(sc.reduce_steps, 1);
                break;
            case Regime::Row:
                for (std::uint64_t row = 0; row < n; ++row)
                    sc.reduce_steps = checked_add(sc.reduce_steps, batched(k));
                break;
            case Regime::Column:
            case Regime::Sequential:
                for (std::uint64_t column = 0; column < k; ++column)
                    sc.reduce_steps = checked_add(sc.reduce_steps, batched(n));
                break;
        }
    }
    sc.extract_steps = batched(n);
    finish_total(sc);
    return sc;
}

std::uint64_t count_actual_ops(std::uint64_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("degenerate input: need at least 2 points");
    const PointCloud cloud = generate_uniform_cloud(n, 2, seed);
    const Filtration filtration = build_filtration(pairwise_distances(cloud));
    BoundaryMatrix m = build_boundary_matrix(filtration, n);
    return reduce(m).unit_ops();
}

} // namespace ph0
