#pragma once

#include <cstdint>
#include <string_view>

namespace ph0 {

// Abstract machine retiring `width` unit operations per step. The default is
// the 10 teraFLOPS / 1 GHz estimate of a Tesla-class accelerator.
struct MachineProfile {
    std::uint64_t width = 1000;
};

// Per-stage step tally of the five-stage pipeline (distances, sort, build,
// reduce, extract) scheduled on a width-P machine.
struct StepCount {
    std::uint64_t distance_steps = 0;
    std::uint64_t sort_steps = 0;
    std::uint64_t build_steps = 0;
    std::uint64_t reduce_steps = 0;
    std::uint64_t extract_steps = 0;
    std::uint64_t total = 0;

    friend bool operator==(const StepCount&, const StepCount&) = default;
};

// Scaling regime implied by which dimension of the reduce stage's K x n
// op-grid fits within the machine width:
//   Element    P >= n*K   whole grid per step        O(N)
//   Row        P >= K     one grid row per step      O(N^2)
//   Column     P >= n     one grid column per step   O(N^3)
//   Sequential otherwise                             O(N^4)
enum class Regime { Element, Row, Column, Sequential };

std::string_view to_string(Regime regime);
double regime_exponent(Regime regime);

// Closed-form step model. K = n(n-1)/2 edges; L = ceil(log2 K).
//   distance = ceil(K/P)
//   sort     = max(ceil(K*L/P), L)   (L is the parallel-sort floor)
//   build    = ceil(K/P)
//   reduce   = (n-1) rounds, each the K x n op-grid dispatched at the widest
//              granularity the machine fits: whole grid (1 step), per grid
//              row (n * ceil(K/P)), or per grid column (K * ceil(n/P))
//   extract  = ceil(n/P)
// Pivot search is charged zero steps. Throws on n < 2 and on 64-bit
// overflow of any stage count.
StepCount predict_steps(std::uint64_t n, MachineProfile profile);

Regime classify_regime(std::uint64_t n, MachineProfile profile);

struct RegimeThresholds {
    std::uint64_t n_row;   // largest n with n(n-1)/2 <= P
    std::uint64_t n_col;   // largest n with n <= P
};

RegimeThresholds regime_thresholds(MachineProfile profile);

// Batch-scheduled abstract executor: walks every pipeline stage's full
// op-grid (data-independent, so the seed never enters the schedule) and
// tallies width-P batches one by one. Returns exactly predict_steps(n,
// profile) for every input; intended for small n, the walk is O(total).
StepCount simulate_steps(std::uint64_t n, MachineProfile profile, std::uint64_t seed);

// Runs the real reduction on a generated 2-d uniform cloud and returns the
// unit operations actually performed (rows touched per addition plus
// collision probes), for exponent measurements decoupled from wall clock.
std::uint64_t count_actual_ops(std::uint64_t n, std::uint64_t seed);

} // namespace ph0
