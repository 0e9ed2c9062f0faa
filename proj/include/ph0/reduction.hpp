#pragma once

#include <cstdint>

#include "ph0/barcode.hpp"
#include "ph0/boundary_matrix.hpp"
#include "ph0/filtration.hpp"

namespace ph0 {

struct ReductionOptions {
    // On: colliding columns are found through a claimed-low map in O(1).
    // Off: a linear scan over earlier columns finds the same unique collider,
    // so the reduced matrix is identical and only the run time changes.
    bool pivoting = true;
    unsigned workers = 1;   // lane count used by reduce_parallel
};

// Unit-operation tally of one reduction: every vertex row processed by a
// column addition plus every probe spent locating colliding columns.
struct ReductionStats {
    std::uint64_t additions = 0;
    std::uint64_t row_ops = 0;
    std::uint64_t probe_ops = 0;

    std::uint64_t unit_ops() const { return row_ops + probe_ops; }
};

// Canonical left-to-right column reduction over GF(2): while a column is
// nonempty and an earlier surviving column shares its low (highest nonzero
// row), add that column. Columns ending empty are cycle columns; the rest
// claim their low. Single-threaded; deterministic. Reduces in place.
ReductionStats reduce(BoundaryMatrix& m, const ReductionOptions& opts = {});

// Bit-identical to reduce for every worker count. The outer filtration-order
// loop stays sequential; within each column addition the symmetric
// difference (and, with pivoting off, the collider scan) is partitioned
// across opts.workers lanes with a join before the loop advances.
ReductionStats reduce_parallel(BoundaryMatrix& m, const ReductionOptions& opts);

// One finite bar per surviving column: (0, grade, scale[grade-1]).
// essential_count = n_rows - number of finite bars.
Barcode extract_barcode(const BoundaryMatrix& reduced, const Filtration& filtration);

} // namespace ph0
