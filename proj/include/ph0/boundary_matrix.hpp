#pragma once

#include <cstdint>
#include <vector>

#include "ph0/bit_vector.hpp"
#include "ph0/filtration.hpp"

namespace ph0 {

// One graded column of the vertex-edge boundary matrix. Every nonzero entry
// of the column carries the same grade, so the column reduces to its grade
// plus the set of vertex rows with a nonzero entry. The grade never changes
// under column additions; only the support does.
struct BoundaryColumn {
    std::uint64_t grade = 0;
    BitVector support;
};

// Columns in filtration order, grades nondecreasing; rows are vertices.
struct BoundaryMatrix {
    std::size_t n_rows = 0;
    std::vector<BoundaryColumn> columns;
};

bool operator==(const BoundaryColumn& a, const BoundaryColumn& b);
bool operator==(const BoundaryMatrix& a, const BoundaryMatrix& b);

// Column j has support {u_j, v_j} and grade a_j.
BoundaryMatrix build_boundary_matrix(const Filtration& filtration, std::size_t n);

} // namespace ph0
