#include "ph0/boundary_matrix.hpp"

#include <stdexcept>

namespace ph0 {

bool operator==(const BoundaryColumn& a, const BoundaryColumn& b) {
    return a.grade == b.grade && a.support == b.support;
}

bool operator==(const BoundaryMatrix& a, const BoundaryMatrix& b) {
    return a.n_rows == b.n_rows && a.columns == b.columns;
}

BoundaryMatrix build_boundary_matrix(const Filtration& filtration, std::size_t n) {
    BoundaryMatrix m;
    m.n_rows = n;
    m.columns.reserve(filtration.edges.size());
    for (const Edge& e : filtration.edges) {
        if (e.u >= n || e.v >= n || e.u >= e.v)
            throw std::invalid_argument("filtration edge endpoints out of range");
        BoundaryColumn col{e.grade, BitVector(n)};
        col.support.set(e.u);
        col.support.set(e.v);
        m.columns.push_back(std::move(col));
    }
    return m;
}

} // namespace ph0
