#include "ph0/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace ph0 {

UnionFind::UnionFind(std::size_t n)
    : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];   // path halving
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
    std::uint32_t ra = find(a);
    std::uint32_t rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --components_;
    return true;
}

Barcode kruskal_barcode(const Filtration& filtration, std::size_t n) {
    Barcode barcode;
    if (n == 0) return barcode;
    UnionFind uf(n);
    for (const Edge& e : filtration.edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("filtration edge endpoints out of range");
        if (uf.unite(e.u, e.v)) {
            barcode.finite.push_back({0.0, e.grade, e.length});
            if (barcode.finite.size() == n - 1) break;
        }
    }
    barcode.essential_count = uf.components();
    return barcode;
}

double mst_total_weight(const Filtration& filtration, std::size_t n) {
    double total = 0.0;
    for (const Interval& iv : kruskal_barcode(filtration, n).finite) total += iv.death_length;
    return total;
}

} // namespace ph0
