#pragma once

#include <cstdint>
#include <vector>

#include "ph0/point_cloud.hpp"

namespace ph0 {

// Unordered pair distance with canonical orientation u < v.
struct PairDistance {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double length = 0.0;
};

// Edge of the complete graph graded by the 1-based index of its length in
// the deduplicated scale vector.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double length = 0.0;
    std::uint64_t grade = 0;
};

// Edges sorted by (length, u, v); scale holds the strictly increasing
// distinct lengths. Duplicate lengths share a grade.
struct Filtration {
    std::vector<Edge> edges;
    std::vector<double> scale;
};

// All N(N-1)/2 pairwise Euclidean distances, each unordered pair computed
// once, emitted in u-major order.
std::vector<PairDistance> pairwise_distances(const PointCloud& cloud);

// Sorts, deduplicates lengths into the scale, and assigns grades. Equal
// lengths are ordered lexicographically by (u, v), compared bit-exactly for
// deduplication.
Filtration build_filtration(std::vector<PairDistance> distances);

} // namespace ph0
