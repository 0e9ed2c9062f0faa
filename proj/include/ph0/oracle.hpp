#pragma once

#include <cstdint>
#include <vector>

#include "ph0/barcode.hpp"
#include "ph0/filtration.hpp"

namespace ph0 {

// Disjoint-set forest with union by rank and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::uint32_t find(std::uint32_t x);
    // Joins the two components; returns false if already joined.
    bool unite(std::uint32_t a, std::uint32_t b);
    std::size_t components() const { return components_; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_ = 0;
};

// Kruskal sweep over the filtration: every edge joining two components emits
// a finite bar (0, grade, length). Independent of the matrix reduction; the
// finite multisets of both must agree exactly.
Barcode kruskal_barcode(const Filtration& filtration, std::size_t n);

// Sum of the finite death lengths (the MST weight).
double mst_total_weight(const Filtration& filtration, std::size_t n);

} // namespace ph0
