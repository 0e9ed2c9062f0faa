#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ph0 {

// Finite bar (0, death). death_grade is 1-based into the filtration scale;
// death_length = scale[death_grade - 1].
struct Interval {
    double birth = 0.0;
    std::uint64_t death_grade = 0;
    double death_length = 0.0;
};

struct Barcode {
    std::vector<Interval> finite;        // in filtration order
    std::size_t essential_count = 0;     // components alive at infinity
};

// Sorted copies, for multiset comparisons.
std::vector<std::uint64_t> finite_death_grades(const Barcode& barcode);
std::vector<double> finite_death_lengths(const Barcode& barcode);

// One interval per line: "birth,death_length,death_grade". Essential bars
// are printed as "0,inf,-" when requested.
std::string format_barcode(const Barcode& barcode, bool show_essential = false);

} // namespace ph0
