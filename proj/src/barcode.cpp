#include "ph0/barcode.hpp"

#include <algorithm>

#include "ph0/format.hpp"

namespace ph0 {

std::vector<std::uint64_t> finite_death_grades(const Barcode& barcode) {
    std::vector<std::uint64_t> grades;
    grades.reserve(barcode.finite.size());
    for (const auto& iv : barcode.finite) grades.push_back(iv.death_grade);
    std::sort(grades.begin(), grades.end());
    return grades;
}

std::vector<double> finite_death_lengths(const Barcode& barcode) {
    std::vector<double> lengths;
    lengths.reserve(barcode.finite.size());
    for (const auto& iv : barcode.finite) lengths.push_back(iv.death_length);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::string format_barcode(const Barcode& barcode, bool show_essential) {
    std::string out;
    for (const auto& iv : barcode.finite) {
        out += "0,";
        out += format_double(iv.death_length);
        out += ',';
        out += std::to_string(iv.death_grade);
        out += '\n';
    }
    if (show_essential)
        for (std::size_t i = 0; i < barcode.essential_count; ++i) out += "0,inf,-\n";
    return out;
}

} // namespace ph0
