#include "ph0/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace ph0 {

std::vector<PairDistance> pairwise_distances(const PointCloud& cloud) {
    const auto n = static_cast<std::size_t>(cloud.size());
    if (n > 0xFFFFFFFFu)
        throw std::invalid_argument("point cloud too large for 32-bit vertex indices");
    std::vector<PairDistance> out;
    out.reserve(n * (n - (n > 0)) / 2);
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            out.push_back({u, v, (cloud.point(u) - cloud.point(v)).norm()});
    return out;
}

Filtration build_filtration(std::vector<PairDistance> distances) {
    std::sort(distances.begin(), distances.end(), [](const PairDistance& a, const PairDistance& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    Filtration f;
    f.edges.reserve(distances.size());
    for (const auto& d : distances) {
        if (f.scale.empty() || f.scale.back() != d.length)
            f.scale.push_back(d.length);
        f.edges.push_back({d.u, d.v, d.length, f.scale.size()});
    }
    return f;
}

} // namespace ph0
