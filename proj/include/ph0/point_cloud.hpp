#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ph0 {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// N points in d-dimensional Euclidean space, one point per row. Immutable
// after construction; all coordinates are finite.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(Eigen::MatrixXd points);

    Eigen::Index size() const { return points_.rows(); }
    Eigen::Index dim() const { return points_.cols(); }
    const Eigen::MatrixXd& points() const { return points_; }
    Eigen::MatrixXd::ConstRowXpr point(Eigen::Index i) const { return points_.row(i); }

private:
    Eigen::MatrixXd points_;
};

// n points with i.i.d. coordinates uniform on (0,1), drawn point by point,
// coordinate by coordinate, from SplitMix64. A pure function of
// (seed, n, dim): the same arguments yield bit-identical clouds everywhere.
PointCloud generate_uniform_cloud(std::size_t n, std::size_t dim, std::uint64_t seed);

// Text format: one point per line, coordinates separated by commas or
// whitespace, '#' starts a comment line. Throws ParseError naming the
// offending line on malformed numbers or inconsistent dimensions.
PointCloud read_points(std::istream& in);
PointCloud read_points_file(const std::string& path);

// Shortest round-trip decimal; read_points(write_points(c)) == c exactly.
void write_points(std::ostream& out, const PointCloud& cloud);

} // namespace ph0
