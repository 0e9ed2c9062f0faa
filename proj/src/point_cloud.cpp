#include "ph0/point_cloud.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ph0/format.hpp"
#include "ph0/splitmix64.hpp"

namespace ph0 {

PointCloud::PointCloud(Eigen::MatrixXd points) : points_(std::move(points)) {
    if (!points_.allFinite())
        throw std::invalid_argument("point cloud contains non-finite coordinates");
}

PointCloud generate_uniform_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
    if (n > 0 && dim < 1)
        throw std::invalid_argument("point dimension must be at least 1");
    SplitMix64 rng(seed);
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
        for (Eigen::Index j = 0; j < pts.cols(); ++j)
            pts(i, j) = rng.next_unit_open();
    return PointCloud(std::move(pts));
}

namespace {

// Comma and whitespace both separate fields.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ',' || line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ',' && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > begin) fields.push_back(line.substr(begin, i - begin));
    }
    return fields;
}

} // namespace

PointCloud read_points(std::istream& in) {
    std::vector<double> values;
    Eigen::Index dim = 0;
    Eigen::Index rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.front().front() == '#') continue;
        if (dim == 0) {
            dim = static_cast<Eigen::Index>(fields.size());
        } else if (static_cast<Eigen::Index>(fields.size()) != dim) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(dim) + " coordinates, got " +
                             std::to_string(fields.size()));
        }
        for (const auto field : fields) {
            double v = 0.0;
            if (!parse_double(field, v))
                throw ParseError("line " + std::to_string(line_no) + ": malformed number '" +
                                 std::string(field) + "'");
            if (!std::isfinite(v))
                throw ParseError("line " + std::to_string(line_no) + ": non-finite coordinate '" +
                                 std::string(field) + "'");
            values.push_back(v);
        }
        ++rows;
    }
    Eigen::MatrixXd pts(rows, dim);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            pts(i, j) = values[static_cast<std::size_t>(i * dim + j)];
    return PointCloud(std::move(pts));
}

PointCloud read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file '" + path + "'");
    return read_points(in);
}

void write_points(std::ostream& out, const PointCloud& cloud) {
    for (Eigen::Index i = 0; i < cloud.size(); ++i) {
        for (Eigen::Index j = 0; j < cloud.dim(); ++j) {
            if (j > 0) out << ',';
            out << format_double(cloud.points()(i, j));
        }
        out << '\n';
    }
}

} // namespace ph0
