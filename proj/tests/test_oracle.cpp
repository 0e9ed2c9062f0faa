#include <doctest.h>

#include <Eigen/Core>

#include "ph0/filtration.hpp"
#include "ph0/oracle.hpp"
#include "ph0/point_cloud.hpp"
#include "ph0/splitmix64.hpp"

using ph0::Barcode;
using ph0::build_filtration;
using ph0::Filtration;
using ph0::kruskal_barcode;
using ph0::mst_total_weight;
using ph0::pairwise_distances;
using ph0::PointCloud;

namespace {

Filtration filtration_of(const PointCloud& cloud) {
    return build_filtration(pairwise_distances(cloud));
}

PointCloud from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const double v : row) pts(i, j++) = v;
        ++i;
    }
    return PointCloud(std::move(pts));
}

} // namespace

TEST_CASE("kruskal on collinear points") {
    const PointCloud cloud = from_rows({{0, 0}, {1, 0}, {3, 0}});
    const Barcode bc = kruskal_barcode(filtration_of(cloud), 3);
    CHECK(finite_death_lengths(bc) == std::vector<double>{1.0, 2.0});
    CHECK(finite_death_grades(bc) == std::vector<std::uint64_t>{1, 2});
    CHECK(bc.essential_count == 1);
    CHECK(mst_total_weight(filtration_of(cloud), 3) == 3.0);
}

TEST_CASE("kruskal on the unit square") {
    const PointCloud cloud = from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const Barcode bc = kruskal_barcode(filtration_of(cloud), 4);
    CHECK(finite_death_lengths(bc) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(bc.essential_count == 1);
    CHECK(mst_total_weight(filtration_of(cloud), 4) == 3.0);
}

TEST_CASE("kruskal degenerate sizes") {
    const Barcode one = kruskal_barcode(Filtration{}, 1);
    CHECK(one.finite.empty());
    CHECK(one.essential_count == 1);

    const Barcode zero = kruskal_barcode(Filtration{}, 0);
    CHECK(zero.finite.empty());
    CHECK(zero.essential_count == 0);

    CHECK(mst_total_weight(Filtration{}, 1) == 0.0);
    CHECK(mst_total_weight(Filtration{}, 0) == 0.0);
}

TEST_CASE("kruskal emits N-1 finite bars with nondecreasing grades") {
    ph0::SplitMix64 seeds(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + seeds.next() % 50;
        const PointCloud cloud = ph0::generate_uniform_cloud(n, 2, seeds.next());
        const Barcode bc = kruskal_barcode(filtration_of(cloud), n);
        CHECK(bc.finite.size() == n - 1);
        CHECK(bc.essential_count == 1);
        for (std::size_t i = 0; i + 1 < bc.finite.size(); ++i)
            CHECK(bc.finite[i].death_grade <= bc.finite[i + 1].death_grade);
        for (const auto& iv : bc.finite) CHECK(iv.birth == 0.0);
    }
}

TEST_CASE("union-find tracks components") {
    ph0::UnionFind uf(5);
    CHECK(uf.components() == 5);
    CHECK(uf.unite(0, 1));
    CHECK(!uf.unite(1, 0));
    CHECK(uf.unite(2, 3));
    CHECK(uf.components() == 3);
    CHECK(uf.find(1) == uf.find(0));
    CHECK(uf.find(2) != uf.find(0));
}
