#include <doctest.h>

#include <Eigen/Core>

#include <algorithm>

#include "ph0/boundary_matrix.hpp"
#include "ph0/oracle.hpp"
#include "ph0/point_cloud.hpp"
#include "ph0/reduction.hpp"
#include "ph0/splitmix64.hpp"

using ph0::Barcode;
using ph0::BoundaryMatrix;
using ph0::build_boundary_matrix;
using ph0::build_filtration;
using ph0::extract_barcode;
using ph0::Filtration;
using ph0::pairwise_distances;
using ph0::PointCloud;
using ph0::reduce;
using ph0::reduce_parallel;
using ph0::ReductionOptions;
using ph0::ReductionStats;

namespace {

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

Filtration filtration_of(const PointCloud& cloud) {
    return build_filtration(pairwise_distances(cloud));
}

PointCloud collinear3() { return from_rows({{0, 0}, {1, 0}, {3, 0}}); }

} // namespace

TEST_CASE("boundary matrix of the collinear cloud") {
    const Filtration f = filtration_of(collinear3());
    const BoundaryMatrix m = build_boundary_matrix(f, 3);
    REQUIRE(m.columns.size() == 3);
    CHECK(m.n_rows == 3);
    CHECK(m.columns[0].grade == 1);
    CHECK(m.columns[0].support.test(0));
    CHECK(m.columns[0].support.test(1));
    CHECK(m.columns[0].support.count() == 2);
    CHECK(m.columns[1].grade == 2);
    CHECK(m.columns[1].support.test(1));
    CHECK(m.columns[1].support.test(2));
    CHECK(m.columns[2].grade == 3);
    CHECK(m.columns[2].support.test(0));
    CHECK(m.columns[2].support.test(2));
}

TEST_CASE("boundary matrix degenerate sizes") {
    const Filtration two = filtration_of(from_rows({{0, 0}, {1, 0}}));
    const BoundaryMatrix m2 = build_boundary_matrix(two, 2);
    REQUIRE(m2.columns.size() == 1);
    CHECK(m2.columns[0].grade == 1);
    CHECK(m2.columns[0].support.count() == 2);

    CHECK(build_boundary_matrix(Filtration{}, 0).columns.empty());
    CHECK(build_boundary_matrix(Filtration{}, 1).columns.empty());
}

TEST_CASE("reduction of the collinear cloud, traced by hand") {
    // g3 = {0,2} + g2 {1,2} = {0,1}, + g1 {0,1} = {} -> cycle column;
    // g1 and g2 survive with lows 1 and 2.
    const Filtration f = filtration_of(collinear3());
    BoundaryMatrix m = build_boundary_matrix(f, 3);
    const ReductionStats stats = reduce(m);

    CHECK(m.columns[0].support.top() == 1);
    CHECK(m.columns[1].support.top() == 2);
    CHECK(!m.columns[2].support.any());

    CHECK(stats.additions == 2);
    // 3 rows per addition, plus 4 low lookups (one per surviving column,
    // two while g3 collides)
    CHECK(stats.row_ops == 6);
    CHECK(stats.probe_ops == 4);
    CHECK(stats.unit_ops() == 10);
}

TEST_CASE("two points reduce without any addition") {
    const Filtration f = filtration_of(from_rows({{0, 0}, {1, 0}}));
    BoundaryMatrix m = build_boundary_matrix(f, 2);
    const ReductionStats stats = reduce(m);
    CHECK(m.columns[0].support.count() == 2);
    CHECK(stats.additions == 0);
    CHECK(stats.row_ops == 0);
    CHECK(stats.probe_ops == 1);
}

TEST_CASE("barcode of the collinear cloud") {
    const Filtration f = filtration_of(collinear3());
    BoundaryMatrix m = build_boundary_matrix(f, 3);
    reduce(m);
    const Barcode bc = extract_barcode(m, f);
    CHECK(finite_death_lengths(bc) == std::vector<double>{1.0, 2.0});
    CHECK(finite_death_grades(bc) == std::vector<std::uint64_t>{1, 2});
    CHECK(bc.essential_count == 1);
}

TEST_CASE("barcode of the unit square") {
    const PointCloud cloud = from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const Filtration f = filtration_of(cloud);
    BoundaryMatrix m = build_boundary_matrix(f, 4);
    reduce(m);
    const Barcode bc = extract_barcode(m, f);
    CHECK(finite_death_lengths(bc) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(bc.essential_count == 1);
}

TEST_CASE("barcode of two separated clusters") {
    const PointCloud cloud = from_rows({{0, 0}, {0.1, 0}, {10, 0}, {10.1, 0}});
    const Filtration f = filtration_of(cloud);
    BoundaryMatrix m = build_boundary_matrix(f, 4);
    reduce(m);
    const Barcode bc = extract_barcode(m, f);
    // the two intra-cluster gaps and the 9.9 bridge, as actually rounded
    CHECK(finite_death_lengths(bc) ==
          std::vector<double>{std::min(0.1, 10.1 - 10.0), std::max(0.1, 10.1 - 10.0), 10.0 - 0.1});
}

TEST_CASE("coincident points produce zero-length bars") {
    const PointCloud cloud = from_rows({{1, 1}, {1, 1}, {2, 2}});
    const Filtration f = filtration_of(cloud);
    BoundaryMatrix m = build_boundary_matrix(f, 3);
    reduce(m);
    const Barcode bc = extract_barcode(m, f);
    REQUIRE(bc.finite.size() == 2);
    CHECK(bc.finite[0].death_length == 0.0);
    CHECK(bc.finite[0].death_grade == 1);
}

TEST_CASE("degenerate barcodes") {
    const BoundaryMatrix empty0{0, {}};
    const Barcode bc0 = extract_barcode(empty0, Filtration{});
    CHECK(bc0.finite.empty());
    CHECK(bc0.essential_count == 0);

    const BoundaryMatrix empty1{1, {}};
    const Barcode bc1 = extract_barcode(empty1, Filtration{});
    CHECK(bc1.finite.empty());
    CHECK(bc1.essential_count == 1);
}

TEST_CASE("grades are invariant under reduction and survivors number N-1") {
    ph0::SplitMix64 seeds(4242);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + seeds.next() % 48;
        const PointCloud cloud = ph0::generate_uniform_cloud(n, 1 + seeds.next() % 3, seeds.next());
        const Filtration f = filtration_of(cloud);
        BoundaryMatrix m = build_boundary_matrix(f, n);
        std::vector<std::uint64_t> grades_before;
        for (const auto& col : m.columns) grades_before.push_back(col.grade);
        reduce(m);
        std::size_t survivors = 0;
        std::vector<std::uint32_t> lows;
        for (std::size_t j = 0; j < m.columns.size(); ++j) {
            CHECK(m.columns[j].grade == grades_before[j]);
            if (m.columns[j].support.any()) {
                ++survivors;
                lows.push_back(m.columns[j].support.top());
            }
        }
        CHECK(survivors == n - 1);
        // distinct lows: the survivors form a lower-triangular matrix up to
        // the permutation sending each column to its low's row
        std::sort(lows.begin(), lows.end());
        CHECK(std::adjacent_find(lows.begin(), lows.end()) == lows.end());
    }
}

TEST_CASE("reduction is idempotent") {
    const PointCloud cloud = ph0::generate_uniform_cloud(24, 2, 17);
    const Filtration f = filtration_of(cloud);
    BoundaryMatrix once = build_boundary_matrix(f, 24);
    reduce(once);
    BoundaryMatrix twice = once;
    const ReductionStats stats = reduce(twice);
    CHECK(twice == once);
    CHECK(stats.additions == 0);
}

TEST_CASE("reduced barcode equals the union-find oracle") {
    ph0::SplitMix64 seeds(60601);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + seeds.next() % 60;
        const std::size_t dim = 1 + seeds.next() % 3;
        const PointCloud cloud = ph0::generate_uniform_cloud(n, dim, seeds.next());
        const Filtration f = filtration_of(cloud);
        BoundaryMatrix m = build_boundary_matrix(f, n);
        reduce(m);
        const Barcode ours = extract_barcode(m, f);
        const Barcode oracle = ph0::kruskal_barcode(f, n);
        CHECK(finite_death_grades(ours) == finite_death_grades(oracle));
        CHECK(ours.essential_count == oracle.essential_count);
    }
}

TEST_CASE("pivoting off performs the same reduction") {
    ph0::SplitMix64 seeds(2718);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + seeds.next() % 40;
        const PointCloud cloud = ph0::generate_uniform_cloud(n, 2, seeds.next());
        const Filtration f = filtration_of(cloud);
        BoundaryMatrix with_pivot = build_boundary_matrix(f, n);
        BoundaryMatrix without_pivot = with_pivot;
        reduce(with_pivot, {true, 1});
        reduce(without_pivot, {false, 1});
        CHECK(with_pivot == without_pivot);
        CHECK(finite_death_grades(extract_barcode(with_pivot, f)) ==
              finite_death_grades(extract_barcode(without_pivot, f)));
    }
}

TEST_CASE("parallel reduction is bit-identical to sequential") {
    // the full worker matrix over 50 clouds runs in the acceptance suite
    ph0::SplitMix64 seeds(11);
    for (int trial = 0; trial < 3; ++trial) {
        const std::size_t n = 2 + seeds.next() % 40;
        const PointCloud cloud = ph0::generate_uniform_cloud(n, 2, seeds.next());
        const Filtration f = filtration_of(cloud);
        BoundaryMatrix sequential = build_boundary_matrix(f, n);
        reduce(sequential);
        for (const unsigned workers : {1u, 2u, 3u, 6u}) {
            for (const bool pivoting : {true, false}) {
                BoundaryMatrix parallel = build_boundary_matrix(f, n);
                reduce_parallel(parallel, {pivoting, workers});
                CHECK(parallel == sequential);
            }
        }
    }
    // one larger cloud at the hardware's natural lane count
    const std::size_t n = 64;
    const PointCloud cloud = ph0::generate_uniform_cloud(n, 2, 777);
    const Filtration f = filtration_of(cloud);
    BoundaryMatrix sequential = build_boundary_matrix(f, n);
    reduce(sequential);
    BoundaryMatrix parallel = build_boundary_matrix(f, n);
    reduce_parallel(parallel, {true, 2});
    CHECK(parallel == sequential);
}
