#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zagreb/errors.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/operators.hpp"
#include "zagreb/rational.hpp"

#include "support/test_graphs.hpp"

#include <array>
#include <random>

using namespace zagreb;

namespace {

Graph ls_of(int k, int leaves) {
    return apply_pipeline(cycle_star({k, leaves}),
                          std::array{OperatorId::Subdivision, OperatorId::LineGraph});
}

Graph lcs_of(int k, int leaves) {
    return apply_pipeline(cycle_star({k, leaves}),
                          std::array{OperatorId::Subdivision, OperatorId::LineCutVertex});
}

} // namespace

TEST_CASE("first Zagreb index") {
    CHECK(first_zagreb(ls_of(3, 1)) == 44);
    CHECK(first_zagreb(Graph{}) == 0);
    CHECK(first_zagreb(lcs_of(3, 1)) == 90);
}

TEST_CASE("second Zagreb index") {
    CHECK(second_zagreb(ls_of(3, 1)) == 54);
    CHECK(second_zagreb(testsupport::make_cycle(4)) == 16);
    CHECK(second_zagreb(lcs_of(3, 1)) == 147);
}

TEST_CASE("first Zagreb coindex") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(first_zagreb_coindex(testsupport::make_complete(n)) == 0);
    }
    CHECK(first_zagreb_coindex(testsupport::make_cycle(4)) == 8);
    CHECK(first_zagreb_coindex(ls_of(3, 1)) == 82);
}

TEST_CASE("second Zagreb coindex") {
    CHECK(second_zagreb_coindex(testsupport::make_complete(3)) == 0);
    CHECK(second_zagreb_coindex(testsupport::make_cycle(4)) == 8);
    CHECK(second_zagreb_coindex(ls_of(3, 1)) == 86);
}

TEST_CASE("edge degree partitions") {
    EdgePartition expected_ls{{{2, 2}, 3}, {{2, 4}, 2}, {{1, 4}, 2}, {{4, 4}, 6}};
    CHECK(edge_degree_partition(ls_of(3, 2)) == expected_ls);

    EdgePartition expected_c5{{{2, 2}, 5}};
    CHECK(edge_degree_partition(testsupport::make_cycle(5)) == expected_c5);

    EdgePartition expected_lcs{{{2, 2}, 4}, {{2, 4}, 2}, {{2, 5}, 2}, {{3, 4}, 2},
                               {{4, 4}, 1}, {{3, 5}, 1}, {{4, 5}, 2}};
    CHECK(edge_degree_partition(lcs_of(3, 1)) == expected_lcs);
}

TEST_CASE("index report") {
    IndexReport r = index_report(ls_of(3, 1));
    CHECK(r.order == 8);
    CHECK(r.size == 9);
    CHECK(r.m1 == 44);
    CHECK(r.m2 == 54);
    CHECK(r.m1_coindex == 82);
    CHECK(r.m2_coindex == 86);

    IndexReport empty = index_report(Graph{});
    CHECK(empty.order == 0);
    CHECK(empty.size == 0);
    CHECK(empty.m1 == 0);
    CHECK(empty.m2 == 0);
    CHECK(empty.m1_coindex == 0);
    CHECK(empty.m2_coindex == 0);
    CHECK(empty.degree_distribution.empty());
    CHECK(empty.edge_partition.empty());

    IndexReport r32 = index_report(ls_of(3, 2));
    CHECK(r32.order == 10);
    CHECK(r32.size == 13);
    CHECK(r32.m1 == 82);
    CHECK(r32.m2 == 132);
}

TEST_CASE("index identities on random graphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testsupport::random_graph(rng, 16);

        // Both stated forms of M1 agree.
        CHECK(first_zagreb(g) == first_zagreb_edge_sum(g));

        // Coindex by definition equals coindex by identity.
        CHECK(first_zagreb_coindex(g) == first_zagreb_coindex_identity(g));
        CHECK(second_zagreb_coindex(g) == second_zagreb_coindex_identity(g));

        // All-pairs closure: adjacent and non-adjacent products add up to
        // ((sum d)^2 - sum d^2) / 2.
        Count degree_sum = 0;
        for (const VertexLabel &u : g.vertices()) {
            degree_sum += static_cast<Count>(g.degree(u));
        }
        Count all_pairs = (degree_sum * degree_sum - first_zagreb(g)) / 2;
        CHECK(second_zagreb(g) + second_zagreb_coindex(g) == all_pairs);

        // The partition reproduces both indices.
        Count m1 = 0, m2 = 0;
        for (const auto &[pair, count] : edge_degree_partition(g)) {
            m1 += count * (pair.first + pair.second);
            m2 += count * pair.first * pair.second;
        }
        CHECK(m1 == first_zagreb(g));
        CHECK(m2 == second_zagreb(g));

        index_report(g); // must not throw: internal consistency
    }
}

TEST_CASE("exact scalar conversions guard the integer range") {
    CHECK(Rational(5).to_int64() == 5);
    CHECK(Rational(-7, 1).to_int64() == -7);
    CHECK_THROWS_AS(Rational(1, 3).to_int64(), OverflowError);

    Rational huge(1LL << 62);
    huge = huge * huge; // 2^124, far outside int64
    CHECK(huge.is_integer());
    CHECK_THROWS_AS(huge.to_int64(), OverflowError);
    CHECK_THROWS_AS(Rational(1, 0), InvalidParameterError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidParameterError);
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-8, 2).str() == "-4");
}
