#include "x237/fixtures_data.hpp"
#include "x237/models.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>

using namespace x237;

namespace {

IntersectionData p3_fixture() { return parse_intersection_data(std::string(fixtures::c5_p3_matrix)); }
IntersectionData p2_fixture() { return parse_intersection_data(std::string(fixtures::c5_p2_matrix)); }

// Independent order oracle: for a fiber with some multiplicity-1 component,
// the group order equals |det M'| where M' deletes that component's row and
// column.
Int deleted_minor_order(const IntersectionData& d, long drop) {
    const long n = d.matrix.rows();
    IntMatrix m(n - 1, n - 1);
    long r = 0;
    for (long i = 0; i < n; ++i) {
        if (i == drop) continue;
        long c = 0;
        for (long j = 0; j < n; ++j) {
            if (j == drop) continue;
            m.at(r, c++) = d.matrix.at(i, j);
        }
        ++r;
    }
    auto s = smith_normal_form(m);
    Int det = 1;
    for (auto& x : s.diag) det *= x;
    return det;
}

} // namespace

TEST_CASE("validate_fiber") {
    auto d = p3_fixture();
    CHECK(validate_fiber(d));
    auto bad = d;
    bad.matrix.at(0, 1) += 1;
    CHECK_FALSE(validate_fiber(bad));
    CHECK_THROWS_AS(component_group(bad), MathError);
}

TEST_CASE("component group of the fiber at 3") {
    auto g = component_group(p3_fixture());
    REQUIRE(g.invariant_factors.size() == 1);
    CHECK(g.invariant_factors[0] == 7);
    CHECK(g.to_string() == "Z/7");
}

TEST_CASE("single component gives the trivial group") {
    IntersectionData d;
    d.mult = {Int(1)};
    d.matrix = IntMatrix(1, 1);
    auto g = component_group(d);
    CHECK(g.invariant_factors.empty());
    CHECK(g.to_string() == "trivial");
}

TEST_CASE("cycle fibers give cyclic groups") {
    for (int n = 2; n <= 9; ++n) {
        auto d = make_cycle_fiber(n);
        REQUIRE(validate_fiber(d));
        auto g = component_group(d);
        CAPTURE(n);
        REQUIRE(g.invariant_factors.size() == 1);
        CHECK(g.invariant_factors[0] == n);
        CHECK(deleted_minor_order(d, 0) == n);
    }
}

TEST_CASE("reconstructed fiber at 2 passes both certificates") {
    auto d = p2_fixture();
    REQUIRE(d.matrix.rows() == 16);
    REQUIRE(validate_fiber(d));
    // stated shape: self-intersections -4 (A), -3 (B2), -2 otherwise;
    // off-diagonal entries 0 or 1
    CHECK(d.matrix.at(0, 0) == -4);
    CHECK(d.matrix.at(1, 1) == -3);
    for (long i = 2; i < 16; ++i) CHECK(d.matrix.at(i, i) == -2);
    for (long i = 0; i < 16; ++i)
        for (long j = 0; j < 16; ++j)
            if (i != j) CHECK((d.matrix.at(i, j) == 0 || d.matrix.at(i, j) == 1));
    auto g = component_group(d);
    REQUIRE(g.invariant_factors.size() == 2);
    CHECK(g.invariant_factors[0] == 4);
    CHECK(g.invariant_factors[1] == 4);
    CHECK(deleted_minor_order(d, 0) == 16);  // component A has multiplicity 1
}

TEST_CASE("component group is invariant under relabelling") {
    auto d = p3_fixture();
    std::mt19937 rng(2718);
    std::vector<long> perm{0, 1, 2, 3};
    for (int iter = 0; iter < 5; ++iter) {
        std::shuffle(perm.begin(), perm.end(), rng);
        IntersectionData e;
        e.mult.resize(4);
        e.matrix = IntMatrix(4, 4);
        for (long i = 0; i < 4; ++i) {
            e.mult[i] = d.mult[perm[i]];
            for (long j = 0; j < 4; ++j) e.matrix.at(i, j) = d.matrix.at(perm[i], perm[j]);
        }
        CHECK(component_group(e) == component_group(d));
    }
}

TEST_CASE("disconnected data is rejected") {
    IntersectionData d;
    d.mult = {Int(1), Int(1)};
    d.matrix = IntMatrix(2, 2);  // two components that never meet
    REQUIRE(validate_fiber(d));
    CHECK_THROWS_AS(component_group(d), MathError);
}

TEST_CASE("matrix files on disk match the embedded fixtures") {
    auto load = [](const std::string& rel) {
        std::ifstream in(std::string(X237_SOURCE_DIR) + "/" + rel);
        REQUIRE(in);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    CHECK(load("fixtures/c5_p3.mat") == fixtures::c5_p3_matrix);
    CHECK(load("fixtures/c5_p2.mat") == fixtures::c5_p2_matrix);
    auto d = parse_intersection_data(load("fixtures/c5_p3.mat"));
    CHECK(d.labels == std::vector<std::string>{"A", "B", "C", "D2"});
}
