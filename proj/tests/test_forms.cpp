#include "x237/intmat.hpp"
#include "x237/ternary_form.hpp"
#include "x237/twists.hpp"
#include "x237/unipoly.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace x237;

namespace {

TernaryForm random_form(std::mt19937& rng, int degree, int max_terms = 5) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    TernaryForm f;
    for (int t = nterms(rng); t > 0; --t) {
        int i = std::uniform_int_distribution<int>(0, degree)(rng);
        int j = std::uniform_int_distribution<int>(0, degree - i)(rng);
        f.add_term({i, j, degree - i - j}, coeff(rng));
    }
    return f;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto a = TernaryForm::parse("x^3y");
    CHECK((a + (-a)).is_zero());

    auto s = TernaryForm::parse("x+y") * TernaryForm::parse("x-y");
    CHECK(s == TernaryForm::parse("x^2 - y^2"));

    auto f5 = catalog().by_label("C5").quartic;
    CHECK(f5 * TernaryForm::constant(1) == f5);

    CHECK_THROWS_AS(TernaryForm::parse("x") + TernaryForm::parse("x^2"), MathError);
    CHECK_THROWS_AS(TernaryForm::parse("x + y^2"), MathError);  // inhomogeneous
}

TEST_CASE("ring axioms on random forms") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        int d1 = 1 + iter % 3, d2 = 1 + (iter / 3) % 3;
        auto a = random_form(rng, d1), b = random_form(rng, d1), c = random_form(rng, d2);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("parser and printer round-trip") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        auto f = random_form(rng, 1 + iter % 5, 7);
        if (f.is_zero()) continue;
        CHECK(TernaryForm::parse(f.to_string()) == f);
    }
    // rational coefficients and implicit multiplication
    auto g = TernaryForm::parse("1/2x^2y - 3/4*y^3 + 2xyz");
    CHECK(g.coeff({2, 1, 0}) == Rat(1, 2));
    CHECK(g.coeff({0, 3, 0}) == Rat(-3, 4));
    CHECK(TernaryForm::parse(g.to_string()) == g);

    // the dehomogenized carrier round-trips too
    std::mt19937 rng2(11);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Rat> c(1 + iter % 7);
        for (auto& x : c)
            x = Rat(std::uniform_int_distribution<int>(-9, 9)(rng2),
                    std::uniform_int_distribution<int>(1, 4)(rng2));
        auto f = RatPoly::from_coeffs(std::move(c));
        CHECK(parse_unipoly(to_string(f)) == f);
    }
    CHECK(to_string(parse_unipoly("7u^6 - u^3 + 1")) == "7*u^6 - u^3 + 1");
}

TEST_CASE("reduce_mod_form") {
    auto f = catalog().by_label("C4").quartic;
    CHECK(reduce_mod_form(f, f, Axis::Z).is_zero());
    CHECK(reduce_mod_form(TernaryForm::variable(Axis::X) * f, f, Axis::Z).is_zero());

    // no pure power of x in C1: elimination impossible on that axis,
    // grevlex fallback stays total
    auto c1 = catalog().by_label("C1").quartic;
    CHECK_THROWS_AS(reduce_mod_form(f, c1, Axis::X), MathError);
    CHECK(reduce_mod_form(TernaryForm::parse("y") * c1, c1).is_zero());

    // remainder is congruent: g - r must be divisible
    std::mt19937 rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        auto g = random_form(rng, 6, 8);
        auto r = reduce_mod_form(g, f, Axis::Z);
        if (g == r) continue;
        CHECK(reduce_mod_form(g - r, f, Axis::Z).is_zero());
    }
}

TEST_CASE("resultant basics") {
    auto lin = [](int c0, int c1) {
        return RatBiPoly::from_coeffs({RatPoly(Rat(c0)), RatPoly(Rat(c1))});
    };
    // res(v - 1, v + 1) = 2
    RatPoly r = resultant(lin(-1, 1), lin(1, 1));
    CHECK(r == RatPoly(Rat(2)));
    // res(v^2, v) = 0
    RatBiPoly v2 = RatBiPoly::monomial(RatPoly(Rat(1)), 2);
    RatBiPoly v1 = RatBiPoly::monomial(RatPoly(Rat(1)), 1);
    CHECK(resultant(v2, v1).is_zero());
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937 rng(4242);
    auto rand_linear = [&](long shift) {
        // v - (u + shift)
        RatPoly root = RatPoly::from_coeffs({Rat(shift), Rat(1)});
        return RatBiPoly::from_coeffs({RatPoly(Rat(0)) - root, RatPoly(Rat(1))});
    };
    for (int iter = 0; iter < 8; ++iter) {
        long s1 = iter, s2 = iter + 1, s3 = iter + 2;
        auto f = rand_linear(s1) * rand_linear(s2);
        auto g = rand_linear(s2) * rand_linear(s3);
        CHECK(resultant(f, g).is_zero());  // share v - (u + s2)
        auto h = rand_linear(s1) * rand_linear(s1 + 5);
        auto k = rand_linear(s1 + 1) * rand_linear(s1 + 6);
        CHECK_FALSE(resultant(h, k).is_zero());  // distinct roots
    }
}

TEST_CASE("smith normal form") {
    auto check_transforms = [](const IntMatrix& m, const SmithResult& s) {
        IntMatrix d = s.left * m * s.right;
        for (long i = 0; i < d.rows(); ++i)
            for (long j = 0; j < d.cols(); ++j) {
                Int expect = (i == j && i < static_cast<long>(s.diag.size())) ? s.diag[i] : Int(0);
                REQUIRE(d.at(i, j) == expect);
            }
        for (size_t i = 0; i + 1 < s.diag.size(); ++i)
            if (s.diag[i + 1] != 0) REQUIRE((s.diag[i] == 0 || s.diag[i + 1] % s.diag[i] == 0));
    };

    IntMatrix id3 = IntMatrix::identity(3);
    auto s1 = smith_normal_form(id3);
    CHECK(s1.diag == std::vector<Int>{1, 1, 1});
    check_transforms(id3, s1);

    IntMatrix m2(2, 2);
    m2.at(0, 0) = 2;
    m2.at(1, 1) = 3;
    auto s2 = smith_normal_form(m2);
    CHECK(s2.diag == std::vector<Int>{1, 6});
    check_transforms(m2, s2);

    // relation matrix of the p=3 fiber rows in the kernel basis of (1,1,1,2)
    const long M[4][4] = {{-3, 1, 0, 1}, {1, -5, 0, 2}, {0, 0, -2, 1}, {1, 2, 1, -2}};
    IntMatrix kernel = hnf_kernel_basis({1, 1, 1, 2});
    REQUIRE(kernel.rows() == 3);
    IntMatrix rel(3, 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<Int> row(4);
        for (int j = 0; j < 4; ++j) row[j] = M[i][j];
        auto x = solve_left(kernel, row);
        REQUIRE(x);
        for (int j = 0; j < 3; ++j) rel.at(j, i) = (*x)[j];
    }
    auto s3 = smith_normal_form(rel);
    CHECK(s3.diag == std::vector<Int>{1, 1, 7});
    check_transforms(rel, s3);

    // random matrices: transforms exact, chain holds
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 20; ++iter) {
        long r = 2 + iter % 3, c = 2 + (iter / 3) % 3;
        IntMatrix m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                m.at(i, j) = std::uniform_int_distribution<int>(-9, 9)(rng);
        check_transforms(m, smith_normal_form(m));
    }
}

TEST_CASE("hnf kernel basis") {
    CHECK_THROWS_AS(hnf_kernel_basis({0, 0}), MathError);
    CHECK(hnf_kernel_basis({Int(1)}).rows() == 0);

    auto b2 = hnf_kernel_basis({1, 1});
    REQUIRE(b2.rows() == 1);
    CHECK(b2.at(0, 0) == 1);
    CHECK(b2.at(0, 1) == -1);

    auto b4 = hnf_kernel_basis({1, 1, 1, 2});
    REQUIRE(b4.rows() == 3);
    for (long i = 0; i < 3; ++i) {
        Int dot = b4.at(i, 0) + b4.at(i, 1) + b4.at(i, 2) + 2 * b4.at(i, 3);
        CHECK(dot == 0);
    }

    // any random kernel vector is an integer combination of the basis
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + iter % 4;
        std::vector<Int> v(n);
        bool nonzero = false;
        for (auto& x : v) {
            x = std::uniform_int_distribution<int>(-5, 5)(rng);
            if (x != 0) nonzero = true;
        }
        if (!nonzero) v[0] = 1;
        auto basis = hnf_kernel_basis(v);
        // build a random combination, check it solves back exactly
        std::vector<Int> w(n, Int(0));
        for (long r = 0; r < basis.rows(); ++r) {
            int c = std::uniform_int_distribution<int>(-4, 4)(rng);
            for (int j = 0; j < n; ++j) w[j] += c * basis.at(r, j);
        }
        Int dot = 0;
        for (int j = 0; j < n; ++j) dot += v[j] * w[j];
        REQUIRE(dot == 0);
        CHECK(solve_left(basis, w).has_value());
    }
}
