#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octma/lines.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

namespace {
OctonionQ unit(int i) { return OctonionQ::unit(i); }
} // namespace

TEST_CASE("line_spanned pinned cases") {
    const OctLine<Rational> l1 = line_spanned(OctVec2<Rational>{unit(0), unit(1)});
    REQUIRE(l1.slope.has_value());
    CHECK(*l1.slope == unit(1));

    const OctLine<Rational> linf = line_spanned(OctVec2<Rational>{OctonionQ{}, unit(0)});
    CHECK(!linf.slope.has_value());

    // e2 * inv(e1) = e2 * (-e1) = e4.
    const OctLine<Rational> l2 = line_spanned(OctVec2<Rational>{unit(1), unit(2)});
    REQUIRE(l2.slope.has_value());
    CHECK(*l2.slope == unit(4));

    CHECK_THROWS_AS(line_spanned(OctVec2<Rational>{}), ZeroVector);
}

TEST_CASE("same_line preconditions") {
    CHECK_THROWS_AS(same_line(OctVec2<Rational>{Rational(2) * unit(0), OctonionQ{}},
                              OctVec2<Rational>{unit(0), OctonionQ{}}),
                    NotUnit);
    CHECK(!same_line(OctVec2<Rational>{unit(0), OctonionQ{}},
                     OctVec2<Rational>{OctonionQ{}, unit(0)}));
}

TEST_CASE("theta pinned coupling example") {
    // The form x1^0 * x2^0: both symmetric slots carry 1/2; the off-diagonal
    // entry of theta is (1/8) * C_00 * e0 = 1/16.
    QuadForm16<Rational> B;
    B.at(0, 8) = B.at(8, 0) = Rational(1) / Rational(2);
    const HermMatrix2<Rational> t = theta_map(B);
    CHECK(t.a == Rational(0));
    CHECK(t.b == Rational(0));
    CHECK(t.q == (Rational(1) / Rational(16)) * unit(0));
}

TEST_CASE("j pinned cases") {
    const QuadForm16<Rational> e = j_map(HermMatrix2<Rational>::identity());
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            CHECK(e.at(i, j) == (i == j ? Rational(1) : Rational(0)));
}

TEST_CASE("line_average pinned cases") {
    const QuadForm16<Rational> eucl = j_map(HermMatrix2<Rational>::identity());
    Rng rng(octma::testing::kSeed, "test.lines.avg");
    for (int n = 0; n < 50; ++n) {
        const OctVec2<Rational> xi = random_vec2(rng);
        CHECK(line_average(eucl, xi) == Rational(1));
    }
    // j(diag(2,0)) vanishes on the line at infinity.
    const QuadForm16<Rational> d20 = j_map(HermMatrix2<Rational>{Rational(2), Rational(0), {}});
    CHECK(line_average(d20, OctVec2<Rational>{OctonionQ{}, unit(0)}) == Rational(0));
    CHECK_THROWS_AS(line_average(eucl, OctVec2<Rational>{}), ZeroVector);
}

TEST_CASE("theta is a left inverse of j") { run_and_check("lines.theta_j_identity"); }
TEST_CASE("line averaging identity") { run_and_check("lines.averaging"); }
TEST_CASE("same_line is an equivalence on lines") { run_and_check("lines.same_line"); }
TEST_CASE("infinitesimal equivariance of j") { run_and_check("lines.jjj_equivariance"); }
