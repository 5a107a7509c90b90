#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octma/io.hpp"
#include "suite_runner.hpp"

using namespace octma;

TEST_CASE("octonion text round trip") {
    Rng rng(octma::testing::kSeed, "test.io.oct");
    for (int n = 0; n < 200; ++n) {
        const OctonionQ o = random_octonion(rng);
        CHECK(parse_octonion(to_text(o)) == o);
    }
    CHECK(parse_octonion("1 + 2*e1") == OctonionQ::unit(0) + Rational(2) * OctonionQ::unit(1));
    CHECK(parse_octonion("-3/4*e7")[7] == Rational(-3) / Rational(4));
}

TEST_CASE("octonion parse errors carry position") {
    try {
        parse_octonion("1 + 2*e9");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column > 1);
    }
    CHECK_THROWS_AS(parse_octonion(""), ParseError);
    CHECK_THROWS_AS(parse_octonion("1 +"), ParseError);
    CHECK_THROWS_AS(parse_octonion("1/0"), ParseError);
}

TEST_CASE("hermitian matrix text round trip") {
    Rng rng(octma::testing::kSeed, "test.io.herm");
    for (int n = 0; n < 200; ++n) {
        const HermMatrix2<Rational> m = random_herm(rng);
        const HermMatrix2<Rational> back = parse_herm(to_text(m));
        CHECK(back.a == m.a);
        CHECK(back.b == m.b);
        CHECK(back.q == m.q);
    }
    // The lower-left slot must be the literal token `conj`.
    CHECK_THROWS_AS(parse_herm("[[1, 0],[0, 1]]"), ParseError);
}

TEST_CASE("polynomial text round trip") {
    Rng rng(octma::testing::kSeed, "test.io.poly");
    for (int n = 0; n < 200; ++n) {
        const Poly16 p = random_poly(rng, 4, 10);
        CHECK(parse_poly(to_text(p)) == p);
    }
    const Poly16 p = parse_poly("2*x1_0^2 - 1/3*x2_7^1");
    CHECK(p.degree() == 2);
    CHECK_THROWS_AS(parse_poly("2*x3_0^1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x1_0"), ParseError);  // coefficient is mandatory
}

TEST_CASE("quadratic form text round trip") {
    Rng rng(octma::testing::kSeed, "test.io.quad");
    for (int n = 0; n < 20; ++n) {
        QuadForm16<Rational> B;
        for (int i = 0; i < 16; ++i)
            for (int j = i; j < 16; ++j) B.at(i, j) = B.at(j, i) = rng.rational();
        CHECK(parse_quadform(to_text(B)) == B);
    }
}

TEST_CASE("module vector file round trip") {
    const std::vector<ModVec> m = appendix_matrix();
    const std::vector<ModVec> back = parse_modvec_file(to_text(m));
    REQUIRE(back.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(back[i] == m[i]);
    // Inconsistent rank across lines is rejected.
    CHECK_THROWS_AS(parse_modvec_file("1*x1_0^1, 0\n0"), ParseError);
}

TEST_CASE("parse error line numbers in multi-line input") {
    try {
        parse_modvec_file("0, 0\n0, oops");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("coordinate names") {
    CHECK(coord_index("x1_0") == 0);
    CHECK(coord_index("x2_7") == 15);
    for (int i = 0; i < 16; ++i) CHECK(coord_index(coord_name(i)) == i);
    CHECK_THROWS_AS(coord_index("x1_8"), ParseError);
}

TEST_CASE("ma config parsing") {
    const nlohmann::json j = {
        {"active_coords", {"x1_0", "x2_0"}},
        {"max_freq", 2},
        {"g0", {{"constant", {{"a", 1.0}, {"b", 1.0}, {"q", {0, 0, 0, 0, 0, 0, 0, 0}}}}}},
        {"f", {{"trigpoly", nlohmann::json::array()}}},
        {"tol", 1e-9},
        {"max_iter", 12},
    };
    const MaConfig cfg = parse_ma_config(j);
    CHECK(cfg.solver.active_coords == std::vector<int>{0, 8});
    CHECK(cfg.solver.max_freq == 2);
    CHECK(cfg.solver.tol == 1e-9);
    CHECK(cfg.solver.max_iter == 12);
}
