#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "octma/lie_action.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

namespace {
GroupElem sample_word(Rng& rng) {
    std::vector<std::pair<GeneratorD, double>> word;
    const int len = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < len; ++i) word.push_back({random_traceless_d(rng), rng.uniform(-0.5, 0.5)});
    return exp_word(word);
}
} // namespace

TEST_CASE("exponential words are unimodular and invertible") {
    Rng rng(octma::testing::kSeed, "test.lie.words");
    for (int n = 0; n < 25; ++n) {
        const GroupElem g = sample_word(rng);
        CHECK(std::abs(det16(g.m16) - 1.0) < 1e-7);
        const Rep16<double> gi = invert16(g.m16);
        const Rep16<double> prod = g.m16 * gi;
        const Rep16<double> id = Rep16<double>::identity();
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) CHECK(std::abs(prod.at(i, j) - id.at(i, j)) < 1e-8);
    }
}

TEST_CASE("exp_word is deterministic") {
    Rng a(octma::testing::kSeed, "test.lie.det");
    Rng b(octma::testing::kSeed, "test.lie.det");
    const GroupElem g1 = sample_word(a);
    const GroupElem g2 = sample_word(b);
    CHECK(g1.m16 == g2.m16);
    CHECK(g1.m10 == g2.m10);
}

TEST_CASE("traceless generators are required") {
    OctMatrix2<Rational> bad;
    bad.m00 = OctonionQ::unit(0);
    bad.m11 = OctonionQ::unit(0);
    CHECK_THROWS_AS(hat(bad), NotTraceless);
}

TEST_CASE("t-map equivariance") { run_and_check("lie.t_map_equivariance"); }
TEST_CASE("hat respects transposition and duality") { run_and_check("lie.hat_transpose"); }
TEST_CASE("group action is conformal on lines") { run_and_check("lie.conformality"); }
TEST_CASE("group action preserves the positive cone") { run_and_check("lie.cone_preservation"); }
TEST_CASE("16- and 10-dimensional representations are compatible") { run_and_check("lie.rep_compatibility"); }
