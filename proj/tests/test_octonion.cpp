#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octma/octonion.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

namespace {
OctonionQ unit(int i) { return OctonionQ::unit(i); }
} // namespace

TEST_CASE("pinned basis products") {
    CHECK(unit(1) * unit(2) == unit(4));
    CHECK(unit(2) * unit(1) == -unit(4));
    CHECK(unit(1) * unit(3) == unit(7));
    CHECK(unit(2) * unit(2) == -unit(0));
    CHECK(unit(0) * unit(5) == unit(5));
    for (int i = 1; i < 8; ++i) CHECK(unit(i) * unit(i) == -unit(0));
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j)
            if (i != j) CHECK(unit(i) * unit(j) == -(unit(j) * unit(i)));
}

TEST_CASE("conjugation and norm basics") {
    OctonionQ x;
    for (int k = 0; k < 8; ++k) x[k] = Rational(k + 1);
    CHECK(x.conj()[0] == Rational(1));
    for (int k = 1; k < 8; ++k) CHECK(x.conj()[k] == -x[k]);
    CHECK((x * x.conj()).re() == x.norm_sq());
    CHECK(x.re() == Rational(1));
    CHECK((x + x.conj()) == Rational(2) * OctonionQ(x.re()));
}

TEST_CASE("inverse") {
    Rng rng(octma::testing::kSeed, "test.octonion.inverse");
    for (int n = 0; n < 100; ++n) {
        OctonionQ x;
        for (int k = 0; k < 8; ++k) x[k] = rng.rational();
        if (x.is_zero()) continue;
        CHECK(x * x.inv() == unit(0));
        CHECK(x.inv() * x == unit(0));
    }
}

TEST_CASE("norm multiplicativity") { run_and_check("octonion.norm_multiplicativity"); }
TEST_CASE("anti-involution") { run_and_check("octonion.anti_involution"); }
TEST_CASE("product identities") { run_and_check("octonion.product_identities"); }
TEST_CASE("Moufang identities") { run_and_check("octonion.moufang"); }
TEST_CASE("associator alternation") { run_and_check("octonion.associator_alternating"); }
TEST_CASE("Cayley-Dickson doubling matches the table") { run_and_check("octonion.cayley_dickson"); }
TEST_CASE("Fano plane consistency") { run_and_check("octonion.fano_consistency"); }
