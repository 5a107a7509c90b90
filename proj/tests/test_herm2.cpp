#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octma/herm2.hpp"
#include "octma/herm2_numeric.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

TEST_CASE("pinned determinant and adjugate") {
    HermMatrix2<Rational> m{Rational(2), Rational(3), OctonionQ::unit(1)};
    CHECK(m.det() == Rational(5));
    const HermMatrix2<Rational> a = m.adj();
    CHECK(a.a == Rational(3));
    CHECK(a.b == Rational(2));
    CHECK(a.q == -OctonionQ::unit(1));
    CHECK(m.inverse().a == Rational(3) / Rational(5));
    CHECK(mixed_det(m, m) == m.det());
    CHECK(mixed_det(m, HermMatrix2<Rational>::identity()) == (m.a + m.b) / Rational(2));
}

TEST_CASE("positivity characterization") {
    HermMatrix2<Rational> pd{Rational(2), Rational(3), OctonionQ::unit(2)};
    CHECK(pd.is_positive_definite());
    HermMatrix2<Rational> neg{Rational(-1), Rational(3), OctonionQ{}};
    CHECK(!neg.is_positive_definite());
    HermMatrix2<Rational> indef{Rational(1), Rational(1), Rational(2) * OctonionQ::unit(0)};
    CHECK(!indef.is_positive_definite());
}

TEST_CASE("diagonalization reconstructs the matrix") {
    Rng rng(octma::testing::kSeed, "test.herm2.diag");
    for (int n = 0; n < 200; ++n) {
        const HermMatrix2<double> m = random_herm_d(rng);
        const DiagResult d = diagonalize(m);
        // Eigenvalues solve the characteristic polynomial of (trace, det).
        const double tr = m.a + m.b;
        for (double lam : {d.D.a, d.D.b}) {
            CHECK(std::abs(lam * lam - tr * lam + m.det()) < 1e-8);
        }
        CHECK(d.D.q.norm_sq() < 1e-18);
    }
}

TEST_CASE("mixed determinant is the polarized determinant") { run_and_check("herm2.mixed_det_trace"); }
TEST_CASE("positivity properties") { run_and_check("herm2.positivity"); }
TEST_CASE("spectrum and diagonalize") { run_and_check("herm2.spectrum_diagonalize"); }
TEST_CASE("trace inequalities") { run_and_check("herm2.trace_inequalities"); }
TEST_CASE("log-det concavity along segments") { run_and_check("herm2.logdet_curve"); }
