#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octma/polycalc.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

TEST_CASE("hessian of the squared norm") {
    // u = |x1|^2 has octonionic Hessian 16 * diag(1, 0).
    Poly16 u;
    for (int p = 0; p < 8; ++p) {
        const Monomial m = Monomial::var(QuadForm16<Rational>::idx(1, p)) *
                           Monomial::var(QuadForm16<Rational>::idx(1, p));
        u = u + Poly16::term(m, Rational(1));
    }
    const HermPolyMatrix h = hess_oct(u);
    CHECK(h.d1.eval(std::array<Rational, 16>{}) == Rational(16));
    CHECK(h.d2.is_zero());
    for (int p = 0; p < 8; ++p) CHECK(h.q.c[p].is_zero());
}

TEST_CASE("derivatives commute") {
    Rng rng(octma::testing::kSeed, "test.polycalc.comm");
    for (int n = 0; n < 50; ++n) {
        const Poly16 u = random_poly(rng, 4, 12);
        const int i = static_cast<int>(rng.below(16));
        const int j = static_cast<int>(rng.below(16));
        CHECK(u.derivative(i).derivative(j) == u.derivative(j).derivative(i));
    }
}

TEST_CASE("hessian orders and symmetry") { run_and_check("polycalc.hess_orders"); }
TEST_CASE("octonionic hessians give closed currents") { run_and_check("polycalc.closed_current"); }
TEST_CASE("hessian of a quadratic recovers theta") { run_and_check("polycalc.theta_compat"); }
TEST_CASE("psi potentials are harmonic where required") { run_and_check("polycalc.psi_laplacian"); }
TEST_CASE("determinant in divergence form") { run_and_check("polycalc.divergence"); }
TEST_CASE("hessian equivariance defect vanishes") { run_and_check("polycalc.equivariance_defect"); }
TEST_CASE("elementary inequality at diagonal-hessian points") { run_and_check("polycalc.c49"); }
TEST_CASE("line laplacian inequality at positive points") { run_and_check("polycalc.delta_l"); }
TEST_CASE("fourth-order expansion terms") { run_and_check("polycalc.fourth_order"); }
