#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "octma/io.hpp"
#include "octma/ma_solver.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

namespace {
Freq unit_freq(int v) {
    Freq k{};
    k[static_cast<std::size_t>(v)] = 1;
    return k;
}
} // namespace

TEST_CASE("trig evaluation and derivatives pinned") {
    const TrigPoly p = TrigPoly::cosine(unit_freq(0), 2.0);
    std::array<double, 16> x{};
    CHECK(p.eval(x) == doctest::Approx(2.0));
    x[0] = 0.25;
    CHECK(p.eval(x) == doctest::Approx(0.0).epsilon(1e-12));
    const TrigPoly d = p.derivative(0);
    // d/dx 2 cos(2 pi x) = -4 pi sin(2 pi x).
    x[0] = 0.125;
    CHECK(d.eval(x) == doctest::Approx(-4.0 * std::numbers::pi * std::sin(std::numbers::pi / 4)));
    CHECK(p.derivative(3).is_zero());
}

TEST_CASE("product-to-sum and integration") {
    const TrigPoly c = TrigPoly::cosine(unit_freq(0));
    const TrigPoly s = TrigPoly::sine(unit_freq(0));
    CHECK(integrate_torus(c) == doctest::Approx(0.0));
    CHECK(integrate_torus(c * c) == doctest::Approx(0.5));
    CHECK(integrate_torus(s * s) == doctest::Approx(0.5));
    CHECK(integrate_torus(c * s) == doctest::Approx(0.0));
    CHECK(integrate_torus(c, c) == doctest::Approx(0.5));
}

TEST_CASE("trig JSON round trip") {
    Rng rng(octma::testing::kSeed, "test.trig.json");
    for (int n = 0; n < 25; ++n) {
        const TrigPoly p = random_trig(rng, {0, 3, 9}, 2, 1.0);
        const TrigPoly q = trig_from_json(to_json(p));
        const TrigPoly diff = p - q;
        std::array<double, 16> x{};
        for (int t = 0; t < 20; ++t) {
            for (int v : {0, 3, 9}) x[static_cast<std::size_t>(v)] = rng.uniform();
            CHECK(std::abs(diff.eval(x)) < 1e-12);
        }
    }
}

TEST_CASE("grid projection inverts band-limited data") {
    SolverConfig cfg;
    cfg.active_coords = {0, 8};
    cfg.max_freq = 2;
    Grid grid(cfg);
    Rng rng(octma::testing::kSeed, "test.trig.grid");
    const TrigPoly p = random_trig(rng, {0, 8}, 2, 1.0);
    std::vector<double> nodal(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) nodal[n] = p.eval(grid.point(n));
    const TrigPoly q = grid.project(nodal);
    for (std::size_t n = 0; n < grid.size(); ++n)
        CHECK(std::abs(q.eval(grid.point(n)) - nodal[n]) < 1e-10);
}

TEST_CASE("solver exceptions carry exit semantics") {
    const TorusHermField g0(HermMatrix2<double>::identity());
    SolverConfig cfg;
    cfg.active_coords = {0};
    cfg.max_freq = 3;
    CHECK_THROWS_AS(manufacture(TrigPoly::cosine(unit_freq(0), 0.1), g0, cfg),
                    NotPositiveDefinite);
    SolverConfig tight = cfg;
    tight.max_iter = 0;
    const Manufactured man = manufacture(TrigPoly::cosine(unit_freq(0), 0.01), g0, cfg);
    CHECK_THROWS_AS(newton_solve(man.f_projected, g0, tight), MaxIterations);
}

TEST_CASE("hessians of trig potentials") { run_and_check("ma.hess_trig"); }
TEST_CASE("normalization constant") { run_and_check("ma.normalization"); }
TEST_CASE("integration by parts on the torus") { run_and_check("ma.ibp"); }
TEST_CASE("linearized operator") { run_and_check("ma.linearized"); }
TEST_CASE("manufactured solutions are recovered") { run_and_check("ma.manufactured"); }
TEST_CASE("solver guards") { run_and_check("ma.solver_guards"); }
