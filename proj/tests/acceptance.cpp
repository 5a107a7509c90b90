// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "octma/suites.hpp"
#include "octma/syzygy.hpp"

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;

bool suite_ok(const std::string& name, long count, std::string& detail) {
    const octma::SuiteResult r = octma::run_suite(name, kSeed, count);
    detail += " " + name + "=" + std::to_string(r.passed) + "/" +
              std::to_string(r.passed + r.failed);
    if (!r.failures.empty()) detail += " (" + r.failures.front() + ")";
    return r.ok() && r.passed > 0;
}

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    using namespace octma;

    const std::vector<Criterion> criteria = {
        {1, "syzygy basis of the ten quadrics matches the transcribed 10x16 matrix",
         [](std::string& d) {
             const auto t0 = std::chrono::steady_clock::now();
             bool ok = suite_ok("syzygy.quadrics_relation", 0, d);
             const SyzygyBasis k = syzygy_kernel(ten_quadrics());
             ok = ok && modules_equal(k.gens, appendix_matrix());
             const double dt = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
             d += " kernel_gens=" + std::to_string(k.gens.size()) +
                  " time=" + std::to_string(dt) + "s";
             return ok && dt < 600.0;
         }},
        {2, "octonionic hessians give closed currents (500 random degree<=5 potentials)",
         [](std::string& d) { return suite_ok("polycalc.closed_current", 500, d); }},
        {3, "octonion algebra identities on 10^4 exact-rational instances",
         [](std::string& d) {
             bool ok = suite_ok("octonion.norm_multiplicativity", 10000, d);
             ok = suite_ok("octonion.anti_involution", 10000, d) && ok;
             ok = suite_ok("octonion.moufang", 10000, d) && ok;
             ok = suite_ok("octonion.product_identities", 10000, d) && ok;
             ok = suite_ok("octonion.associator_alternating", 10000, d) && ok;
             return ok;
         }},
        {4, "theta o j = Id and the line-averaging identity, exact on 10^3 instances",
         [](std::string& d) {
             bool ok = suite_ok("lines.theta_j_identity", 1000, d);
             ok = suite_ok("lines.averaging", 1000, d) && ok;
             return ok;
         }},
        {5, "equivariance: infinitesimal identities exact on 10^3; group words numeric",
         [](std::string& d) {
             bool ok = suite_ok("polycalc.equivariance_defect", 1000, d);
             ok = suite_ok("lines.jjj_equivariance", 1000, d) && ok;
             ok = suite_ok("lie.conformality", 100, d) && ok;
             ok = suite_ok("lie.cone_preservation", 100, d) && ok;
             return ok;
         }},
        {6, "mixed-determinant identities and positivity on 10^3 samples",
         [](std::string& d) {
             bool ok = suite_ok("herm2.mixed_det_trace", 1000, d);
             ok = suite_ok("herm2.positivity", 1000, d) && ok;
             return ok;
         }},
        {7, "divergence form of the determinant, exact on 200 degree<=4 potentials",
         [](std::string& d) { return suite_ok("polycalc.divergence", 200, d); }},
        {8, "integration by parts on the torus, 100 bandlimited triples",
         [](std::string& d) { return suite_ok("ma.ibp", 100, d); }},
        {9, "manufactured Monge-Ampere solutions recovered by Newton",
         [](std::string& d) {
             const auto t0 = std::chrono::steady_clock::now();
             const bool ok = suite_ok("ma.manufactured", 0, d);
             const double dt = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
             d += " time=" + std::to_string(dt) + "s";
             return ok && dt < 60.0;
         }},
        {10, "normalization constant A",
         [](std::string& d) { return suite_ok("ma.normalization", 0, d); }},
        {11, "inequality spot-suite",
         [](std::string& d) {
             bool ok = suite_ok("polycalc.c49", 200, d);
             ok = suite_ok("herm2.trace_inequalities", 1000, d) && ok;
             ok = suite_ok("polycalc.delta_l", 200, d) && ok;
             return ok;
         }},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail += std::string(" exception: ") + e.what();
        }
        all = all && ok;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << c.title << " [" << detail << (detail.empty() ? "" : " ") << "]\n";
    }
    std::cout << (all ? "ACCEPTANCE: all 11 criteria passed\n"
                      : "ACCEPTANCE: FAILURES PRESENT\n");
    return all ? 0 : 1;
}
