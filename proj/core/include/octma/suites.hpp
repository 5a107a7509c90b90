#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octma/lie_action.hpp"
#include "octma/poly.hpp"
#include "octma/rng.hpp"
#include "octma/trig.hpp"

namespace octma {

// One named property suite: a seeded batch of randomized (or fixed) checks.
struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions

    bool ok() const { return failed == 0; }
    void check(bool cond, const std::string& what);
};

struct Suite {
    std::string name;           // "module.property"
    long default_count;         // instances at --count default
    bool fixed_count;           // true: count is structural, not scalable
    SuiteResult (*run)(std::uint64_t seed, long count);
    const char* backend;        // "exact" or "float" scalar backend
};

// Registry of every property suite, in deterministic order.
const std::vector<Suite>& all_suites();

// Runs one suite by name; count <= 0 selects the suite default.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, long count = 0);

// --- seeded random generators shared by suites and tests ---------------------

OctonionQ random_octonion(Rng& rng);
OctVec2<Rational> random_vec2(Rng& rng);             // nonzero
HermMatrix2<Rational> random_herm(Rng& rng);
HermMatrix2<Rational> random_pd_herm(Rng& rng);
HermMatrix2<double> random_herm_d(Rng& rng);
HermMatrix2<double> random_pd_herm_d(Rng& rng);
OctMatrix2<Rational> random_traceless(Rng& rng);
GeneratorD random_traceless_d(Rng& rng);
Poly16 random_poly(Rng& rng, int max_deg, int max_terms);
TrigPoly random_trig(Rng& rng, const std::vector<int>& coords, int max_freq, double amplitude);

} // namespace octma
