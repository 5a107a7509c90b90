#pragma once

// Shared doctest glue: run a registered property suite and report its
// failures through doctest assertions.

#include <doctest.h>

#include <string>

#include "octma/suites.hpp"

namespace octma::testing {

inline constexpr std::uint64_t kSeed = 0xC0FFEE;

inline void run_and_check(const std::string& name, long count = 0) {
    const SuiteResult r = run_suite(name, kSeed, count);
    INFO("suite ", name, ": ", r.passed, " passed, ", r.failed, " failed");
    for (const auto& f : r.failures) {
        INFO("failure: ", f);
    }
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
}

} // namespace octma::testing
