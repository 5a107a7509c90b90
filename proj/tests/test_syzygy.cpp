#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "octma/io.hpp"
#include "octma/syzygy.hpp"
#include "suite_runner.hpp"

using namespace octma;
using octma::testing::run_and_check;

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("the two constructions of the ten quadrics agree") {
    CHECK(ten_quadrics() == ten_quadrics_literal());
}

TEST_CASE("every fixture column is an exact relation") {
    const std::vector<ModVec> fixture =
        parse_modvec_file(read_file(std::string(OCTMA_DATA_DIR) + "/appendix_matrix.txt"));
    REQUIRE(fixture.size() == 16);
    const std::vector<Poly16> Q = ten_quadrics();
    for (const ModVec& col : fixture) {
        REQUIRE(col.rank() == Q.size());
        Poly16 sum;
        for (std::size_t j = 0; j < Q.size(); ++j) sum += Q[j] * col.e[j];
        CHECK(sum.is_zero());
    }
}

TEST_CASE("fixture file matches the built-in matrix") {
    const std::vector<ModVec> fixture =
        parse_modvec_file(read_file(std::string(OCTMA_DATA_DIR) + "/appendix_matrix.txt"));
    const std::vector<ModVec> builtin = appendix_matrix();
    REQUIRE(fixture.size() == builtin.size());
    for (std::size_t i = 0; i < fixture.size(); ++i)
        for (std::size_t j = 0; j < fixture[i].rank(); ++j)
            CHECK(fixture[i].e[j] == builtin[i].e[j]);
}

TEST_CASE("computed syzygy module equals the fixture module") {
    const SyzygyBasis kernel = syzygy_kernel(ten_quadrics());
    CHECK(modules_equal(kernel.gens, appendix_matrix()));
}

TEST_CASE("quadric relations and signs") { run_and_check("syzygy.quadrics_relation"); }
TEST_CASE("module Groebner basics") { run_and_check("syzygy.buchberger"); }
