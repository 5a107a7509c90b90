#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "octma/lines.hpp"
#include "octma/ma_solver.hpp"
#include "octma/polycalc.hpp"
#include "octma/syzygy.hpp"

namespace octma {

// Octonion text form: `a0 + a1*e1 + ... + a7*e7`, rational coefficients,
// whitespace-insensitive, omitted terms zero.  Zero prints as `0`.
std::string to_text(const OctonionQ& o);
OctonionQ parse_octonion(const std::string& s);

// Hermitian matrix text form: `[[a, q], [conj, b]]`; the (2,1) slot must be
// the literal token `conj`.
std::string to_text(const HermMatrix2<Rational>& m);
HermMatrix2<Rational> parse_herm(const std::string& s);

// Polynomial text grammar (shared with the module files and the CLI):
//   poly := term (('+'|'-') term)*
//   term := rational ('*' var '^' nat)*
//   var  := 'x1_0'..'x1_7' | 'x2_0'..'x2_7'
// Printing is canonical: terms in the internal monomial order, factors by
// ascending variable, explicit exponents, no zero terms; parse(print(p)) == p.
std::string to_text(const Poly16& p);
Poly16 parse_poly(const std::string& s);

// QuadForm16: 16 rows of 16 rationals, row-major, whitespace-separated.
std::string to_text(const QuadForm16<Rational>& B);
QuadForm16<Rational> parse_quadform(const std::string& s);

// Module generator file: one ModVec per line, entries in the polynomial
// grammar, comma-separated.  All lines must have equal rank.
std::string to_text(const std::vector<ModVec>& gens);
std::vector<ModVec> parse_modvec_file(const std::string& s);

// TrigPoly JSON: list of {k: [16 ints], cos: float, sin: float}.
nlohmann::json to_json(const TrigPoly& p);
TrigPoly trig_from_json(const nlohmann::json& j);

// Solver config document:
//   {active_coords: ["x1_0", ...], max_freq, g0: {constant: {a,b,q:[8]},
//    potential?: trigpoly}, f: {trigpoly | nodal_file}, tol?, max_iter?,
//    damping?, nodes_per_dim?, pd_margin?, continuation?}
struct MaConfig {
    SolverConfig solver;
    HermMatrix2<double> g0_constant = HermMatrix2<double>::identity();
    std::optional<TrigPoly> g0_potential;
    TrigPoly f;                          // empty if f comes from a nodal file
    std::optional<std::string> f_nodal_file;

    TorusHermField g0() const { return TorusHermField(g0_constant, g0_potential); }
};
MaConfig parse_ma_config(const nlohmann::json& j);

// Coordinate names x1_0..x2_7 <-> variable indices 0..15.
int coord_index(const std::string& name);
std::string coord_name(int index);

nlohmann::json to_json(const SolveReport& r);

} // namespace octma
