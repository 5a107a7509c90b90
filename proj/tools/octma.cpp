// octma: command-line driver for the library.
//
// Every run prints a human-readable summary to stderr and a JSON report to
// --out (or stdout).  Reports are deterministic for identical arguments;
// wall-clock time lives in the separate "timing" object.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "octma/io.hpp"
#include "octma/ma_solver.hpp"
#include "octma/polycalc.hpp"
#include "octma/suites.hpp"
#include "octma/syzygy.hpp"

using nlohmann::json;
using namespace octma;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0xC0FFEE;
    long count = 0;  // 0 = per-suite default
    std::string backend = "all";
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_report(const GlobalOpts& g, const std::string& command, bool ok, json result,
                 double wall_seconds, const std::string& input = "") {
    json report;
    report["command"] = command;
    report["seed"] = g.seed;
    report["count"] = g.count;
    report["backend"] = g.backend;
    if (!input.empty()) report["input"] = input;
    report["ok"] = ok;
    report["result"] = std::move(result);
    report["timing"] = {{"wall_time_sec", wall_seconds}};
    const std::string text = report.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        f << text;
        std::cerr << "report written to " << g.out << "\n";
    }
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// --- verify -------------------------------------------------------------------

int cmd_verify(const GlobalOpts& g) {
    Stopwatch sw;
    json suites = json::array();
    long total_passed = 0, total_failed = 0;
    for (const Suite& s : all_suites()) {
        if (g.backend != "all" && g.backend != s.backend) continue;
        const long count = s.fixed_count ? 0 : g.count;
        const SuiteResult r = run_suite(s.name, g.seed, count);
        total_passed += r.passed;
        total_failed += r.failed;
        json js;
        js["name"] = s.name;
        js["backend"] = s.backend;
        js["passed"] = r.passed;
        js["failed"] = r.failed;
        js["failures"] = r.failures;
        suites.push_back(std::move(js));
        std::cerr << (r.ok() ? "ok   " : "FAIL ") << s.name << " (" << r.passed << "/"
                  << (r.passed + r.failed) << ")\n";
    }
    const bool ok = total_failed == 0 && total_passed > 0;
    std::cerr << (ok ? "verify: all suites passed\n" : "verify: FAILURES PRESENT\n");
    emit_report(g, "verify", ok,
                {{"suites", suites}, {"total_passed", total_passed},
                 {"total_failed", total_failed}},
                sw.seconds());
    return ok ? 0 : 1;
}

// --- syzygy -------------------------------------------------------------------

int cmd_syzygy_compute(const GlobalOpts& g, const std::string& matrix_out) {
    Stopwatch sw;
    const SyzygyBasis k = syzygy_kernel(ten_quadrics());
    const std::string matrix = to_text(k.gens);
    if (matrix_out.empty()) {
        std::cout << matrix;
    } else {
        std::ofstream f(matrix_out, std::ios::binary);
        f << matrix;
    }
    std::cerr << "syzygy compute: " << k.gens.size() << " generators of rank "
              << (k.gens.empty() ? 0 : k.gens.front().rank()) << "\n";
    json result;
    result["generators"] = k.gens.size();
    result["rank"] = k.gens.empty() ? 0 : k.gens.front().rank();
    result["stats"] = {{"pairs_considered", k.stats.pairs_considered},
                       {"reductions", k.stats.reductions},
                       {"basis_size", k.stats.basis_size}};
    if (!matrix_out.empty()) result["matrix_file"] = matrix_out;
    emit_report(g, "syzygy compute", true, std::move(result), sw.seconds());
    return 0;
}

// Generator-by-generator match up to sign and ordering (not required for
// equality of the generated modules; reported for information).
bool matches_up_to_sign(const std::vector<ModVec>& a, const std::vector<ModVec>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const ModVec& v : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j]) continue;
            if (v == b[j] || (Rational(-1) * v) == b[j]) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

int cmd_syzygy_check(const GlobalOpts& g, const std::string& file) {
    Stopwatch sw;
    const std::vector<ModVec> gens = parse_modvec_file(read_file(file));
    const SyzygyBasis k = syzygy_kernel(ten_quadrics());
    const bool equal = modules_equal(gens, k.gens);
    const bool literal = matches_up_to_sign(gens, k.gens);
    std::cerr << "syzygy check: modules_equal = " << (equal ? "true" : "false")
              << ", generator-by-generator up to sign/order = " << (literal ? "true" : "false")
              << "\n";
    emit_report(g, "syzygy check", equal,
                {{"modules_equal", equal},
                 {"matches_up_to_sign_and_order", literal},
                 {"file_generators", gens.size()},
                 {"computed_generators", k.gens.size()}},
                sw.seconds(), file);
    return equal ? 0 : 1;
}

// --- hessian and current-check ------------------------------------------------

int cmd_hessian(const GlobalOpts& g, const std::string& file) {
    Stopwatch sw;
    const Poly16 u = parse_poly(read_file(file));
    const HermPolyMatrix h = hess_oct(u);
    json q = json::array();
    for (int p = 0; p < 8; ++p) q.push_back(to_text(h.q.c[p]));
    std::cerr << "hess_oct:\n  d1 = " << to_text(h.d1) << "\n  d2 = " << to_text(h.d2) << "\n";
    for (int p = 0; p < 8; ++p)
        if (!h.q.c[p].is_zero()) std::cerr << "  q[" << p << "] = " << to_text(h.q.c[p]) << "\n";
    emit_report(g, "hessian", true,
                {{"d1", to_text(h.d1)}, {"d2", to_text(h.d2)}, {"q", q}}, sw.seconds(), file);
    return 0;
}

int cmd_current_check(const GlobalOpts& g, const std::string& file) {
    Stopwatch sw;
    const Poly16 u = parse_poly(read_file(file));
    const HermPolyMatrix T = hess_oct(u);
    const auto [r1, r2] = closed_current_residual(T);
    const std::array<Poly16, 16> rs = closed_current_residual_scalar(T);

    bool oct_zero = true;
    json oct = json::array();
    for (const OctPoly* r : {&r1, &r2}) {
        json comps = json::array();
        for (int p = 0; p < 8; ++p) {
            oct_zero = oct_zero && r->c[p].is_zero();
            comps.push_back(to_text(r->c[p]));
        }
        oct.push_back(std::move(comps));
    }
    bool scalar_zero = true;
    json scal = json::array();
    for (const Poly16& p : rs) {
        scalar_zero = scalar_zero && p.is_zero();
        scal.push_back(to_text(p));
    }
    const bool ok = oct_zero && scalar_zero;
    std::cerr << "current-check: octonionic residuals "
              << (oct_zero ? "vanish" : "DO NOT vanish") << ", scalar residuals "
              << (scalar_zero ? "vanish" : "DO NOT vanish") << "\n";
    emit_report(g, "current-check", ok,
                {{"octonionic_zero", oct_zero},
                 {"scalar_zero", scalar_zero},
                 {"octonionic_residuals", oct},
                 {"scalar_residuals", scal}},
                sw.seconds(), file);
    return ok ? 0 : 1;
}

// --- ma -----------------------------------------------------------------------

TrigPoly load_f(const MaConfig& cfg, const std::string& config_dir) {
    if (!cfg.f_nodal_file) return cfg.f;
    std::string path = *cfg.f_nodal_file;
    if (!path.empty() && path.front() != '/' && !config_dir.empty())
        path = config_dir + "/" + path;
    std::istringstream in(read_file(path));
    std::vector<double> nodal;
    double v = 0.0;
    while (in >> v) nodal.push_back(v);
    Grid grid(cfg.solver);
    if (nodal.size() != grid.size())
        throw std::runtime_error("nodal file has " + std::to_string(nodal.size()) +
                                 " values, grid needs " + std::to_string(grid.size()));
    return grid.project(nodal);
}

MaConfig load_config(const std::string& file, int continuation_override) {
    MaConfig cfg = parse_ma_config(json::parse(read_file(file)));
    if (continuation_override > 0) cfg.solver.continuation = continuation_override;
    return cfg;
}

std::string dirname_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

int cmd_ma_solve(const GlobalOpts& g, const std::string& file, int continuation) {
    Stopwatch sw;
    const MaConfig cfg = load_config(file, continuation);
    const TrigPoly f = load_f(cfg, dirname_of(file));
    const SolveReport rep = newton_solve(f, cfg.g0(), cfg.solver);
    std::cerr << "ma solve: " << rep.iterations << " iterations, final residual "
              << rep.final_residual << ", sup|phi| = " << rep.sup_phi << "\n";
    emit_report(g, "ma solve", true, to_json(rep), sw.seconds(), file);
    return 0;
}

int cmd_ma_manufacture(const GlobalOpts& g, const std::string& file, int continuation) {
    Stopwatch sw;
    const MaConfig cfg = load_config(file, continuation);
    // The config's trig polynomial is the target potential phi*.
    const Manufactured man = manufacture(cfg.f, cfg.g0(), cfg.solver);
    std::cerr << "ma manufacture: projection residual " << man.projection_residual << "\n";
    emit_report(g, "ma manufacture", true,
                {{"f", to_json(man.f_projected)},
                 {"f_nodes", man.f_nodes},
                 {"projection_residual", man.projection_residual}},
                sw.seconds(), file);
    return 0;
}

int cmd_ma_diagnose(const GlobalOpts& g, const std::string& file, int continuation) {
    Stopwatch sw;
    const MaConfig cfg = load_config(file, continuation);
    // The config's trig polynomial is the potential phi to diagnose.
    const DiagnosticsReport d = diagnostics(cfg.f, cfg.g0(), cfg.g0_constant, cfg.solver);
    std::cerr << "ma diagnose: sup|phi| = " << d.sup_phi << ", sup|laplacian| = "
              << d.sup_laplacian << ", min margin = " << d.min_margin << "\n";
    emit_report(g, "ma diagnose", true,
                {{"sup_phi", d.sup_phi},
                 {"sup_laplacian", d.sup_laplacian},
                 {"min_margin", d.min_margin}},
                sw.seconds(), file);
    return 0;
}

// --- validate-report ------------------------------------------------------------
//
// Minimal structural validator for the bundled schema: supports type,
// required, properties, items and enum, which is all the schema uses.

bool validate_node(const json& schema, const json& value, std::string& why);

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    return false;
}

bool validate_node(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value)) {
        why = "expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == value;
        if (!found) {
            why = "value not in enum";
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"])
            if (!value.contains(k.get<std::string>())) {
                why = "missing required key '" + k.get<std::string>() + "'";
                return false;
            }
    if (schema.contains("properties"))
        for (const auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !validate_node(sub, value[k], why)) {
                why = "at '" + k + "': " + why;
                return false;
            }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate_node(schema["items"], item, why)) return false;
    return true;
}

int cmd_validate_report(const std::string& schema_file, const std::string& report_file) {
    const json schema = json::parse(read_file(schema_file));
    const json report = json::parse(read_file(report_file));
    std::string why;
    if (validate_node(schema, report, why)) {
        std::cerr << "report validates against the schema\n";
        return 0;
    }
    std::cerr << "schema violation: " << why << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"octonionic Hermitian linear algebra, quadric syzygies, and a "
                 "torus Monge-Ampere collocation solver"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed for property suites")->capture_default_str();
    app.add_option("--count", g.count, "instances per scalable suite (0 = suite default)")
        ->capture_default_str();
    app.add_option("--backend", g.backend, "suite filter: all, exact or float")
        ->check(CLI::IsMember({"all", "exact", "float"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write the JSON report to this path instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the property-test suites");
    verify->fallthrough();

    auto* syzygy = app.add_subcommand("syzygy", "syzygies of the ten quadrics");
    syzygy->require_subcommand(1);
    std::string matrix_out;
    auto* sz_compute = syzygy->add_subcommand(
        "compute", "compute the kernel basis and emit the generator matrix");
    sz_compute->add_option("matrix", matrix_out,
                           "write the matrix to this file (default: stdout)");
    std::string check_file;
    auto* sz_check = syzygy->add_subcommand(
        "check", "verify module equality against a generator matrix file");
    sz_check->add_option("file", check_file, "generator matrix file")->required();

    std::string hess_file;
    auto* hessian = app.add_subcommand("hessian", "octonionic Hessian of a polynomial file");
    hessian->add_option("file", hess_file, "polynomial file")->required();

    std::string current_file;
    auto* current = app.add_subcommand(
        "current-check", "closed-current residuals of the Hessian of a polynomial file");
    current->add_option("file", current_file, "polynomial file")->required();

    auto* ma = app.add_subcommand("ma", "torus Monge-Ampere solver");
    ma->require_subcommand(1);
    std::string ma_config;
    int continuation = 0;
    auto* ma_solve = ma->add_subcommand("solve", "Newton-solve the config's instance");
    ma_solve->add_option("config", ma_config, "JSON config file")->required();
    ma_solve->add_option("--continuation", continuation,
                         "homotopy steps in f (overrides the config)");
    auto* ma_man = ma->add_subcommand(
        "manufacture", "right-hand side manufactured from the config's potential");
    ma_man->add_option("config", ma_config, "JSON config file")->required();
    auto* ma_diag = ma->add_subcommand(
        "diagnose", "sup-norm diagnostics of the config's potential");
    ma_diag->add_option("config", ma_config, "JSON config file")->required();

    std::string schema_file, report_file;
    auto* validate = app.add_subcommand("validate-report",
                                        "check a JSON report against a schema document");
    validate->add_option("schema", schema_file, "schema file")->required();
    validate->add_option("report", report_file, "report file")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    for (CLI::App* sub : {syzygy, ma})
        for (CLI::App* s2 : sub->get_subcommands({})) s2->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*verify) return cmd_verify(g);
        if (*sz_compute) return cmd_syzygy_compute(g, matrix_out);
        if (*sz_check) return cmd_syzygy_check(g, check_file);
        if (*hessian) return cmd_hessian(g, hess_file);
        if (*current) return cmd_current_check(g, current_file);
        if (*ma_solve) return cmd_ma_solve(g, ma_config, continuation);
        if (*ma_man) return cmd_ma_manufacture(g, ma_config, continuation);
        if (*ma_diag) return cmd_ma_diagnose(g, ma_config, continuation);
        if (*validate) return cmd_validate_report(schema_file, report_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MaxIterations& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SingularNewtonSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
