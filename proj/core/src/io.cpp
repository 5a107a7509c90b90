#include "octma/io.hpp"

#include <cctype>
#include <sstream>

#include "octma/errors.hpp"

namespace octma {

namespace {

// Character cursor with 1-based line/column tracking for ParseError.
struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    int line = 1, col = 1;

    explicit Cursor(const std::string& text) : s(text) {}

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }

    void advance() {
        if (done()) return;
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void skip_ws() {
        while (!done() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    std::string digits() {
        skip_ws();
        std::string d;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            d += peek();
            advance();
        }
        if (d.empty()) fail("expected a number");
        return d;
    }

    Rational rational() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        const Integer num(digits());
        Integer den = 1;
        if (eat('/')) den = Integer(digits());
        if (den == 0) fail("zero denominator");
        Rational r(num, den);
        return neg ? -r : r;
    }
};

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Parses one polynomial, stopping at ',' / ']' / newline / end.
Poly16 parse_poly_at(Cursor& c) {
    Poly16 p;
    c.skip_ws();
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (c.peek() == '-') {
            sign = -1;
            c.advance();
        } else if (c.peek() == '+') {
            c.advance();
        } else if (!first) {
            break;
        }
        first = false;

        Rational coef = c.rational();
        Monomial m;
        while (c.eat('*')) {
            c.skip_ws();
            if (c.peek() != 'x') c.fail("expected a variable x1_0..x2_7");
            c.advance();
            const std::string blk = c.digits();
            c.expect('_');
            const std::string comp = c.digits();
            if ((blk != "1" && blk != "2") || comp.size() != 1 || comp[0] > '7')
                c.fail("variable out of range (x1_0..x2_7)");
            const int v = 8 * (blk[0] - '1') + (comp[0] - '0');
            int e = 1;
            if (c.eat('^')) e = std::stoi(c.digits());
            Monomial f;
            f.e[v] = static_cast<std::uint8_t>(e);
            m = m * f;
        }
        p.add_term(m, sign * coef);
        c.skip_ws();
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    return p;
}

void expect_end(Cursor& c) {
    c.skip_ws();
    while (c.peek() == '\n') {
        c.advance();
        c.skip_ws();
    }
    if (!c.done()) c.fail("unexpected trailing input");
}

} // namespace

std::string to_text(const OctonionQ& o) {
    std::string out;
    for (int k = 0; k < 8; ++k) {
        const Rational& ck = o[k];
        if (ck == 0) continue;
        if (out.empty()) {
            out = ck < 0 ? "-" + rational_str(-ck) : rational_str(ck);
        } else {
            out += ck < 0 ? " - " + rational_str(-ck) : " + " + rational_str(ck);
        }
        if (k > 0) out += "*e" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

namespace {

OctonionQ parse_octonion_at(Cursor& c) {
    OctonionQ o;
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (c.peek() == '-') {
            sign = -1;
            c.advance();
        } else if (c.peek() == '+') {
            c.advance();
        } else if (!first) {
            break;
        }
        first = false;

        const Rational coef = c.rational();
        int k = 0;
        if (c.eat('*')) {
            c.skip_ws();
            if (c.peek() != 'e') c.fail("expected a basis unit e1..e7");
            c.advance();
            const std::string d = c.digits();
            if (d.size() != 1 || d[0] < '1' || d[0] > '7') c.fail("basis unit out of range");
            k = d[0] - '0';
        }
        o[k] += sign * coef;
        c.skip_ws();
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    return o;
}

} // namespace

OctonionQ parse_octonion(const std::string& s) {
    Cursor c(s);
    OctonionQ o = parse_octonion_at(c);
    expect_end(c);
    return o;
}

std::string to_text(const HermMatrix2<Rational>& m) {
    return "[[" + rational_str(m.a) + ", " + to_text(m.q) + "], [conj, " + rational_str(m.b) +
           "]]";
}

HermMatrix2<Rational> parse_herm(const std::string& s) {
    Cursor c(s);
    c.expect('[');
    c.expect('[');
    const Rational a = c.rational();
    c.expect(',');
    const OctonionQ q = parse_octonion_at(c);
    c.expect(']');
    c.expect(',');
    c.expect('[');
    c.skip_ws();
    for (char ch : std::string("conj")) {
        if (c.peek() != ch) c.fail("the (2,1) entry must be the literal token 'conj'");
        c.advance();
    }
    c.expect(',');
    const Rational b = c.rational();
    c.expect(']');
    c.expect(']');
    expect_end(c);
    return {a, b, q};
}

std::string to_text(const Poly16& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, coef] : p.terms()) {
        if (out.empty()) {
            out = coef < 0 ? "-" + rational_str(-coef) : rational_str(coef);
        } else {
            out += coef < 0 ? " - " + rational_str(-coef) : " + " + rational_str(coef);
        }
        for (int v = 0; v < 16; ++v) {
            if (m.e[v] == 0) continue;
            out += "*x" + std::to_string(v / 8 + 1) + "_" + std::to_string(v % 8) + "^" +
                   std::to_string(static_cast<int>(m.e[v]));
        }
    }
    return out;
}

Poly16 parse_poly(const std::string& s) {
    Cursor c(s);
    Poly16 p = parse_poly_at(c);
    expect_end(c);
    return p;
}

std::string to_text(const QuadForm16<Rational>& B) {
    std::string out;
    for (int r = 0; r < 16; ++r) {
        for (int col = 0; col < 16; ++col) {
            if (col) out += ' ';
            out += rational_str(B.at(r, col));
        }
        out += '\n';
    }
    return out;
}

QuadForm16<Rational> parse_quadform(const std::string& s) {
    Cursor c(s);
    QuadForm16<Rational> B;
    for (int r = 0; r < 16; ++r)
        for (int col = 0; col < 16; ++col) {
            while (c.peek() == '\n') c.advance();
            B.at(r, col) = c.rational();
        }
    expect_end(c);
    return B;
}

std::string to_text(const std::vector<ModVec>& gens) {
    std::string out;
    for (const auto& g : gens) {
        for (std::size_t j = 0; j < g.e.size(); ++j) {
            if (j) out += ", ";
            out += to_text(g.e[j]);
        }
        out += '\n';
    }
    return out;
}

std::vector<ModVec> parse_modvec_file(const std::string& s) {
    Cursor c(s);
    std::vector<ModVec> gens;
    while (true) {
        c.skip_ws();
        while (c.peek() == '\n') {
            c.advance();
            c.skip_ws();
        }
        if (c.done()) break;
        std::vector<Poly16> entries;
        entries.push_back(parse_poly_at(c));
        while (c.eat(',')) entries.push_back(parse_poly_at(c));
        if (!gens.empty() && entries.size() != gens.front().rank())
            c.fail("inconsistent rank across lines");
        ModVec v(entries.size());
        v.e = std::move(entries);
        gens.push_back(std::move(v));
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '\n') c.fail("expected end of line");
    }
    return gens;
}

nlohmann::json to_json(const TrigPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, m] : p.modes()) {
        nlohmann::json mode;
        mode["k"] = k;
        mode["cos"] = m.c;
        mode["sin"] = m.s;
        arr.push_back(mode);
    }
    return arr;
}

TrigPoly trig_from_json(const nlohmann::json& j) {
    TrigPoly p;
    for (const auto& mode : j) {
        Freq k{};
        const auto& kj = mode.at("k");
        if (kj.size() != 16) throw ParseError("frequency vector must have 16 entries", 1, 1);
        for (int v = 0; v < 16; ++v) k[static_cast<std::size_t>(v)] = kj[v].get<int>();
        if (mode.contains("cos")) p.add_cos(k, mode["cos"].get<double>());
        if (mode.contains("sin")) p.add_sin(k, mode["sin"].get<double>());
    }
    return p;
}

int coord_index(const std::string& name) {
    if (name.size() == 4 && name[0] == 'x' && (name[1] == '1' || name[1] == '2') &&
        name[2] == '_' && name[3] >= '0' && name[3] <= '7')
        return 8 * (name[1] - '1') + (name[3] - '0');
    throw ParseError("bad coordinate name '" + name + "' (expected x1_0..x2_7)", 1, 1);
}

std::string coord_name(int index) {
    return "x" + std::to_string(index / 8 + 1) + "_" + std::to_string(index % 8);
}

MaConfig parse_ma_config(const nlohmann::json& j) {
    MaConfig cfg;
    for (const auto& name : j.at("active_coords"))
        cfg.solver.active_coords.push_back(coord_index(name.get<std::string>()));
    cfg.solver.max_freq = j.at("max_freq").get<int>();
    if (j.contains("tol")) cfg.solver.tol = j["tol"].get<double>();
    if (j.contains("max_iter")) cfg.solver.max_iter = j["max_iter"].get<int>();
    if (j.contains("damping")) cfg.solver.max_damping = j["damping"].get<int>();
    if (j.contains("nodes_per_dim")) cfg.solver.nodes_per_dim = j["nodes_per_dim"].get<int>();
    if (j.contains("pd_margin")) cfg.solver.pd_margin = j["pd_margin"].get<double>();
    if (j.contains("continuation")) cfg.solver.continuation = j["continuation"].get<int>();

    if (j.contains("g0")) {
        const auto& g = j["g0"];
        if (g.contains("constant")) {
            const auto& m = g["constant"];
            cfg.g0_constant.a = m.at("a").get<double>();
            cfg.g0_constant.b = m.at("b").get<double>();
            if (m.contains("q"))
                for (int k = 0; k < 8; ++k) cfg.g0_constant.q[k] = m["q"][k].get<double>();
        }
        if (g.contains("potential")) cfg.g0_potential = trig_from_json(g["potential"]);
    }

    const auto& f = j.at("f");
    if (f.contains("trigpoly"))
        cfg.f = trig_from_json(f["trigpoly"]);
    else if (f.contains("nodal_file"))
        cfg.f_nodal_file = f["nodal_file"].get<std::string>();
    else
        throw ParseError("f must provide 'trigpoly' or 'nodal_file'", 1, 1);
    return cfg;
}

nlohmann::json to_json(const SolveReport& r) {
    nlohmann::json j;
    j["phi"] = to_json(r.phi);
    j["final_residual"] = r.final_residual;
    j["iterations"] = r.iterations;
    j["normalization_constant"] = r.norm_const_A;
    j["sup_phi"] = r.sup_phi;
    j["sup_laplacian"] = r.sup_laplacian;
    j["min_margin"] = r.min_margin;
    j["projection_residual"] = r.projection_residual;
    j["residual_history"] = r.residual_history;
    j["timing"] = {{"wall_time_sec", r.wall_time_sec}};
    return j;
}

} // namespace octma
