#pragma once

#include <vector>

#include "octma/poly.hpp"

namespace octma {

// Element of the free module A^rank over the 16-variable polynomial ring.
struct ModVec {
    std::vector<Poly16> e;

    explicit ModVec(std::size_t rank = 0) : e(rank) {}
    std::size_t rank() const { return e.size(); }

    bool is_zero() const {
        for (const auto& p : e)
            if (!p.is_zero()) return false;
        return true;
    }

    friend ModVec operator+(const ModVec& a, const ModVec& b) {
        ModVec r(a.rank());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend ModVec operator-(const ModVec& a, const ModVec& b) {
        ModVec r(a.rank());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend ModVec operator*(const Rational& s, const ModVec& a) {
        ModVec r(a.rank());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = s * a.e[i];
        return r;
    }
    friend bool operator==(const ModVec& a, const ModVec& b) { return a.e == b.e; }
};

// Leading module term under the fixed order: position-over-term with lower
// component index dominating, graded reverse lexicographic on monomials.
struct ModTerm {
    int comp = -1;  // -1 = zero element
    Monomial m;
    Rational c;
};

ModTerm leading_term(const ModVec& v);

// Reduced Groebner basis of a submodule of A^rank.
class ModuleGB {
public:
    struct Stats {
        long pairs_considered = 0;
        long reductions = 0;
        std::size_t basis_size = 0;
    };

    explicit ModuleGB(std::vector<ModVec> gens);

    const std::vector<ModVec>& basis() const { return basis_; }
    const Stats& stats() const { return stats_; }

    ModVec normal_form(const ModVec& v) const;
    bool is_member(const ModVec& v) const { return normal_form(v).is_zero(); }

private:
    std::vector<ModVec> basis_;
    Stats stats_;
};

struct SyzygyBasis {
    std::vector<ModVec> gens;  // generators of the kernel, rank = J
    ModuleGB::Stats stats;
};

// Kernel of the row map A^J -> A, Q -> sum Q_j P_j, via the graph submodule
// of A^{1+J}: elements of its Groebner basis with zero first component,
// projected to the last J coordinates.
SyzygyBasis syzygy_kernel(const std::vector<Poly16>& row);

// Mutual membership of the generated submodules.
bool modules_equal(const std::vector<ModVec>& A, const std::vector<ModVec>& B);

// --- The quadric instance ----------------------------------------------------
//
// The ten quadrics and the transcribed 16-generator kernel matrix use an
// XOR-indexed octonion structure: e_i e_j = kXorSgn[i][j] * e_{i xor j},
// oriented Fano lines {123, 145, 176, 246, 257, 347, 365}.  This is a
// different (isomorphic) basis from the table in octonion.hpp; it is the
// convention this kernel instance is stated in, kept local to this module.
extern const std::array<std::array<int, 8>, 8> kXorSgn;

// P1 = |x|^2, P2 = |y|^2, P_{k+3} = component k of x * conj(y) in the XOR
// basis, generated programmatically (x = block-1 variables, y = block-2).
std::vector<Poly16> ten_quadrics();

// The same ten quadrics transcribed term by term; equality with the
// generated ones is asserted by tests.
std::vector<Poly16> ten_quadrics_literal();

// The transcribed 16 kernel generators (rank-10 vectors, degree <= 1).
std::vector<ModVec> appendix_matrix();

} // namespace octma
