#pragma once

#include <vector>

#include "octma/trig.hpp"

namespace octma {

// Discretization of the torus Monge-Ampere problem
//   det(G0 + Hess phi) = e^f det G0
// on the active coordinate subset: frequency box |k|_inf <= max_freq
// supported on active_coords, tensor collocation grid of nodes_per_dim
// points per active coordinate.
struct SolverConfig {
    std::vector<int> active_coords;  // coordinate indices 0..15
    int max_freq = 1;                // K
    double tol = 1e-10;              // Newton sup-residual tolerance
    int max_iter = 30;
    int max_damping = 20;            // backtracking halvings per step
    int nodes_per_dim = 0;           // 0 -> 2*max_freq + 1 (square, alias-free DFT)
    double pd_margin = 1e-8;         // Sylvester margin delta
    int continuation = 1;            // homotopy steps in f

    int grid_size() const { return nodes_per_dim > 0 ? nodes_per_dim : 2 * max_freq + 1; }
};

struct SolveReport {
    TrigPoly phi;
    double final_residual = 0.0;
    int iterations = 0;
    double norm_const_A = 1.0;
    double sup_phi = 0.0;
    double sup_laplacian = 0.0;
    double min_margin = 0.0;
    double projection_residual = 0.0;  // nodal f vs its bandlimited projection
    double wall_time_sec = 0.0;
    std::vector<double> residual_history;
};

// Tensor collocation grid over the active coordinates.
class Grid {
public:
    explicit Grid(const SolverConfig& cfg);

    std::size_t size() const { return points_.size(); }
    const std::array<double, 16>& point(std::size_t n) const { return points_[n]; }

    // All canonical nonzero frequency vectors in the box.
    const std::vector<Freq>& frequencies() const { return freqs_; }

    // Bandlimited projection of nodal values by discrete Fourier analysis
    // (exact on the box: the grid over-resolves mode products).
    TrigPoly project(const std::vector<double>& nodal) const;

private:
    std::vector<std::array<double, 16>> points_;
    std::vector<Freq> freqs_;
};

// Deterministic pairwise summation, independent of traversal chunking.
double pairwise_sum(const std::vector<double>& v);

// A = integral(det G0) / integral(e^f det G0), by grid quadrature.
double normalization_constant(const TrigPoly& f, const TorusHermField& g0,
                              const SolverConfig& cfg);

struct Manufactured {
    std::vector<double> f_nodes;
    TrigPoly f_projected;
    double projection_residual = 0.0;
};

// f = log(det(G0 + Hess phi*) / det G0) sampled on the grid, plus its
// bandlimited projection; (phi*, f) is then an exact nodal solution.
Manufactured manufacture(const TrigPoly& phi_star, const TorusHermField& g0,
                         const SolverConfig& cfg);

// Nodal values of the linearization DM_phi(psi) = 2 det(G0+Hess phi, Hess psi)/det G0.
std::vector<double> linearized_apply(const TrigPoly& phi, const TrigPoly& psi,
                                     const TorusHermField& g0, const SolverConfig& cfg);

SolveReport newton_solve(const TrigPoly& f, const TorusHermField& g0, const SolverConfig& cfg);
SolveReport newton_solve(const TrigPoly& f, const TorusHermField& g0, const SolverConfig& cfg,
                         const TrigPoly& initial_guess);

struct IbpResult {
    double lhs = 0.0;   // integral of f * det(Hess v, G0)
    double rhs = 0.0;   // integral of v * det(Hess f, G0)
    double defect = 0.0;
};

// Integration-by-parts symmetry on the torus, computed exactly from the
// constant Fourier coefficients of the symbolic products (u is the optional
// weight potential of the symmetric pairing; pass zero for the plain form).
IbpResult ibp_defect(const TrigPoly& u, const TrigPoly& v, const TrigPoly& f,
                     const TorusHermField& g0);

struct DiagnosticsReport {
    double sup_phi = 0.0;
    double sup_laplacian = 0.0;  // sup |tr(G00^{-1} Hess phi)|
    double min_margin = 0.0;     // minimal Sylvester margin of G0 + Hess phi
};

DiagnosticsReport diagnostics(const TrigPoly& phi, const TorusHermField& g0,
                              const HermMatrix2<double>& g00, const SolverConfig& cfg);

} // namespace octma
