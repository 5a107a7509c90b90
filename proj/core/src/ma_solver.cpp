#include "octma/ma_solver.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "octma/errors.hpp"

namespace octma {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sylvester_margin(const HermMatrix2<double>& h) {
    return std::min(h.a, h.det());
}

// sup |p| over a grid twice as fine as the collocation grid.
double sup_on_dense_grid(const TrigPoly& p, const SolverConfig& cfg) {
    SolverConfig fine = cfg;
    fine.nodes_per_dim = 2 * cfg.grid_size() + 1;
    Grid g(fine);
    double sup = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n) sup = std::max(sup, std::abs(p.eval(g.point(n))));
    return sup;
}

} // namespace

Grid::Grid(const SolverConfig& cfg) {
    const std::size_t d = cfg.active_coords.size();
    const int N = cfg.grid_size();

    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(N);
    points_.reserve(total);
    for (std::size_t n = 0; n < total; ++n) {
        std::array<double, 16> x{};
        std::size_t rem = n;
        for (std::size_t i = 0; i < d; ++i) {
            x[static_cast<std::size_t>(cfg.active_coords[i])] =
                static_cast<double>(rem % static_cast<std::size_t>(N)) / N;
            rem /= static_cast<std::size_t>(N);
        }
        points_.push_back(x);
    }

    const int K = cfg.max_freq;
    std::size_t boxes = 1;
    for (std::size_t i = 0; i < d; ++i) boxes *= static_cast<std::size_t>(2 * K + 1);
    for (std::size_t n = 0; n < boxes; ++n) {
        Freq k{};
        std::size_t rem = n;
        for (std::size_t i = 0; i < d; ++i) {
            k[static_cast<std::size_t>(cfg.active_coords[i])] =
                static_cast<int>(rem % static_cast<std::size_t>(2 * K + 1)) - K;
            rem /= static_cast<std::size_t>(2 * K + 1);
        }
        // Keep one canonical representative per +-k pair, excluding k = 0.
        int first = 0;
        for (int v = 0; v < 16 && first == 0; ++v) first = k[v];
        if (first > 0) freqs_.push_back(k);
    }
}

TrigPoly Grid::project(const std::vector<double>& nodal) const {
    const double scale = 1.0 / static_cast<double>(size());
    std::vector<double> acc(size());

    TrigPoly p;
    for (std::size_t n = 0; n < size(); ++n) acc[n] = nodal[n];
    p.add_cos(Freq{}, scale * pairwise_sum(acc));

    for (const Freq& k : freqs_) {
        std::vector<double> vc(size()), vs(size());
        for (std::size_t n = 0; n < size(); ++n) {
            double th = 0.0;
            const auto& x = point(n);
            for (int v = 0; v < 16; ++v)
                if (k[v] != 0) th += k[v] * x[v];
            th *= kTwoPi;
            vc[n] = nodal[n] * std::cos(th);
            vs[n] = nodal[n] * std::sin(th);
        }
        p.add_cos(k, 2.0 * scale * pairwise_sum(vc));
        p.add_sin(k, 2.0 * scale * pairwise_sum(vs));
    }
    p.trim(0.0);
    return p;
}

double pairwise_sum(const std::vector<double>& v) {
    // Bottom-up pairwise reduction; result is independent of chunking.
    if (v.empty()) return 0.0;
    std::vector<double> w = v;
    while (w.size() > 1) {
        std::size_t half = (w.size() + 1) / 2;
        for (std::size_t i = 0; i + half < w.size(); ++i) w[i] += w[i + half];
        w.resize(half);
    }
    return w[0];
}

double normalization_constant(const TrigPoly& f, const TorusHermField& g0,
                              const SolverConfig& cfg) {
    Grid grid(cfg);
    std::vector<double> det_g0(grid.size()), weighted(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const HermMatrix2<double> g = g0.eval(grid.point(n));
        if (!g.is_positive_definite())
            throw NotPositiveDefinite("background metric is not positive definite at a node");
        det_g0[n] = g.det();
        weighted[n] = std::exp(f.eval(grid.point(n))) * det_g0[n];
    }
    return pairwise_sum(det_g0) / pairwise_sum(weighted);
}

Manufactured manufacture(const TrigPoly& phi_star, const TorusHermField& g0,
                         const SolverConfig& cfg) {
    Grid grid(cfg);
    const HermTrigMatrix h = hess_trig(phi_star);

    Manufactured out;
    out.f_nodes.resize(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const HermMatrix2<double> g = g0.eval(grid.point(n));
        const HermMatrix2<double> gp = g + h.eval(grid.point(n));
        if (sylvester_margin(gp) < cfg.pd_margin)
            throw NotPositiveDefinite("G0 + Hess(phi*) loses positivity at node " +
                                      std::to_string(n));
        out.f_nodes[n] = std::log(gp.det() / g.det());
    }
    out.f_projected = grid.project(out.f_nodes);
    for (std::size_t n = 0; n < grid.size(); ++n)
        out.projection_residual = std::max(
            out.projection_residual,
            std::abs(out.f_nodes[n] - out.f_projected.eval(grid.point(n))));
    return out;
}

std::vector<double> linearized_apply(const TrigPoly& phi, const TrigPoly& psi,
                                     const TorusHermField& g0, const SolverConfig& cfg) {
    Grid grid(cfg);
    const HermTrigMatrix hphi = hess_trig(phi);
    const HermTrigMatrix hpsi = hess_trig(psi);

    std::vector<double> out(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const auto& x = grid.point(n);
        const HermMatrix2<double> g = g0.eval(x) + hphi.eval(x);
        if (!g.is_positive_definite())
            throw NotPositiveDefinite("G0 + Hess(phi) is not positive definite at a node");
        out[n] = 2.0 * mixed_det(g, hpsi.eval(x)) / g0.eval(x).det();
    }
    return out;
}

namespace {

SolveReport solve_once(const TrigPoly& f, const TorusHermField& g0, const SolverConfig& cfg,
                       const TrigPoly& guess) {
    Grid grid(cfg);
    const std::size_t nodes = grid.size();

    // Basis: cos and sin of every canonical nonzero box frequency; the
    // constant mode is excluded, which imposes the mean-zero constraint.
    std::vector<TrigPoly> basis;
    for (const Freq& k : grid.frequencies()) {
        basis.push_back(TrigPoly::cosine(k));
        basis.push_back(TrigPoly::sine(k));
    }
    const std::size_t nb = basis.size();

    // Nodal Hessians of the basis functions (fixed across iterations).
    std::vector<std::vector<HermMatrix2<double>>> hb(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        const HermTrigMatrix h = hess_trig(basis[j]);
        hb[j].resize(nodes);
        for (std::size_t n = 0; n < nodes; ++n) hb[j][n] = h.eval(grid.point(n));
    }

    // Background and right-hand side at the nodes.
    const double A = normalization_constant(f, g0, cfg);
    std::vector<HermMatrix2<double>> g0n(nodes);
    std::vector<double> rhs(nodes);
    for (std::size_t n = 0; n < nodes; ++n) {
        g0n[n] = g0.eval(grid.point(n));
        rhs[n] = A * std::exp(f.eval(grid.point(n))) * g0n[n].det();
    }

    // Initial coefficients: Fourier analysis of the guess on the grid.
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nb));
    if (!guess.is_zero()) {
        std::vector<double> gv(nodes);
        for (std::size_t n = 0; n < nodes; ++n) gv[n] = guess.eval(grid.point(n));
        const TrigPoly proj = grid.project(gv);
        for (std::size_t j = 0; j < nb; ++j) {
            const Freq& k = grid.frequencies()[j / 2];
            auto it = proj.modes().find(k);
            if (it != proj.modes().end()) c[static_cast<Eigen::Index>(j)] =
                (j % 2 == 0) ? it->second.c : it->second.s;
        }
    }

    auto field_at = [&](const Eigen::VectorXd& coef, std::size_t n) {
        HermMatrix2<double> g = g0n[n];
        for (std::size_t j = 0; j < nb; ++j)
            g = g + coef[static_cast<Eigen::Index>(j)] * hb[j][n];
        return g;
    };
    auto residual = [&](const Eigen::VectorXd& coef, double* margin_out) {
        std::vector<double> r(nodes);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < nodes; ++n) {
            const HermMatrix2<double> g = field_at(coef, n);
            margin = std::min(margin, sylvester_margin(g));
            r[n] = g.det() - rhs[n];
        }
        if (margin_out) *margin_out = margin;
        return r;
    };
    auto sup_norm = [](const std::vector<double>& r) {
        double s = 0.0;
        for (double v : r) s = std::max(s, std::abs(v));
        return s;
    };

    SolveReport report;
    report.norm_const_A = A;

    double margin = 0.0;
    std::vector<double> r = residual(c, &margin);
    if (margin < cfg.pd_margin)
        throw NotPositiveDefinite("initial iterate is not positive definite with margin");
    double sup = sup_norm(r);
    report.residual_history.push_back(sup);

    int iter = 0;
    while (sup > cfg.tol) {
        if (iter >= cfg.max_iter)
            throw MaxIterations("Newton did not reach tolerance in " +
                                std::to_string(cfg.max_iter) + " iterations");
        ++iter;

        // Least-squares collocation step: J dc = -r with
        // J[n][j] = 2 det(G0 + Hess phi, Hess b_j) at node n.
        Eigen::MatrixXd J(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(nb));
        Eigen::VectorXd rv(static_cast<Eigen::Index>(nodes));
        for (std::size_t n = 0; n < nodes; ++n) {
            const HermMatrix2<double> g = field_at(c, n);
            for (std::size_t j = 0; j < nb; ++j)
                J(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j)) =
                    2.0 * mixed_det(g, hb[j][n]);
            rv[static_cast<Eigen::Index>(n)] = -r[n];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(J);
        if (qr.rank() < static_cast<Eigen::Index>(nb)) {
            const double cond = std::abs(qr.maxPivot()) /
                                std::max(std::abs(qr.matrixR()
                                                      .diagonal()
                                                      .cwiseAbs()
                                                      .minCoeff()),
                                         1e-300);
            throw SingularNewtonSystem("Newton system is rank-deficient (rank " +
                                       std::to_string(qr.rank()) + " of " + std::to_string(nb) +
                                       ", condition ~" + std::to_string(cond) + ")");
        }
        const Eigen::VectorXd dc = qr.solve(rv);

        // Backtracking: halve until the iterate stays in the cone and the
        // sup-residual strictly decreases.
        double lambda = 1.0;
        bool accepted = false;
        bool pd_failed = false;
        for (int h = 0; h <= cfg.max_damping; ++h) {
            const Eigen::VectorXd cand = c + lambda * dc;
            double cand_margin = 0.0;
            const std::vector<double> cand_r = residual(cand, &cand_margin);
            if (cand_margin >= cfg.pd_margin && sup_norm(cand_r) < sup) {
                c = cand;
                r = cand_r;
                sup = sup_norm(r);
                margin = cand_margin;
                accepted = true;
                break;
            }
            pd_failed = cand_margin < cfg.pd_margin;
            lambda *= 0.5;
        }
        if (!accepted) {
            if (pd_failed)
                throw NotPositiveDefinite("Newton step left the positivity cone even after " +
                                          std::to_string(cfg.max_damping) + " halvings");
            throw MaxIterations("damping failed to reduce the residual");
        }
        report.residual_history.push_back(sup);
    }

    TrigPoly phi;
    for (std::size_t j = 0; j < nb; ++j) {
        const Freq& k = grid.frequencies()[j / 2];
        if (j % 2 == 0)
            phi.add_cos(k, c[static_cast<Eigen::Index>(j)]);
        else
            phi.add_sin(k, c[static_cast<Eigen::Index>(j)]);
    }
    phi.trim(0.0);

    // Mean normalization: integral of phi * det(G0) = 0, exactly in coefficients.
    const TrigPoly det_g0 = det_trig(g0.matrix());
    const double shift = integrate_torus(phi, det_g0) / integrate_torus(det_g0);
    phi = phi - TrigPoly::constant(shift);

    report.phi = phi;
    report.final_residual = sup;
    report.iterations = iter;
    report.min_margin = margin;
    report.sup_phi = sup_on_dense_grid(phi, cfg);
    const HermTrigMatrix h = hess_trig(phi);
    report.sup_laplacian = sup_on_dense_grid(h.d1 + h.d2, cfg);
    return report;
}

} // namespace

SolveReport newton_solve(const TrigPoly& f, const TorusHermField& g0, const SolverConfig& cfg,
                         const TrigPoly& initial_guess) {
    const auto t0 = std::chrono::steady_clock::now();

    const int steps = std::max(1, cfg.continuation);
    TrigPoly guess = initial_guess;
    SolveReport report;
    int total_iterations = 0;
    for (int s = 1; s <= steps; ++s) {
        const TrigPoly fs = (static_cast<double>(s) / steps) * f;
        report = solve_once(fs, g0, cfg, guess);
        total_iterations += report.iterations;
        guess = report.phi;
    }
    report.iterations = total_iterations;

    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

SolveReport newton_solve(const TrigPoly& f, const TorusHermField& g0, const SolverConfig& cfg) {
    return newton_solve(f, g0, cfg, TrigPoly());
}

IbpResult ibp_defect(const TrigPoly& u, const TrigPoly& v, const TrigPoly& f,
                     const TorusHermField& g0) {
    const HermTrigMatrix g = g0.matrix() + hess_trig(u);
    IbpResult out;
    out.lhs = integrate_torus(f * mixed_det(hess_trig(v), g));
    out.rhs = integrate_torus(v * mixed_det(hess_trig(f), g));
    out.defect = out.lhs - out.rhs;
    return out;
}

DiagnosticsReport diagnostics(const TrigPoly& phi, const TorusHermField& g0,
                              const HermMatrix2<double>& g00, const SolverConfig& cfg) {
    if (!g00.is_positive_definite())
        throw NotPositiveDefinite("reference metric G00 must be positive definite");

    DiagnosticsReport out;
    out.sup_phi = sup_on_dense_grid(phi, cfg);

    // Delta phi = tr(G00^{-1} Hess phi) = 2 det(adj G00, Hess phi) / det G00.
    const HermTrigMatrix h = hess_trig(phi);
    TrigPoly lap = g00.b * h.d1 + g00.a * h.d2;
    for (int k = 0; k < 8; ++k) lap -= 2.0 * g00.q[k] * h.q[k];
    lap = (1.0 / g00.det()) * lap;
    out.sup_laplacian = sup_on_dense_grid(lap, cfg);

    Grid grid(cfg);
    out.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < grid.size(); ++n)
        out.min_margin = std::min(
            out.min_margin, sylvester_margin(g0.eval(grid.point(n)) + h.eval(grid.point(n))));
    return out;
}

} // namespace octma
