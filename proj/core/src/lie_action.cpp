#include "octma/lie_action.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace octma {

namespace {

template <int N>
Eigen::Matrix<double, N, N> to_eigen(const MatN<double, N>& M) {
    Eigen::Matrix<double, N, N> E;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) E(i, j) = M.at(i, j);
    return E;
}

template <int N>
MatN<double, N> from_eigen(const Eigen::Matrix<double, N, N>& E) {
    MatN<double, N> M;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M.at(i, j) = E(i, j);
    return M;
}

} // namespace

GroupElem exp_word(const std::vector<std::pair<GeneratorD, double>>& word) {
    Eigen::Matrix<double, 16, 16> g16 = Eigen::Matrix<double, 16, 16>::Identity();
    Eigen::Matrix<double, 10, 10> g10 = Eigen::Matrix<double, 10, 10>::Identity();
    for (const auto& [A, t] : word) {
        g16 = g16 * (t * to_eigen<16>(hat(A))).exp().eval();
        g10 = g10 * (t * to_eigen<10>(rho_matrix(A))).exp().eval();
    }
    GroupElem g;
    g.m16 = from_eigen<16>(g16);
    g.m10 = from_eigen<10>(g10);
    return g;
}

Rep16<double> invert16(const Rep16<double>& M) {
    return from_eigen<16>(to_eigen<16>(M).inverse().eval());
}

double det16(const Rep16<double>& M) {
    return to_eigen<16>(M).determinant();
}

} // namespace octma
