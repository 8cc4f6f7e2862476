#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <optional>
#include <vector>

#include "qweyl/intertwiner.hpp"
#include "qweyl/matrix.hpp"

namespace qweyl {

using EigenC = Eigen::MatrixXcd;

inline EigenC to_eigen(const Matrix<Cplx>& m) {
    EigenC out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j);
    return out;
}

inline Matrix<Cplx> from_eigen(const EigenC& m) {
    Matrix<Cplx> out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), Cplx(0, 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m(i, j);
    return out;
}

// Rank decisions use a relative singular-value threshold.
inline constexpr double kRankRelTol = 1e-8;

inline int rank_float(const Matrix<Cplx>& m) {
    Eigen::JacobiSVD<EigenC> svd(to_eigen(m));
    auto sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double top = sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > kRankRelTol * top) ++r;
    return r;
}

inline double condition_number(const Matrix<Cplx>& m) {
    Eigen::JacobiSVD<EigenC> svd(to_eigen(m));
    auto sv = svd.singularValues();
    double lo = sv(sv.size() - 1);
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / lo;
}

inline double spectral_radius(const Matrix<Cplx>& m) {
    Eigen::ComplexEigenSolver<EigenC> es(to_eigen(m), false);
    double out = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        out = std::max(out, std::abs(es.eigenvalues()(i)));
    return out;
}

/// Float-backend intertwiner: SVD nullspace of the stacked system, then a
/// small search for a well-conditioned combination.
inline std::optional<Matrix<Cplx>> solve_intertwiner_float(
    const std::vector<Matrix<Cplx>>& gens_a, const std::vector<Matrix<Cplx>>& gens_b) {
    Matrix<Cplx> sys = intertwiner_system(gens_a, gens_b);
    Eigen::JacobiSVD<EigenC> svd(to_eigen(sys), Eigen::ComputeThinV);
    auto sv = svd.singularValues();
    double top = sv.size() ? sv(0) : 0.0;
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= kRankRelTol * std::max(top, 1.0)) ++null_dim;
    null_dim += sys.cols() - static_cast<int>(sv.size());
    if (null_dim == 0) return std::nullopt;
    int n = gens_a[0].rows(), m = gens_b[0].rows();
    const auto& v = svd.matrixV();
    auto col_to_matrix = [&](const Eigen::VectorXcd& c) {
        Matrix<Cplx> x(m, n, Cplx(0, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) x.at(i, j) = c(i * n + j);
        return x;
    };
    Matrix<Cplx> best = col_to_matrix(v.col(v.cols() - 1));
    double best_cond = condition_number(best);
    std::mt19937 rng(777);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int attempt = 0; attempt < 30 && null_dim > 1; ++attempt) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(sys.cols());
        for (int k = 0; k < null_dim; ++k)
            c += Cplx(g(rng), g(rng)) * v.col(v.cols() - 1 - k);
        Matrix<Cplx> cand = col_to_matrix(c);
        double cc = condition_number(cand);
        if (cc < best_cond) { best_cond = cc; best = cand; }
    }
    return best;
}

}  // namespace qweyl
