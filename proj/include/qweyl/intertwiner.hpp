#pragma once

#include <optional>
#include <random>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

/// Stack the linear conditions X * A_i = B_i * X over all generator pairs,
/// acting on vec(X) with row-major vectorization (X is dimB x dimA).
template <class R>
Matrix<R> intertwiner_system(const std::vector<Matrix<R>>& gens_a,
                             const std::vector<Matrix<R>>& gens_b) {
    if (gens_a.size() != gens_b.size() || gens_a.empty())
        throw std::invalid_argument("intertwiner_system: generator lists must match");
    int n = gens_a[0].rows(), m = gens_b[0].rows();
    R zero = gens_a[0].zero_elem();
    int vars = m * n;
    Matrix<R> sys(static_cast<int>(gens_a.size()) * vars, vars, zero);
    for (size_t g = 0; g < gens_a.size(); ++g) {
        const Matrix<R>& a = gens_a[g];
        const Matrix<R>& b = gens_b[g];
        if (a.rows() != n || b.rows() != m)
            throw std::invalid_argument("intertwiner_system: inconsistent dimensions");
        int base = static_cast<int>(g) * vars;
        // row (u,v): sum_w X_{uw} A_{wv} - sum_w B_{uw} X_{wv} = 0
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < n; ++v) {
                int row = base + u * n + v;
                for (int w = 0; w < n; ++w) sys.at(row, u * n + w) += a.at(w, v);
                for (int w = 0; w < m; ++w) sys.at(row, w * n + v) -= b.at(u, w);
            }
    }
    return sys;
}

template <class R>
Matrix<R> unvec(const std::vector<R>& v, int rows, int cols) {
    Matrix<R> out(rows, cols, v[0] - v[0]);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = v[static_cast<size_t>(i) * cols + j];
    return out;
}

/// A maximal-rank X with X gens_a[i] = gens_b[i] X, or nullopt when only
/// X = 0 exists. Exact backends: Gaussian nullspace plus a small random
/// search over combinations for the rank.
template <class R>
std::optional<Matrix<R>> solve_intertwiner(const std::vector<Matrix<R>>& gens_a,
                                           const std::vector<Matrix<R>>& gens_b) {
    static_assert(ring_ops<R>::exact, "float backend uses solve_intertwiner_float");
    auto basis = nullspace(intertwiner_system(gens_a, gens_b));
    if (basis.empty()) return std::nullopt;
    int n = gens_a[0].rows(), m = gens_b[0].rows();
    Matrix<R> best = unvec(basis[0], m, n);
    int best_rank = rank_exact(best);
    int max_rank = std::min(m, n);
    if (best_rank == max_rank || basis.size() == 1) return best;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int attempt = 0; attempt < 40 && best_rank < max_rank; ++attempt) {
        std::vector<R> v(basis[0].size(), basis[0][0] - basis[0][0]);
        for (const auto& b : basis) {
            long c = coef(rng);
            if (c == 0) continue;
            R rc = make_long_ring(c, v[0]);
            for (size_t i = 0; i < v.size(); ++i) v[i] += b[i] * rc;
        }
        Matrix<R> cand = unvec(v, m, n);
        int r = rank_exact(cand);
        if (r > best_rank) { best_rank = r; best = cand; }
    }
    return best;
}

template <class R>
R make_long_ring(long c, const R& sample) {
    R one = ring_one_like<R>::get(sample);
    R out = one - one;
    long a = c < 0 ? -c : c;
    for (long i = 0; i < a; ++i) out += one;
    return c < 0 ? -out : out;
}

}  // namespace qweyl
