#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/rational.hpp"

namespace qweyl {

/// Monomial basis of a finite-dimensional piece of C[M_{k,n}]. Monomials are
/// exponent matrices m in N^{k x n}, stored flattened row-major and ordered
/// lexicographically descending, so x_{11}^d comes first.
struct PolyBasis {
    int k = 0, n = 0;
    std::vector<std::vector<int>> mons;
    std::map<std::vector<int>, int> index_of;

    int dim() const { return static_cast<int>(mons.size()); }
    int index(const std::vector<int>& m) const {
        auto it = index_of.find(m);
        if (it == index_of.end()) throw std::logic_error("PolyBasis: monomial outside basis");
        return it->second;
    }
    int exponent(int mono, int a, int j) const { return mons[mono][a * n + j]; }

    void finalize() {
        std::sort(mons.begin(), mons.end(), std::greater<>());
        for (int i = 0; i < dim(); ++i) index_of[mons[i]] = i;
    }
};

namespace detail {

inline void enumerate_sums(int slots, int total, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        enumerate_sums(slots - 1, total - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Homogeneous component of total degree d.
inline std::shared_ptr<const PolyBasis> poly_basis_degree(int k, int n, int d) {
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const PolyBasis>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(k, n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<PolyBasis>();
    b->k = k;
    b->n = n;
    std::vector<int> cur;
    detail::enumerate_sums(k * n, d, cur, b->mons);
    b->finalize();
    cache[key] = b;
    return b;
}

/// Component with fixed per-row degrees (n = 2 only): row a has total degree
/// lambda_a in its two variables.
inline std::shared_ptr<const PolyBasis> poly_basis_multidegree(int k,
                                                               const std::vector<long>& lambda) {
    auto b = std::make_shared<PolyBasis>();
    b->k = k;
    b->n = 2;
    std::vector<std::vector<int>> rows_choices;
    std::vector<int> mono(k * 2, 0);
    // mixed-radix walk over t_a = m_{a2} in 0..lambda_a
    std::vector<int> t(k, 0);
    while (true) {
        for (int a = 0; a < k; ++a) {
            mono[2 * a] = static_cast<int>(lambda[a]) - t[a];
            mono[2 * a + 1] = t[a];
        }
        b->mons.push_back(mono);
        int a = k - 1;
        while (a >= 0 && t[a] == lambda[a]) t[a--] = 0;
        if (a < 0) break;
        ++t[a];
    }
    // mixed-radix order coincides with descending lex on the flattened matrix
    for (int i = 0; i < b->dim(); ++i) b->index_of[b->mons[i]] = i;
    return b;
}

/// Matrix of sum_{j in cols} x_{aj} d/dx_{bj} (a gl_k elementary matrix acting
/// through the chosen columns; 0-based indices).
inline Matrix<Rat> glk_op(const PolyBasis& b, int a, int bb, const std::vector<int>& cols) {
    if (a < 0 || a >= b.k || bb < 0 || bb >= b.k)
        throw std::invalid_argument("glk_op: row index out of range");
    Matrix<Rat> out(b.dim(), b.dim(), Rat(0));
    for (int src = 0; src < b.dim(); ++src)
        for (int j : cols) {
            int e = b.exponent(src, bb, j);
            if (e == 0) continue;
            std::vector<int> m = b.mons[src];
            m[bb * b.n + j] -= 1;
            m[a * b.n + j] += 1;
            out.at(b.index(m), src) += Rat(e);
        }
    return out;
}

/// Matrix of sum_{a in rows} x_{ai} d/dx_{aj} (a gl_n elementary matrix acting
/// through the chosen rows; 0-based indices).
inline Matrix<Rat> gln_op(const PolyBasis& b, int i, int j, const std::vector<int>& rows) {
    if (i < 0 || i >= b.n || j < 0 || j >= b.n)
        throw std::invalid_argument("gln_op: column index out of range");
    Matrix<Rat> out(b.dim(), b.dim(), Rat(0));
    for (int src = 0; src < b.dim(); ++src)
        for (int a : rows) {
            int e = b.exponent(src, a, j);
            if (e == 0) continue;
            std::vector<int> m = b.mons[src];
            m[a * b.n + j] -= 1;
            m[a * b.n + i] += 1;
            out.at(b.index(m), src) += Rat(e);
        }
    return out;
}

inline std::vector<int> all_cols(const PolyBasis& b) {
    std::vector<int> out(b.n);
    for (int j = 0; j < b.n; ++j) out[j] = j;
    return out;
}
inline std::vector<int> all_rows(const PolyBasis& b) {
    std::vector<int> out(b.k);
    for (int a = 0; a < b.k; ++a) out[a] = a;
    return out;
}

/// r-matrix of gl_k acting with its first leg through column i1 and second
/// through column i2: r = 1/2 sum_a E_aa⊗E_aa + sum_{a<b} E_ab⊗E_ba.
inline Matrix<Rat> classical_r(const PolyBasis& b, int i1, int i2) {
    Matrix<Rat> out(b.dim(), b.dim(), Rat(0));
    for (int a = 0; a < b.k; ++a)
        out += (glk_op(b, a, a, {i1}) * glk_op(b, a, a, {i2})).scaled(Rat(1, 2));
    for (int a = 0; a < b.k; ++a)
        for (int c = a + 1; c < b.k; ++c) out += glk_op(b, a, c, {i1}) * glk_op(b, c, a, {i2});
    return out;
}

/// kappa of gl_2 acting through the chosen rows.
inline Matrix<Rat> classical_kappa(const PolyBasis& b, const std::vector<int>& rows) {
    return gln_op(b, 0, 1, rows) * gln_op(b, 1, 0, rows) +
           gln_op(b, 1, 0, rows) * gln_op(b, 0, 1, rows);
}

/// Per-identity outcome of the transfer identities on one homogeneous
/// component.
struct TransferReport {
    bool weights_match = false;   // (E_aa^{(k)})^{(i)} = (E_ii^{(2)})^{(a)}
    bool r_matches = false;       // r-matrix identity
    bool omega_matches = false;   // 2 Omega^{(k)} = Delta^{(k)}(kappa^{(2)} - I^{(2)})
    bool s_matches = false;       // s^{(i)} = sum_a s_a (E_ii^{(2)})^{(a)}
    bool all() const { return weights_match && r_matches && omega_matches && s_matches; }
};

inline TransferReport verify_transfer_component(const PolyBasis& b,
                                                const std::vector<Rat>& s) {
    TransferReport rep;
    rep.weights_match = true;
    for (int a = 0; a < b.k; ++a)
        for (int i = 0; i < 2; ++i)
            if (!(glk_op(b, a, a, {i}) == gln_op(b, i, i, {a}))) rep.weights_match = false;

    Matrix<Rat> rhs(b.dim(), b.dim(), Rat(0));
    for (int a = 0; a < b.k; ++a)
        for (int c = a + 1; c < b.k; ++c) rhs += gln_op(b, 0, 1, {a}) * gln_op(b, 1, 0, {c});
    for (int a = 0; a < b.k; ++a)
        rhs += (gln_op(b, 0, 0, {a}) * gln_op(b, 1, 1, {a})).scaled(Rat(1, 2));
    rep.r_matches = classical_r(b, 0, 1) == rhs;

    Matrix<Rat> omega = classical_r(b, 0, 1) + classical_r(b, 1, 0);
    Matrix<Rat> kappa = classical_kappa(b, all_rows(b));
    Matrix<Rat> total_degree = gln_op(b, 0, 0, all_rows(b)) + gln_op(b, 1, 1, all_rows(b));
    rep.omega_matches = omega.scaled(Rat(2)) == kappa - total_degree;

    rep.s_matches = true;
    for (int i = 0; i < 2; ++i) {
        Matrix<Rat> lhs(b.dim(), b.dim(), Rat(0)), rhs_s(b.dim(), b.dim(), Rat(0));
        for (int a = 0; a < b.k; ++a) {
            lhs += glk_op(b, a, a, {i}).scaled(s[a]);
            rhs_s += gln_op(b, i, i, {a}).scaled(s[a]);
        }
        if (!(lhs == rhs_s)) rep.s_matches = false;
    }
    return rep;
}

/// kappa^{(2)} = I^{(2)} + 2 E_11^{(2)} E_22^{(2)} on C[x_1, x_2].
inline bool verify_internal_kappa_component(int d) {
    auto b = poly_basis_degree(1, 2, d);
    Matrix<Rat> kappa = classical_kappa(*b, {0});
    Matrix<Rat> rhs = gln_op(*b, 0, 0, {0}) + gln_op(*b, 1, 1, {0}) +
                      (gln_op(*b, 0, 0, {0}) * gln_op(*b, 1, 1, {0})).scaled(Rat(2));
    return kappa == rhs;
}

}  // namespace qweyl
