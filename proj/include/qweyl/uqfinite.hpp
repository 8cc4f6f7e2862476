#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qweyl/intertwiner.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/matrix_series.hpp"

namespace qweyl {

/// Finite-dimensional module over the quantum group of gl_p: weight-diagonal
/// basis with explicit matrices for the Chevalley generators. The D_i act
/// diagonally by the stored integer weights.
template <class R>
struct UqModule {
    QContext<R> ctx;
    int p = 0;
    int dim = 0;
    std::vector<std::vector<long>> weights;  // weight vector of each basis element
    std::vector<Matrix<R>> E, F;             // generators j = 0 .. p-2

    Matrix<R> D(int i) const {
        Matrix<R> d(dim, dim, ctx.zero());
        for (int v = 0; v < dim; ++v) d.at(v, v) = make_long<R>(weights[v][i], ctx.zero());
        return d;
    }
    /// Diagonal q^{sum_i c_i D_i}.
    Matrix<R> q_weight_diag(const std::vector<long>& c) const {
        Matrix<R> d(dim, dim, ctx.zero());
        for (int v = 0; v < dim; ++v) {
            long e = 0;
            for (int i = 0; i < p; ++i) e += c[i] * weights[v][i];
            d.at(v, v) = ctx.q_pow(e);
        }
        return d;
    }
    /// Diagonal q^{+-H_j}, H_j = D_j - D_{j+1}.
    Matrix<R> qH(int j, int sign) const {
        std::vector<long> c(p, 0);
        c[j] = sign;
        c[j + 1] = -sign;
        return q_weight_diag(c);
    }
    long weight_sum(int v) const {
        long s = 0;
        for (long w : weights[v]) s += w;
        return s;
    }
    Matrix<R> identity() const { return Matrix<R>::identity(dim, ctx.zero(), ctx.one()); }

    std::vector<Matrix<R>> generator_list() const {
        std::vector<Matrix<R>> gens;
        for (int j = 0; j + 1 < p; ++j) {
            gens.push_back(E[j]);
            gens.push_back(F[j]);
        }
        for (int i = 0; i < p; ++i) gens.push_back(D(i));
        return gens;
    }
};

/// The p-dimensional vector representation: E_j e_{j+1} = e_j, F_j e_j = e_{j+1}.
template <class R>
UqModule<R> vector_rep(const QContext<R>& ctx, int p) {
    if (p < 2) throw std::invalid_argument("vector_rep: need p >= 2");
    UqModule<R> m{ctx, p, p, {}, {}, {}};
    for (int i = 0; i < p; ++i) {
        std::vector<long> w(p, 0);
        w[i] = 1;
        m.weights.push_back(w);
    }
    for (int j = 0; j + 1 < p; ++j) {
        Matrix<R> e(p, p, ctx.zero()), f(p, p, ctx.zero());
        e.at(j, j + 1) = ctx.one();
        f.at(j + 1, j) = ctx.one();
        m.E.push_back(e);
        m.F.push_back(f);
    }
    return m;
}

namespace detail {

inline std::vector<std::vector<int>> degree_tuples(int slots, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int s, int t) {
        if (s == 1) {
            cur.push_back(t);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = t; v >= 0; --v) {  // descending => lex-descending order, hw first
            cur.push_back(v);
            rec(s - 1, t - v);
            cur.pop_back();
        }
    };
    rec(slots, total);
    return out;
}

}  // namespace detail

/// Degree-d component of quantum k x 1 matrix space as a module over the
/// quantum group of gl_k (the q-symmetric power of the vector representation).
/// Basis monomials are exponent vectors in lex-descending order, so the
/// highest weight monomial X_{11}^d comes first.
template <class R>
UqModule<R> column_module(const QContext<R>& ctx, int k, int d) {
    auto mons = detail::degree_tuples(k, d);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
    UqModule<R> m{ctx, k, static_cast<int>(mons.size()), {}, {}, {}};
    for (const auto& mu : mons) m.weights.emplace_back(mu.begin(), mu.end());
    for (int a = 0; a + 1 < k; ++a) {
        Matrix<R> e(m.dim, m.dim, ctx.zero()), f(m.dim, m.dim, ctx.zero());
        for (int src = 0; src < m.dim; ++src) {
            const auto& mu = mons[src];
            if (mu[a + 1] > 0) {
                auto nu = mu;
                --nu[a + 1];
                ++nu[a];
                e.at(index[nu], src) += q_integer(ctx, mu[a + 1]);
            }
            if (mu[a] > 0) {
                auto nu = mu;
                --nu[a];
                ++nu[a + 1];
                f.at(index[nu], src) += q_integer(ctx, mu[a]);
            }
        }
        m.E.push_back(e);
        m.F.push_back(f);
    }
    return m;
}

/// Degree-d component of quantum 1 x 2 matrix space as a gl_2 module: the
/// (d+1)-dimensional module V_d with highest weight vector X_{11}^d.
template <class R>
UqModule<R> row_module_gl2(const QContext<R>& ctx, int d) {
    UqModule<R> m{ctx, 2, d + 1, {}, {}, {}};
    for (int t = 0; t <= d; ++t) m.weights.push_back({d - t, t});
    Matrix<R> e(d + 1, d + 1, ctx.zero()), f(d + 1, d + 1, ctx.zero());
    for (int t = 0; t <= d; ++t) {
        if (t > 0) e.at(t - 1, t) = q_integer(ctx, t);
        if (t < d) f.at(t + 1, t) = q_integer(ctx, d - t);
    }
    m.E.push_back(e);
    m.F.push_back(f);
    return m;
}

/// Tensor product module via the coproduct
/// E_j -> E_j (x) q^{H_j} + 1 (x) E_j,  F_j -> F_j (x) 1 + q^{-H_j} (x) F_j.
template <class R>
UqModule<R> tensor_module(const UqModule<R>& a, const UqModule<R>& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor_module: rank mismatch");
    UqModule<R> m{a.ctx, a.p, a.dim * b.dim, {}, {}, {}};
    for (int u = 0; u < a.dim; ++u)
        for (int v = 0; v < b.dim; ++v) {
            std::vector<long> w(a.p);
            for (int i = 0; i < a.p; ++i) w[i] = a.weights[u][i] + b.weights[v][i];
            m.weights.push_back(w);
        }
    Matrix<R> ia = a.identity(), ib = b.identity();
    for (int j = 0; j + 1 < a.p; ++j) {
        m.E.push_back(tensor(a.E[j], b.qH(j, +1)) + tensor(ia, b.E[j]));
        m.F.push_back(tensor(a.F[j], ib) + tensor(a.qH(j, -1), b.F[j]));
    }
    return m;
}

/// exp_{q^{-1}}(x) = sum_n q^{-n(n-1)/2} x^n / [n]!, summed until x^n = 0.
template <class R>
Matrix<R> q_exponential_inv(const QContext<R>& ctx, const Matrix<R>& x) {
    Matrix<R> out = Matrix<R>::identity(x.rows(), ctx.zero(), ctx.one());
    Matrix<R> pw = out;
    R fact = ctx.one();
    for (int n = 1; n <= x.rows() + 1; ++n) {
        pw = pw * x;
        if (pw.is_zero()) return out;
        fact = fact * q_integer(ctx, n);
        out += pw.scaled(ctx.q_pow(-(static_cast<long>(n) * (n - 1)) / 2) *
                         ring_ops<R>::inv(fact));
    }
    throw std::domain_error("q_exponential_inv: argument is not nilpotent");
}

/// Quantum Weyl group element S_1 of a gl_2 module, as the triple
/// q-exponential times the diagonal q^{H(H+1)/2}.
template <class R>
Matrix<R> weyl_S1(const UqModule<R>& m) {
    if (m.p != 2) throw std::invalid_argument("weyl_S1: gl_2 modules only");
    const QContext<R>& ctx = m.ctx;
    Matrix<R> a = q_exponential_inv(ctx, (m.E[0] * m.qH(0, -1)).scaled(ctx.q_pow(-1)));
    Matrix<R> b = q_exponential_inv(ctx, -m.F[0]);
    Matrix<R> c = q_exponential_inv(ctx, (m.E[0] * m.qH(0, +1)).scaled(ctx.q_pow(1)));
    Matrix<R> d(m.dim, m.dim, ctx.zero());
    for (int v = 0; v < m.dim; ++v) {
        long h = m.weights[v][0] - m.weights[v][1];
        d.at(v, v) = ctx.q_pow(h * (h + 1) / 2);
    }
    return a * b * c * d;
}

/// (-1)^{D_i} as a diagonal sign matrix (integer weights required).
template <class R>
Matrix<R> minus_one_to_D(const UqModule<R>& m, int i) {
    Matrix<R> d(m.dim, m.dim, m.ctx.zero());
    for (int v = 0; v < m.dim; ++v) {
        R one = m.ctx.one();
        d.at(v, v) = (m.weights[v][i] % 2 == 0) ? one : -one;
    }
    return d;
}

/// S = S_1 (-1)^{D_1}, the Weyl element in the gl convention.
template <class R>
Matrix<R> weyl_S(const UqModule<R>& m) {
    return weyl_S1(m) * minus_one_to_D(m, 0);
}

/// Embed an operator acting on legs (i, j) of a mixed tensor product.
template <class R>
Matrix<R> act_on_two_legs(const Matrix<R>& op, const Legs& legs, int li, int lj,
                          const R& zero, const R& one) {
    int n = static_cast<int>(legs.size());
    if (li >= lj) throw std::invalid_argument("act_on_two_legs: need li < lj");
    // permutation sending li -> 0, lj -> 1, others in order
    std::vector<int> perm(n);
    int next = 2;
    for (int t = 0; t < n; ++t) {
        if (t == li)
            perm[t] = 0;
        else if (t == lj)
            perm[t] = 1;
        else
            perm[t] = next++;
    }
    Matrix<R> p = permute_legs(perm, legs, zero, one);
    int rest = 1;
    for (int t = 0; t < n; ++t)
        if (t != li && t != lj) rest *= legs[t];
    Matrix<R> big = tensor(op, Matrix<R>::identity(rest, zero, one));
    return p.inverse() * big * p;
}

/// Builds and memoizes the R-matrices of the quantum group of gl_k on pairs
/// of q-symmetric powers. The seed on V (x) V is pinned by the identity
/// (1 2) R = S q^{-D_1} on quantum matrix space; higher pairs come from the
/// cabling identity, with the symmetrizer embeddings M_d -> M_{d-1} (x) V
/// computed as intertwiners and normalized on highest weight vectors.
template <class R>
class UqGlkFactory {
public:
    UqGlkFactory(const QContext<R>& ctx, int k) : ctx_(ctx), k_(k) {}

    int k() const { return k_; }
    const QContext<R>& ctx() const { return ctx_; }

    const UqModule<R>& module(int d) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = modules_.find(d);
        if (it == modules_.end())
            it = modules_.emplace(d, column_module(ctx_, k_, d)).first;
        return it->second;
    }

    /// R-matrix seed on V (x) V: diagonal q at e_i (x) e_i, 1 elsewhere, and
    /// (q - q^{-1}) e_j (x) e_i -> e_i (x) e_j for i < j. The i < j half is
    /// the one compatible with the coproduct used here; the pinning test
    /// rejects the opposite half.
    Matrix<R> seed() const {
        Matrix<R> r(k_ * k_, k_ * k_, ctx_.zero());
        R q = ctx_.q_pow(1), one = ctx_.one();
        R qq = q - ctx_.q_pow(-1);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) r.at(i * k_ + j, i * k_ + j) = (i == j) ? q : one;
        for (int i = 0; i < k_; ++i)
            for (int j = i + 1; j < k_; ++j) r.at(i * k_ + j, j * k_ + i) = qq;
        return r;
    }

    /// Module embedding M_d -> M_{d-1} (x) V, normalized so the highest
    /// weight monomial maps to hw (x) e_1 with coefficient one.
    const Matrix<R>& embed_step(int d) {
        std::lock_guard<std::mutex> lock(mu_);
        return embed_step_locked(d);
    }

    /// R-matrix on M_a (x) M_b.
    const Matrix<R>& rmat(int a, int b) {
        std::lock_guard<std::mutex> lock(mu_);
        return rmat_locked(a, b);
    }

    /// Iterated embedding M_d -> V^{(x) d} (cross-check use).
    Matrix<R> iota_power(int d) {
        if (d == 0) return Matrix<R>::identity(1, ctx_.zero(), ctx_.one());
        Matrix<R> out = Matrix<R>::identity(k_, ctx_.zero(), ctx_.one());
        for (int t = 2; t <= d; ++t) {
            // out : M_{t-1} -> V^{(x) t-1}
            Matrix<R> vi = Matrix<R>::identity(k_, ctx_.zero(), ctx_.one());
            out = tensor(out, vi) * embed_step(t);
        }
        return out;
    }

    /// R-matrix on V^{(x) a} (x) V^{(x) b} by the cabling identity alone.
    Matrix<R> rmat_power(int a, int b) {
        Legs legs(a + b, k_);
        R zero = ctx_.zero(), one = ctx_.one();
        Matrix<R> out = Matrix<R>::identity(legs_dim(legs), zero, one);
        // R_{M(x)N, P} = R_{M,P} R_{N,P} and R_{M, N(x)P} = R_{M,P} R_{M,N}
        // unwind to the ordered double product over leg pairs.
        for (int i = 0; i < a; ++i) {
            Matrix<R> row = Matrix<R>::identity(legs_dim(legs), zero, one);
            for (int j = a + b - 1; j >= a; --j)
                row = row * act_on_two_legs(seed(), legs, i, j, zero, one);
            out = out * row;
        }
        return out;
    }

private:
    const Matrix<R>& embed_step_locked(int d) {
        auto it = embeds_.find(d);
        if (it != embeds_.end()) return it->second;
        if (d < 1) throw std::invalid_argument("embed_step: need d >= 1");
        const UqModule<R>& md = module_locked(d);
        UqModule<R> big = tensor_module(module_locked(d - 1), vector_rep(ctx_, k_));
        auto x = solve_intertwiner<R>(md.generator_list(), big.generator_list());
        if (!x.has_value())
            throw std::domain_error("embed_step: no intertwiner (wrong seed convention?)");
        // hw of M_d is index 0; hw (x) e_1 is index 0 of the tensor basis
        if (!ring_ops<R>::is_invertible(x->at(0, 0)))
            throw std::domain_error("embed_step: embedding vanishes on the highest weight");
        Matrix<R> norm = x->scaled(ring_ops<R>::inv(x->at(0, 0)));
        return embeds_.emplace(d, std::move(norm)).first->second;
    }

    const UqModule<R>& module_locked(int d) {
        auto it = modules_.find(d);
        if (it == modules_.end()) it = modules_.emplace(d, column_module(ctx_, k_, d)).first;
        return it->second;
    }

    const Matrix<R>& rmat_locked(int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = rmats_.find(key);
        if (it != rmats_.end()) return it->second;
        Matrix<R> out = compute_rmat(a, b);
        return rmats_.emplace(key, std::move(out)).first->second;
    }

    Matrix<R> compute_rmat(int a, int b) {
        R zero = ctx_.zero(), one = ctx_.one();
        int da = module_locked(a).dim, db = module_locked(b).dim;
        if (a == 0 || b == 0) return Matrix<R>::identity(da * db, zero, one);
        if (a == 1 && b == 1) return seed();
        if (a > 1) {
            const Matrix<R>& j = embed_step_locked(a);
            int dprev = module_locked(a - 1).dim;
            Legs legs{dprev, k_, db};
            Matrix<R> big = act_on_two_legs(rmat_locked(a - 1, b), legs, 0, 2, zero, one) *
                            act_on_two_legs(rmat_locked(1, b), legs, 1, 2, zero, one);
            Matrix<R> emb = tensor(j, Matrix<R>::identity(db, zero, one));
            return solve_columns(emb, big * emb);
        }
        // a == 1, b > 1
        const Matrix<R>& j = embed_step_locked(b);
        int dprev = module_locked(b - 1).dim;
        Legs legs{k_, dprev, k_};
        Matrix<R> big = act_on_two_legs(rmat_locked(1, 1), legs, 0, 2, zero, one) *
                        act_on_two_legs(rmat_locked(1, b - 1), legs, 0, 1, zero, one);
        Matrix<R> emb = tensor(Matrix<R>::identity(k_, zero, one), j);
        return solve_columns(emb, big * emb);
    }

    QContext<R> ctx_;
    int k_;
    std::mutex mu_;
    std::map<int, UqModule<R>> modules_;
    std::map<int, Matrix<R>> embeds_;
    std::map<std::pair<int, int>, Matrix<R>> rmats_;
};

/// Relation checks (QG1)-(QG4) as exact matrix identities.
template <class R>
bool qg_relations_ok(const UqModule<R>& m) {
    const QContext<R>& ctx = m.ctx;
    R qq = q_minus_qinv(ctx);
    // (QG1)/(QG2): D_i diagonal with the declared shifts
    for (int i = 0; i < m.p; ++i)
        for (int j = 0; j + 1 < m.p; ++j) {
            long ce = (i == j) ? 1 : (i == j + 1 ? -1 : 0);
            if (!(commutator(m.D(i), m.E[j]) == m.E[j].scaled(make_long<R>(ce, ctx.zero()))))
                return false;
            if (!(commutator(m.D(i), m.F[j]) == m.F[j].scaled(make_long<R>(-ce, ctx.zero()))))
                return false;
        }
    // (QG3)
    for (int j = 0; j + 1 < m.p; ++j)
        for (int jj = 0; jj + 1 < m.p; ++jj) {
            Matrix<R> lhs = commutator(m.E[j], m.F[jj]);
            if (j == jj) {
                Matrix<R> rhs = (m.qH(j, +1) - m.qH(j, -1)).scaled(ring_ops<R>::inv(qq));
                if (!(lhs == rhs)) return false;
            } else if (!lhs.is_zero()) {
                return false;
            }
        }
    // (QG4): adjacent q-Serre; distant generators commute
    for (int j = 0; j + 1 < m.p; ++j)
        for (int jj = 0; jj + 1 < m.p; ++jj) {
            if (j == jj) continue;
            if (std::abs(j - jj) >= 2) {
                if (!commutator(m.E[j], m.E[jj]).is_zero()) return false;
                if (!commutator(m.F[j], m.F[jj]).is_zero()) return false;
                continue;
            }
            R two = q_integer(ctx, 2);
            Matrix<R> se = m.E[j] * m.E[j] * m.E[jj] - (m.E[j] * m.E[jj] * m.E[j]).scaled(two) +
                           m.E[jj] * m.E[j] * m.E[j];
            Matrix<R> sf = m.F[j] * m.F[j] * m.F[jj] - (m.F[j] * m.F[jj] * m.F[j]).scaled(two) +
                           m.F[jj] * m.F[j] * m.F[j];
            if (!se.is_zero() || !sf.is_zero()) return false;
        }
    return true;
}

/// R Delta(x) = Delta^{op}(x) R for all generators, exact.
template <class R>
bool r_intertwines(UqGlkFactory<R>& fac, int a, int b) {
    const UqModule<R>& ma = fac.module(a);
    const UqModule<R>& mb = fac.module(b);
    UqModule<R> t = tensor_module(ma, mb);
    UqModule<R> top = tensor_module(mb, ma);
    const Matrix<R>& r = fac.rmat(a, b);
    std::vector<int> swap_perm{1, 0};
    Legs legs{ma.dim, mb.dim};
    Matrix<R> p = permute_legs(swap_perm, legs, fac.ctx().zero(), fac.ctx().one());
    // Delta^{op}(x) on M_a (x) M_b is P^{-1} Delta(x)|_{M_b (x) M_a} P
    auto gt = t.generator_list();
    auto gtop = top.generator_list();
    for (size_t i = 0; i < gt.size(); ++i) {
        Matrix<R> dop = p.inverse() * gtop[i] * p;
        if (!(r * gt[i] == dop * r)) return false;
    }
    return true;
}

}  // namespace qweyl
