#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qweyl/matrix_series.hpp"
#include "qweyl/uqfinite.hpp"

namespace qweyl {

/// Tensor product of evaluation modules of the quantum loop algebra of gl_2,
/// with all loop generators reconstructed as matrices within a level window:
/// E_r, F_r, H_r for |r| <= window and D_{1,r}, D_{2,r}, psi^{+-}_r,
/// Theta_{j,r} for 0 <= r <= window. The quantum determinant acts by scalars,
/// stored as the coefficients of its z^{-r} expansion.
template <class R>
struct LoopRep {
    QContext<R> ctx;
    int dim = 0;
    int window = 0;
    std::vector<long> lambdas;
    std::vector<R> zetas;
    std::vector<long> wt1, wt2;  // eigenvalues of D_{1,0}, D_{2,0} per basis vector

    Matrix<R> D10, D20, K, Kinv;
    std::map<int, Matrix<R>> Egen, Fgen;  // r in [-window, window]
    std::map<int, Matrix<R>> Hgen;        // r in [-window, window], H_0 = D10 - D20
    std::vector<Matrix<R>> D1r, D2r;      // r = 0..window
    std::vector<Matrix<R>> psiP, psiM;    // psi^+_r and psi^-_{-r}, r = 0..window
    std::vector<Matrix<R>> theta1, theta2;  // z^{-r} coefficients of Theta_j^+(z)
    std::vector<R> qdet;                  // scalar z^{-r} coefficients of qdet^+(z)

    const Matrix<R>& E(int r) const { return Egen.at(r); }
    const Matrix<R>& F(int r) const { return Fgen.at(r); }
    const Matrix<R>& H(int r) const { return Hgen.at(r); }

    Matrix<R> diag_q_pow(const std::vector<long>& e, long mult) const {
        Matrix<R> d(dim, dim, ctx.zero());
        for (int v = 0; v < dim; ++v) d.at(v, v) = ctx.q_pow(mult * e[v]);
        return d;
    }
    Matrix<R> minus_one_pow(const std::vector<long>& e) const {
        Matrix<R> d(dim, dim, ctx.zero());
        R one = ctx.one();
        for (int v = 0; v < dim; ++v) d.at(v, v) = (e[v] % 2 == 0) ? one : -one;
        return d;
    }
    std::vector<long> hweights() const {
        std::vector<long> h(dim);
        for (int v = 0; v < dim; ++v) h[v] = wt1[v] - wt2[v];
        return h;
    }
    std::vector<long> iweights() const {
        std::vector<long> h(dim);
        for (int v = 0; v < dim; ++v) h[v] = wt1[v] + wt2[v];
        return h;
    }
    Matrix<R> identity() const { return Matrix<R>::identity(dim, ctx.zero(), ctx.one()); }
};

namespace detail {

/// Scalar z-series logarithm of 1 + sum c_r z^{-r} via 1x1 matrices.
template <class R>
std::vector<R> scalar_series_log(const std::vector<R>& c, const R& zero) {
    std::vector<Matrix<R>> m;
    for (const auto& x : c) {
        Matrix<R> e(1, 1, zero);
        e.at(0, 0) = x;
        m.push_back(e);
    }
    auto lg = matrix_series_log(m);
    std::vector<R> out;
    for (const auto& e : lg) out.push_back(e.at(0, 0));
    return out;
}

template <class R>
void derive_ladder(LoopRep<R>& rep) {
    const QContext<R>& ctx = rep.ctx;
    int w = rep.window;
    R qq = q_minus_qinv(ctx);
    R two_inv = ring_ops<R>::inv(q_integer(ctx, 2));

    rep.Hgen[0] = rep.D10 - rep.D20;
    rep.Hgen[1] = rep.Kinv * commutator(rep.Egen.at(0), rep.Fgen.at(1));
    rep.Hgen[-1] = rep.K * commutator(rep.Egen.at(-1), rep.Fgen.at(0));

    // E_{k+1} = [2]^{-1} [H_1, E_k],  F_{k+1} = -[2]^{-1} [H_1, F_k]
    for (int k = 0; k + 1 <= w; ++k) {
        rep.Egen[k + 1] = commutator(rep.Hgen[1], rep.Egen.at(k)).scaled(two_inv);
        if (k + 1 >= 2)
            rep.Fgen[k + 1] = -commutator(rep.Hgen[1], rep.Fgen.at(k)).scaled(two_inv);
    }
    // E_{k-1} = [2]^{-1} [H_{-1}, E_k],  F_{k-1} = -[2]^{-1} [H_{-1}, F_k]
    for (int k = 0; k - 1 >= -w; --k) {
        if (k - 1 <= -2)
            rep.Egen[k - 1] = commutator(rep.Hgen[-1], rep.Egen.at(k)).scaled(two_inv);
        rep.Fgen[k - 1] = -commutator(rep.Hgen[-1], rep.Fgen.at(k)).scaled(two_inv);
    }

    // psi^+_r = (q - q^{-1})[E_r, F_0], psi^-_{-r} = -(q - q^{-1})[E_{-r}, F_0]
    rep.psiP.assign(w + 1, rep.K);
    rep.psiM.assign(w + 1, rep.Kinv);
    for (int r = 1; r <= w; ++r) {
        rep.psiP[r] = commutator(rep.Egen.at(r), rep.Fgen.at(0)).scaled(qq);
        rep.psiM[r] = -commutator(rep.Egen.at(-r), rep.Fgen.at(0)).scaled(qq);
    }

    // H_r from the series log of K^{-1} psi^+(z) (commuting coefficients)
    std::vector<Matrix<R>> kpsi, kpsim;
    for (int r = 1; r <= w; ++r) {
        kpsi.push_back(rep.Kinv * rep.psiP[r]);
        kpsim.push_back(rep.K * rep.psiM[r]);
    }
    auto logp = matrix_series_log(kpsi);
    auto logm = matrix_series_log(kpsim);
    R qq_inv = ring_ops<R>::inv(qq);
    for (int r = 2; r <= w; ++r) rep.Hgen[r] = logp[r - 1].scaled(qq_inv);
    for (int r = 2; r <= w; ++r) rep.Hgen[-r] = -logm[r - 1].scaled(qq_inv);

    // central scalars z_r from the quantum determinant, then the D-splitting
    //   D_{1,r} - D_{2,r} = H_r,  q^r D_{1,r} + q^{-r} D_{2,r} = z_r
    R q0 = rep.qdet[0];
    if (!ring_ops<R>::is_invertible(q0))
        throw std::domain_error("derive_ladder: qdet constant coefficient not invertible");
    std::vector<R> u;
    R q0i = ring_ops<R>::inv(q0);
    for (int r = 1; r <= w; ++r) u.push_back(rep.qdet[r] * q0i);
    auto zlog = scalar_series_log(u, ctx.zero());
    rep.D1r.assign(w + 1, rep.D10);
    rep.D2r.assign(w + 1, rep.D20);
    for (int r = 1; r <= w; ++r) {
        R zr = zlog[r - 1] * qq_inv;
        R denom = ctx.q_pow(r) + ctx.q_pow(-r);
        if (!ring_ops<R>::is_invertible(denom))
            throw std::domain_error("derive_ladder: q^r + q^{-r} degenerate (q^{2r} = -1)");
        R di = ring_ops<R>::inv(denom);
        Matrix<R> zmat = rep.identity().scaled(zr);
        rep.D1r[r] = (zmat + rep.Hgen.at(r).scaled(ctx.q_pow(-r))).scaled(di);
        rep.D2r[r] = (zmat - rep.Hgen.at(r).scaled(ctx.q_pow(r))).scaled(di);
    }

    // Theta_j^+(z) = q^{D_{j,0}} exp((q - q^{-1}) sum_r D_{j,r} z^{-r})
    std::vector<Matrix<R>> a1, a2;
    for (int r = 1; r <= w; ++r) {
        a1.push_back(rep.D1r[r].scaled(qq));
        a2.push_back(rep.D2r[r].scaled(qq));
    }
    auto e1 = matrix_series_exp(a1);
    auto e2 = matrix_series_exp(a2);
    Matrix<R> qd1 = rep.diag_q_pow(rep.wt1, 1), qd2 = rep.diag_q_pow(rep.wt2, 1);
    rep.theta1.assign(w + 1, qd1);
    rep.theta2.assign(w + 1, qd2);
    for (int r = 1; r <= w; ++r) {
        rep.theta1[r] = qd1 * e1[r - 1];
        rep.theta2[r] = qd2 * e2[r - 1];
    }
}

}  // namespace detail

/// Evaluation module V_lambda(zeta) with the full generator window derived
/// from the base matrices of the evaluation homomorphism:
///   E_0 = E,  F_0 = F,  E_{-1} = q zeta^{-1} K^{-1} E,  F_1 = q^{-1} zeta F K.
template <class R>
LoopRep<R> evaluation_rep(const QContext<R>& ctx, long lambda, const R& zeta, int window) {
    if (window < 1) throw std::invalid_argument("evaluation_rep: window must be >= 1");
    if (!ring_ops<R>::is_invertible(zeta))
        throw std::domain_error("evaluation_rep: zeta must be invertible");
    UqModule<R> m = row_module_gl2(ctx, static_cast<int>(lambda));
    LoopRep<R> rep;
    rep.ctx = ctx;
    rep.dim = m.dim;
    rep.window = window;
    rep.lambdas = {lambda};
    rep.zetas = {zeta};
    for (int v = 0; v < m.dim; ++v) {
        rep.wt1.push_back(m.weights[v][0]);
        rep.wt2.push_back(m.weights[v][1]);
    }
    rep.D10 = m.D(0);
    rep.D20 = m.D(1);
    rep.K = m.qH(0, +1);
    rep.Kinv = m.qH(0, -1);
    rep.Egen[0] = m.E[0];
    rep.Fgen[0] = m.F[0];
    R zi = ring_ops<R>::inv(zeta);
    rep.Egen[-1] = (rep.Kinv * m.E[0]).scaled(ctx.q_pow(1) * zi);
    rep.Fgen[1] = (m.F[0] * rep.K).scaled(ctx.q_pow(-1) * zeta);
    // qdet^+(z) acts by q^lambda (z - q^{-lambda} zeta) / (z - q^lambda zeta)
    rep.qdet.assign(window + 1, ctx.zero());
    rep.qdet[0] = ctx.q_pow(lambda);
    R diff = ctx.q_pow(lambda) - ctx.q_pow(-lambda);
    R zpow = ctx.one();
    for (int r = 1; r <= window; ++r) {
        zpow = zpow * zeta;
        rep.qdet[r] = ctx.q_pow(lambda) * ctx.q_pow(lambda * (r - 1)) * diff * zpow;
    }
    detail::derive_ladder(rep);
    return rep;
}

/// Tensor product of loop representations via the coproduct on the base
/// generators; the quantum determinant is grouplike, so its scalar series
/// multiply.
template <class R>
LoopRep<R> tensor_loop(const LoopRep<R>& a, const LoopRep<R>& b) {
    int w = std::min(a.window, b.window);
    LoopRep<R> rep;
    rep.ctx = a.ctx;
    rep.dim = a.dim * b.dim;
    rep.window = w;
    rep.lambdas = a.lambdas;
    rep.lambdas.insert(rep.lambdas.end(), b.lambdas.begin(), b.lambdas.end());
    rep.zetas = a.zetas;
    rep.zetas.insert(rep.zetas.end(), b.zetas.begin(), b.zetas.end());
    for (int u = 0; u < a.dim; ++u)
        for (int v = 0; v < b.dim; ++v) {
            rep.wt1.push_back(a.wt1[u] + b.wt1[v]);
            rep.wt2.push_back(a.wt2[u] + b.wt2[v]);
        }
    Matrix<R> ia = a.identity(), ib = b.identity();
    rep.D10 = tensor(a.D10, ib) + tensor(ia, b.D10);
    rep.D20 = tensor(a.D20, ib) + tensor(ia, b.D20);
    rep.K = tensor(a.K, b.K);
    rep.Kinv = tensor(a.Kinv, b.Kinv);
    rep.Egen[0] = tensor(a.Egen.at(0), b.K) + tensor(ia, b.Egen.at(0));
    rep.Fgen[0] = tensor(a.Fgen.at(0), ib) + tensor(a.Kinv, b.Fgen.at(0));
    rep.Egen[-1] = tensor(a.Egen.at(-1), b.Kinv) + tensor(ia, b.Egen.at(-1));
    rep.Fgen[1] = tensor(a.Fgen.at(1), ib) + tensor(a.K, b.Fgen.at(1));
    rep.qdet.assign(w + 1, rep.ctx.zero());
    for (int r = 0; r <= w; ++r)
        for (int s = 0; s + r <= w; ++s) rep.qdet[r + s] += a.qdet[r] * b.qdet[s];
    detail::derive_ladder(rep);
    return rep;
}

template <class R>
LoopRep<R> tensor_loop(const std::vector<LoopRep<R>>& reps) {
    if (reps.empty()) throw std::invalid_argument("tensor_loop: empty list");
    LoopRep<R> out = reps[0];
    for (size_t i = 1; i < reps.size(); ++i) out = tensor_loop(out, reps[i]);
    return out;
}

/// D~_{i,r} = D_{i,0} + sum_{s=1}^r (-1)^s binom(r,s) (s/[s]) D_{i,s};
/// H~_r analogously from the H_s.
template <class R>
Matrix<R> lattice_log_generator(const LoopRep<R>& rep, int i, int r) {
    Matrix<R> out = (i == 1) ? rep.D10 : rep.D20;
    for (int s = 1; s <= r; ++s) {
        R c = make_rational<R>(binomial_rat(r, s), rep.ctx.zero()) *
              make_long<R>(s, rep.ctx.zero()) * ring_ops<R>::inv(q_integer(rep.ctx, s));
        if (s % 2 == 1) c = -c;
        out += ((i == 1) ? rep.D1r[s] : rep.D2r[s]).scaled(c);
    }
    return out;
}

template <class R>
Matrix<R> lattice_log_H(const LoopRep<R>& rep, int r) {
    Matrix<R> out = rep.Hgen.at(0);
    for (int s = 1; s <= r; ++s) {
        R c = make_rational<R>(binomial_rat(r, s), rep.ctx.zero()) *
              make_long<R>(s, rep.ctx.zero()) * ring_ops<R>::inv(q_integer(rep.ctx, s));
        if (s % 2 == 1) c = -c;
        out += rep.Hgen.at(s).scaled(c);
    }
    return out;
}

/// h-adic valuation of the matrix of H~_r: minimum valuation over entries;
/// returns the truncation order as a sentinel for the zero matrix.
inline int module_order_probe(const LoopRep<HSeries>& rep, int r) {
    Matrix<HSeries> m = lattice_log_H(rep, r);
    int best = rep.ctx.order;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::min(best, m.at(i, j).valuation());
    return best;
}

namespace detail {

/// Truncating matrix exponential for the series backend: requires every
/// entry of the argument to vanish at h = 0, so powers gain h-order.
inline Matrix<HSeries> lattice_exp(const Matrix<HSeries>& m) {
    int order = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            order = std::max(order, m.at(i, j).order());
            if (m.at(i, j).valuation() < 1)
                throw std::domain_error(
                    "lattice_exp: exponent has h-order 0; series does not truncate");
        }
    Matrix<HSeries> out = Matrix<HSeries>::identity(m.rows(), m.zero_elem(), m.one_elem());
    Matrix<HSeries> pw = out;
    Rat fact(1);
    for (int j = 1; j <= order; ++j) {
        pw = pw * m;
        if (pw.is_zero()) break;
        fact /= Rat(j);
        out += pw.scaled(HSeries(fact, order));
    }
    return out;
}

inline Matrix<Cplx> lattice_exp(const Matrix<Cplx>& m) {
    Matrix<Cplx> out = Matrix<Cplx>::identity(m.rows(), Cplx(0, 0), Cplx(1, 0));
    Matrix<Cplx> pw = out;
    double scale = std::max(1.0, max_abs(m));
    for (int j = 1; j <= 200; ++j) {
        pw = pw * m;
        pw = pw.scaled(Cplx(1.0 / j, 0));
        out += pw;
        if (max_abs(pw) < 1e-17 * scale) return out;
    }
    throw std::domain_error("lattice_exp: exponential did not converge");
}

inline Matrix<RatFuncQ> lattice_exp(const Matrix<RatFuncQ>&) {
    throw std::domain_error(
        "lattice_exp: lattice operators need the series or float backend");
}
inline Matrix<Rat> lattice_exp(const Matrix<Rat>&) {
    throw std::domain_error(
        "lattice_exp: lattice operators need the series or float backend");
}

}  // namespace detail

/// The quantum Weyl group operators of a loop representation.
template <class R>
struct LatticeOps {
    Matrix<R> L1, L2, L;  // lattice operators
    Matrix<R> S0, S1, S;  // Weyl elements; S = S1 (-1)^{D_1}
    int rmax = 0;
    double tail_bound = 0;  // float backend only
};

/// Convergence data for the float backend: the lattice exponents decay like
/// rho^r, with rho the largest modulus among the spectral points
/// 1 - zeta_a q^j, |j| <= lambda_a, read off the evaluation data.
inline double lattice_rho(const LoopRep<Cplx>& rep) {
    double rho = 0;
    for (size_t a = 0; a < rep.zetas.size(); ++a)
        for (long j = -rep.lambdas[a]; j <= rep.lambdas[a]; ++j)
            rho = std::max(rho, std::abs(1.0 - rep.zetas[a] * rep.ctx.q_pow(j)));
    return rho;
}

template <class R>
LatticeOps<R> lattice_operators(const LoopRep<R>& rep, int rmax) {
    if (rmax > rep.window)
        throw std::invalid_argument("lattice_operators: rmax exceeds the level window");
    const QContext<R>& ctx = rep.ctx;
    LatticeOps<R> ops;
    ops.rmax = rmax;
    if constexpr (std::is_same_v<R, Cplx>) {
        double rho = lattice_rho(rep);
        if (rho >= 0.9)
            throw std::domain_error("lattice_operators: spectral radius " +
                                    std::to_string(rho) +
                                    " >= 0.9; lattice sum diverges at this h");
        long wsum = 0;
        for (long l : rep.lambdas) wsum += l;
        ops.tail_bound = static_cast<double>(wsum) * std::pow(rho, rmax + 1) /
                         ((rmax + 1) * (1.0 - rho));
    }
    Matrix<R> arg1(rep.dim, rep.dim, ctx.zero()), arg2 = arg1;
    for (int r = 1; r <= rmax; ++r) {
        R rinv = ring_ops<R>::inv(make_long<R>(r, ctx.zero()));
        arg1 += lattice_log_generator(rep, 1, r).scaled(rinv);
        arg2 += lattice_log_generator(rep, 2, r).scaled(rinv);
    }
    Matrix<R> qd1_inv = rep.diag_q_pow(rep.wt1, -1);
    ops.L1 = qd1_inv * detail::lattice_exp(arg1);
    ops.L2 = qd1_inv * detail::lattice_exp(arg2);
    ops.L = ops.L1 * ops.L2.inverse();

    // S_1 from the node-1 triple q-exponential on (E_0, F_0, H_0)
    auto hw = rep.hweights();
    auto triple = [&](const Matrix<R>& e, const Matrix<R>& f, const Matrix<R>& qh,
                      const Matrix<R>& qhinv, long hsign) {
        Matrix<R> a = q_exponential_inv(ctx, (e * qhinv).scaled(ctx.q_pow(-1)));
        Matrix<R> b = q_exponential_inv(ctx, -f);
        Matrix<R> c = q_exponential_inv(ctx, (e * qh).scaled(ctx.q_pow(1)));
        Matrix<R> d(rep.dim, rep.dim, ctx.zero());
        for (int v = 0; v < rep.dim; ++v) {
            long h = hw[v];
            d.at(v, v) = ctx.q_pow(h * (h + hsign) / 2);
        }
        return a * b * c * d;
    };
    ops.S1 = triple(rep.Egen.at(0), rep.Fgen.at(0), rep.K, rep.Kinv, +1);
    // S_0: node-0 data E_0^{KM} = K^{-1} F_1, F_0^{KM} = E_{-1} K, with q^{+-H}
    // swapped relative to node 1 and the diagonal q^{H(H-1)/2}
    Matrix<R> e0 = rep.Kinv * rep.Fgen.at(1);
    Matrix<R> f0 = rep.Egen.at(-1) * rep.K;
    ops.S0 = triple(e0, f0, rep.Kinv, rep.K, -1);
    ops.S = ops.S1 * rep.minus_one_pow(rep.wt1);
    return ops;
}

}  // namespace qweyl
