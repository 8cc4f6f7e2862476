#pragma once

#include "qweyl/qloop.hpp"

namespace qweyl {

/// Defining relations of the quantum loop algebra of gl_2 as matrix
/// identities within the level window: commuting D's (QL1), the node
/// commutation table equivalent to (QL2), the quadratic E/F exchange
/// relations (QL3), and [E_k, F_l] against the psi coefficients (QL4).
template <class R>
bool loop_relations_ok(const LoopRep<R>& rep) {
    const QContext<R>& ctx = rep.ctx;
    int w = rep.window;
    R qq = q_minus_qinv(ctx);
    R q2 = ctx.q_pow(2);

    // (QL1)
    std::vector<Matrix<R>> ds;
    for (int r = 0; r <= w; ++r) {
        ds.push_back(rep.D1r[r]);
        ds.push_back(rep.D2r[r]);
    }
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = i + 1; j < ds.size(); ++j)
            if (!commutator(ds[i], ds[j]).is_zero()) return false;

    // node commutation table (Lemma 8.2)
    for (int k = -w; k <= w; ++k) {
        if (!(commutator(rep.D10, rep.E(k)) == rep.E(k))) return false;
        if (!(commutator(rep.D20, rep.E(k)) == -rep.E(k))) return false;
        if (!(commutator(rep.D10, rep.F(k)) == -rep.F(k))) return false;
        if (!(commutator(rep.D20, rep.F(k)) == rep.F(k))) return false;
    }
    for (int r = 1; r <= w; ++r) {
        R rinv = ring_ops<R>::inv(make_long<R>(r, ctx.zero()));
        R cr = q_integer(ctx, r) * rinv;
        for (int k = -w; k <= w; ++k) {
            if (k + r <= w) {
                if (!(commutator(rep.D1r[r], rep.E(k)) ==
                      rep.E(k + r).scaled(cr * ctx.q_pow(-r))))
                    return false;
                if (!(commutator(rep.D2r[r], rep.E(k)) ==
                      -rep.E(k + r).scaled(cr * ctx.q_pow(r))))
                    return false;
                if (!(commutator(rep.D1r[r], rep.F(k)) ==
                      -rep.F(k + r).scaled(cr * ctx.q_pow(-r))))
                    return false;
                if (!(commutator(rep.D2r[r], rep.F(k)) ==
                      rep.F(k + r).scaled(cr * ctx.q_pow(r))))
                    return false;
            }
        }
    }
    for (int r = -w; r <= w; ++r) {
        if (r == 0) continue;
        R rinv = ring_ops<R>::inv(make_long<R>(r, ctx.zero()));
        R c2r = q_integer(ctx, 2 * r) * rinv;
        for (int k = -w; k <= w; ++k) {
            if (k + r < -w || k + r > w) continue;
            if (!(commutator(rep.H(r), rep.E(k)) == rep.E(k + r).scaled(c2r))) return false;
            if (!(commutator(rep.H(r), rep.F(k)) == -rep.F(k + r).scaled(c2r))) return false;
        }
    }

    // (QL3)
    for (int k = -w; k <= w - 1; ++k)
        for (int l = -w; l <= w - 1; ++l) {
            Matrix<R> lhs = rep.E(k + 1) * rep.E(l) - (rep.E(k) * rep.E(l + 1)).scaled(q2);
            Matrix<R> rhs = (rep.E(l) * rep.E(k + 1)).scaled(q2) - rep.E(l + 1) * rep.E(k);
            if (!(lhs == rhs)) return false;
            Matrix<R> lf = (rep.F(k + 1) * rep.F(l)).scaled(q2) - rep.F(k) * rep.F(l + 1);
            Matrix<R> rf = rep.F(l) * rep.F(k + 1) - (rep.F(l + 1) * rep.F(k)).scaled(q2);
            if (!(lf == rf)) return false;
        }

    // (QL4)
    R qq_inv = ring_ops<R>::inv(qq);
    for (int k = -w; k <= w; ++k)
        for (int l = -w; l <= w; ++l) {
            int m = k + l;
            if (m < -w || m > w) continue;
            Matrix<R> rhs(rep.dim, rep.dim, ctx.zero());
            if (m >= 0) rhs += rep.psiP[m];
            if (m <= 0) rhs -= rep.psiM[-m];
            rhs = rhs.scaled(qq_inv);
            if (!(commutator(rep.E(k), rep.F(l)) == rhs)) return false;
        }
    return true;
}

/// Central elements: q^r D_{1,r} + q^{-r} D_{2,r} must be the scalar
/// [r]/r sum_a zeta_a^r and commute with every generator.
template <class R>
bool central_separation_ok(const LoopRep<R>& rep, int rmax) {
    const QContext<R>& ctx = rep.ctx;
    for (int r = 1; r <= rmax; ++r) {
        Matrix<R> z = rep.D1r[r].scaled(ctx.q_pow(r)) + rep.D2r[r].scaled(ctx.q_pow(-r));
        R expect = ctx.zero();
        for (const R& zeta : rep.zetas) {
            R p = ctx.one();
            for (int t = 0; t < r; ++t) p = p * zeta;
            expect += p;
        }
        expect = expect * q_integer(ctx, r) * ring_ops<R>::inv(make_long<R>(r, ctx.zero()));
        if (!(z == rep.identity().scaled(expect))) return false;
        for (int k = -rep.window; k <= rep.window; ++k) {
            if (!commutator(z, rep.E(k)).is_zero()) return false;
            if (!commutator(z, rep.F(k)).is_zero()) return false;
        }
    }
    return true;
}

/// Theta action on the extremal vectors of a single evaluation module
/// against the expanded rational functions:
///   Theta_1^+(z) Omega = q^l (z - q^{-l-1} zeta)/(z - q^{l-1} zeta) Omega,
///   Theta_2^+(z) Omega = Omega, and the mirrored lowest-weight formulas.
template <class R>
bool theta_extremal_ok(const LoopRep<R>& rep) {
    if (rep.lambdas.size() != 1)
        throw std::invalid_argument("theta_extremal_ok: single evaluation factor only");
    const QContext<R>& ctx = rep.ctx;
    long l = rep.lambdas[0];
    const R& zeta = rep.zetas[0];
    int hw = 0, lw = rep.dim - 1;
    auto column = [&](const Matrix<R>& m, int v) {
        std::vector<R> out;
        for (int i = 0; i < rep.dim; ++i) out.push_back(m.at(i, v));
        return out;
    };
    auto is_scalar_at = [&](const std::vector<R>& col, int v, const R& s) {
        for (int i = 0; i < rep.dim; ++i) {
            R want = (i == v) ? s : ctx.zero();
            if (!ring_ops<R>::is_zero(col[i] - want)) return false;
        }
        return true;
    };
    // geometric expansion of q^l (z - a zeta)/(z - b zeta):
    // coeff_0 = q^l, coeff_r = q^l zeta^r b^{r-1} (b - a)
    auto expansion = [&](long apow, long bpow, int r) {
        if (r == 0) return ctx.q_pow(l);
        R zp = ctx.one();
        for (int t = 0; t < r; ++t) zp = zp * zeta;
        R b = ctx.q_pow(bpow), a = ctx.q_pow(apow);
        R bp = ctx.one();
        for (int t = 0; t < r - 1; ++t) bp = bp * b;
        return ctx.q_pow(l) * zp * bp * (b - a);
    };
    for (int r = 0; r <= rep.window; ++r) {
        if (!is_scalar_at(column(rep.theta1[r], hw), hw, expansion(-l - 1, l - 1, r)))
            return false;
        if (!is_scalar_at(column(rep.theta2[r], hw), hw,
                          r == 0 ? ctx.one() : ctx.zero()))
            return false;
        if (!is_scalar_at(column(rep.theta1[r], lw), lw, r == 0 ? ctx.one() : ctx.zero()))
            return false;
        if (!is_scalar_at(column(rep.theta2[r], lw), lw, expansion(-l + 1, l + 1, r)))
            return false;
    }
    return true;
}

/// Conjugation identities of the quantum Weyl operators on the loop
/// generators, checked within the window:
///   Ad(L_1): E_k -> E_{k-1}, F_k -> F_{k+1};  Ad(L_2) the inverse shifts;
///   Ad(L) = Ad(L_1 L_2^{-1}): E_k -> E_{k-2};  Ad(S_0 S_1) fixes psi;
///   Ad(S_0) realizes the node-0 automorphism on the loop generators;
///   Ad(S_1) realizes the node-1 reflection.
template <class R>
bool weyl_conjugation_ok(const LoopRep<R>& rep, const LatticeOps<R>& ops) {
    int w = rep.window;
    auto conj = [&](const Matrix<R>& g, const Matrix<R>& x) {
        return g * x * g.inverse();
    };
    Matrix<R> l1i = ops.L1.inverse(), l2i = ops.L2.inverse(), li = ops.L.inverse();
    for (int k = -w + 1; k <= w; ++k) {
        if (!(ops.L1 * rep.E(k) * l1i == rep.E(k - 1))) return false;
        if (!(ops.L2 * rep.F(k) * l2i == rep.F(k - 1))) return false;
    }
    for (int k = -w; k <= w - 1; ++k) {
        if (!(ops.L2 * rep.E(k) * l2i == rep.E(k + 1))) return false;
        if (!(ops.L1 * rep.F(k) * l1i == rep.F(k + 1))) return false;
    }
    for (int k = -w + 2; k <= w; ++k)
        if (!(ops.L * rep.E(k) * li == rep.E(k - 2))) return false;
    for (int k = -w; k <= w - 2; ++k)
        if (!(ops.L * rep.F(k) * li == rep.F(k + 2))) return false;

    // S_0 S_1 fixes the psi coefficients
    Matrix<R> s01 = ops.S0 * ops.S1;
    Matrix<R> s01i = s01.inverse();
    for (int r = 0; r <= w; ++r) {
        if (!(s01 * rep.psiP[r] * s01i == rep.psiP[r])) return false;
        if (!(s01 * rep.psiM[r] * s01i == rep.psiM[r])) return false;
    }

    // node-0 action on loop generators (T_0 table)
    Matrix<R> s0i = ops.S0.inverse();
    if (!(conj(ops.S0, rep.F(1)) == -(rep.Kinv * rep.E(-1)))) return false;
    if (!(conj(ops.S0, rep.E(-1)) == -(rep.F(1) * rep.K))) return false;
    if (w >= 2) {
        if (!(conj(ops.S0, rep.E(0)) == -(rep.Kinv * rep.F(2)))) return false;
        if (!(conj(ops.S0, rep.F(0)) == -(rep.E(-2) * rep.K))) return false;
    }
    (void)s0i;

    // node-1 action
    if (!(conj(ops.S1, rep.E(0)) == -(rep.F(0) * rep.K))) return false;
    if (!(conj(ops.S1, rep.F(0)) == -(rep.Kinv * rep.E(0)))) return false;
    if (!(conj(ops.S1, rep.Hgen.at(0)) == -rep.Hgen.at(0))) return false;
    return true;
}

}  // namespace qweyl
