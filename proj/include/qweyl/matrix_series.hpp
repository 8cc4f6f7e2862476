#pragma once

#include <stdexcept>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

/// Ring element for a small integer, shaped like the sample (keeps the
/// truncation order for the series backend).
template <class R>
R make_long(long n, const R& sample) {
    R one = ring_one_like<R>::get(sample);
    R out = one - one;
    long a = n < 0 ? -n : n;
    for (long i = 0; i < a; ++i) out += one;
    return n < 0 ? -out : out;
}

// numerator and denominator fit in a machine word for every use here
template <class R>
R make_rational(const Rat& r, const R& sample) {
    R n = make_long<R>(r.num().get_si(), sample);
    R d = make_long<R>(r.den().get_si(), sample);
    return n * ring_ops<R>::inv(d);
}

namespace detail {

/// Multiply two matrix polynomials (coefficients of z^1..z^R, no constant
/// term), truncating at degree R.
template <class R>
std::vector<Matrix<R>> mulseries(const std::vector<Matrix<R>>& a,
                                 const std::vector<Matrix<R>>& b, int order,
                                 const Matrix<R>& zero) {
    std::vector<Matrix<R>> out(order, zero);
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.size()); ++j) {
            int k = i + j + 1;  // degrees (i+1) + (j+1) land at index k
            if (k >= order) continue;
            out[k] += a[i] * b[j];
        }
    return out;
}

}  // namespace detail

/// Formal logarithm of the matrix series 1 + sum_r Psi_r z^{-r}: returns
/// [L_1..L_R] with exp(sum L_r z^{-r}) = 1 + sum Psi_r z^{-r} mod z^{-(R+1)}.
/// Coefficients need not commute; the series-log formula is applied verbatim.
template <class R>
std::vector<Matrix<R>> matrix_series_log(const std::vector<Matrix<R>>& psi) {
    int order = static_cast<int>(psi.size());
    if (order == 0) return {};
    R sample = psi[0].zero_elem();
    Matrix<R> zero = psi[0].scaled(sample);
    std::vector<Matrix<R>> out(order, zero);
    std::vector<Matrix<R>> pw = psi;  // psi^m, starting at m = 1
    for (int m = 1; m <= order; ++m) {
        R c = make_rational<R>(Rat((m % 2 == 1) ? 1 : -1, m), sample);
        for (int r = 0; r < order; ++r) out[r] += pw[r].scaled(c);
        if (m < order) pw = detail::mulseries(pw, psi, order, zero);
    }
    return out;
}

/// Formal exponential, inverse to matrix_series_log: from [L_1..L_R] to the
/// coefficients [Psi_1..Psi_R] of exp(sum L_r z^{-r}) - 1.
template <class R>
std::vector<Matrix<R>> matrix_series_exp(const std::vector<Matrix<R>>& lcoef) {
    int order = static_cast<int>(lcoef.size());
    if (order == 0) return {};
    R sample = lcoef[0].zero_elem();
    Matrix<R> zero = lcoef[0].scaled(sample);
    std::vector<Matrix<R>> out(order, zero);
    std::vector<Matrix<R>> pw = lcoef;
    Rat fact(1);
    for (int m = 1; m <= order; ++m) {
        fact /= Rat(m);
        R c = make_rational<R>(fact, sample);
        for (int r = 0; r < order; ++r) out[r] += pw[r].scaled(c);
        if (m < order) pw = detail::mulseries(pw, lcoef, order, zero);
    }
    return out;
}

}  // namespace qweyl
