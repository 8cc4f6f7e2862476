#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qweyl/rational.hpp"
#include "qweyl/ratfunc.hpp"
#include "qweyl/series.hpp"

namespace qweyl {

using Cplx = std::complex<double>;

enum class Backend { rational, qfield, hseries, cfloat };

inline const char* backend_name(Backend b) {
    switch (b) {
        case Backend::rational: return "rational";
        case Backend::qfield: return "qfield";
        case Backend::hseries: return "hseries";
        case Backend::cfloat: return "cfloat";
    }
    return "?";
}

/// Uniform construction and inspection for the coefficient backends. Generic
/// matrix and representation code is written against this interface.
template <class R>
struct ring_ops;

template <>
struct ring_ops<Rat> {
    static constexpr Backend kind = Backend::rational;
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_long(long n) { return Rat(n); }
    static Rat from_rational(const Rat& r) { return r; }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static bool is_invertible(const Rat& x) { return !x.is_zero(); }
    static Rat inv(const Rat& x) { return x.inv(); }
    // Pivot preference for Gaussian elimination: cheaper representation first.
    static double pivot_weight(const Rat& x) {
        return static_cast<double>(mpz_sizeinbase(x.num().get_mpz_t(), 2) +
                                   mpz_sizeinbase(x.den().get_mpz_t(), 2));
    }
    static std::string str(const Rat& x) { return x.str(); }
};

template <>
struct ring_ops<RatFuncQ> {
    static constexpr Backend kind = Backend::qfield;
    static constexpr bool exact = true;
    static RatFuncQ zero() { return RatFuncQ(0); }
    static RatFuncQ one() { return RatFuncQ(1); }
    static RatFuncQ from_long(long n) { return RatFuncQ(n); }
    static RatFuncQ from_rational(const Rat& r) { return RatFuncQ(r); }
    static bool is_zero(const RatFuncQ& x) { return x.is_zero(); }
    static bool is_invertible(const RatFuncQ& x) { return !x.is_zero(); }
    static RatFuncQ inv(const RatFuncQ& x) { return x.inv(); }
    static double pivot_weight(const RatFuncQ& x) {
        return static_cast<double>(x.num().degree() + x.den().degree() + 2);
    }
    static std::string str(const RatFuncQ& x) { return x.str(); }
};

template <>
struct ring_ops<HSeries> {
    static constexpr Backend kind = Backend::hseries;
    static constexpr bool exact = true;  // exact modulo h^N
    // HSeries needs an order to construct constants; generic code obtains
    // constants from an existing value via same_shape helpers below.
    static bool is_zero(const HSeries& x) { return x.is_zero(); }
    static bool is_invertible(const HSeries& x) { return x.is_invertible(); }
    static HSeries inv(const HSeries& x) { return x.inv(); }
    static double pivot_weight(const HSeries& x) {
        return x.is_invertible() ? 1.0 : 1e18;
    }
    static std::string str(const HSeries& x) { return x.str(); }
};

template <>
struct ring_ops<Cplx> {
    static constexpr Backend kind = Backend::cfloat;
    static constexpr bool exact = false;
    static Cplx zero() { return Cplx(0.0, 0.0); }
    static Cplx one() { return Cplx(1.0, 0.0); }
    static Cplx from_long(long n) { return Cplx(static_cast<double>(n), 0.0); }
    static Cplx from_rational(const Rat& r) { return Cplx(r.to_double(), 0.0); }
    static bool is_zero(const Cplx& x) { return x == Cplx(0.0, 0.0); }
    static bool is_invertible(const Cplx& x) { return std::abs(x) > 1e-14; }
    static Cplx inv(const Cplx& x) {
        if (!is_invertible(x)) throw std::domain_error("Cplx: inverse of (near) zero");
        return Cplx(1.0, 0.0) / x;
    }
    static double pivot_weight(const Cplx& x) { return -std::abs(x); }
    static std::string str(const Cplx& x) {
        std::ostringstream os;
        os << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
        return os.str();
    }
};

/// Context carrying the deformation data of each backend: the element q, its
/// integer powers, and the q-integers derived from it. For the series backend
/// q = exp(h/2); for the complex backend q = exp(hbar/2) with hbar = 4*pi*i*h.
template <class R>
struct QContext;

template <>
struct QContext<RatFuncQ> {
    using Scalar = RatFuncQ;
    RatFuncQ zero() const { return RatFuncQ(0); }
    RatFuncQ one() const { return RatFuncQ(1); }
    RatFuncQ from_long(long n) const { return RatFuncQ(n); }
    RatFuncQ from_rational(const Rat& r) const { return RatFuncQ(r); }
    RatFuncQ q_pow(long n) const { return RatFuncQ::q_pow(n); }
};

template <>
struct QContext<HSeries> {
    using Scalar = HSeries;
    int order = 8;
    HSeries zero() const { return HSeries::zero(order); }
    HSeries one() const { return HSeries::one(order); }
    HSeries from_long(long n) const { return HSeries(n, order); }
    HSeries from_rational(const Rat& r) const { return HSeries(r, order); }
    HSeries q_pow(long n) const {
        return (HSeries::hbar(order) * HSeries(Rat(n, 2), order)).exp();
    }
    /// q^{r} for rational r (used for q^{-2s} with half-integer s).
    HSeries q_pow_rational(const Rat& r) const {
        return (HSeries::hbar(order) * HSeries(r * Rat(1, 2), order)).exp();
    }
    /// zeta = exp(-hbar * s), the evaluation point attached to a shift s.
    HSeries zeta_from_shift(const Rat& s) const {
        return (HSeries::hbar(order) * HSeries(-s, order)).exp();
    }
};

template <>
struct QContext<Cplx> {
    using Scalar = Cplx;
    Cplx hbar{0.0, 0.0};  // typically 4*pi*i*h
    Cplx zero() const { return Cplx(0.0, 0.0); }
    Cplx one() const { return Cplx(1.0, 0.0); }
    Cplx from_long(long n) const { return Cplx(static_cast<double>(n), 0.0); }
    Cplx from_rational(const Rat& r) const { return Cplx(r.to_double(), 0.0); }
    Cplx q_pow(long n) const { return std::exp(hbar * (static_cast<double>(n) / 2.0)); }
    Cplx q_pow_rational(const Rat& r) const { return std::exp(hbar * (r.to_double() / 2.0)); }
    Cplx zeta_from_shift(double s) const { return std::exp(-hbar * s); }
};

/// [n]_q = (q^n - q^{-n})/(q - q^{-1}), computed as the symmetric Laurent sum
/// q^{n-1} + q^{n-3} + ... + q^{1-n} so no division is needed; [-n] = -[n].
template <class Ctx>
typename Ctx::Scalar q_integer(const Ctx& ctx, long n) {
    if (n < 0) return -q_integer(ctx, -n);
    auto out = ctx.zero();
    for (long j = n - 1; j >= 1 - n; j -= 2) out += ctx.q_pow(j);
    return out;
}

template <class Ctx>
typename Ctx::Scalar q_factorial(const Ctx& ctx, long n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    auto out = ctx.one();
    for (long j = 2; j <= n; ++j) out *= q_integer(ctx, j);
    return out;
}

template <class Ctx>
typename Ctx::Scalar q_binomial(const Ctx& ctx, long n, long m) {
    if (m < 0 || m > n) throw std::domain_error("q_binomial: need 0 <= m <= n");
    return q_factorial(ctx, n) / (q_factorial(ctx, m) * q_factorial(ctx, n - m));
}

/// q - q^{-1}
template <class Ctx>
typename Ctx::Scalar q_minus_qinv(const Ctx& ctx) {
    return ctx.q_pow(1) - ctx.q_pow(-1);
}

}  // namespace qweyl
