#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweyl/ratfunc.hpp"
#include "qweyl/rational.hpp"

namespace qweyl {

/// Truncated formal power series in h (the deformation parameter) with exact
/// rational coefficients. Arithmetic is exact modulo h^N. Every value carries
/// its own truncation order; mixed-order arithmetic truncates to the minimum,
/// so precision never silently inflates.
class HSeries {
public:
    HSeries() : c_(1, Rat(0)) {}
    HSeries(Rat c0, int order) : c_(check_order(order), Rat(0)) { c_[0] = c0; }
    HSeries(long n, int order) : HSeries(Rat(n), order) {}
    explicit HSeries(std::vector<Rat> c) : c_(std::move(c)) {
        if (c_.empty()) throw std::domain_error("HSeries: order must be >= 1");
    }

    static HSeries zero(int order) { return HSeries(Rat(0), order); }
    static HSeries one(int order) { return HSeries(Rat(1), order); }
    static HSeries hbar(int order) {
        HSeries s(Rat(0), order);
        if (order > 1) s.c_[1] = Rat(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    Rat coeff(int i) const {
        return (i >= 0 && i < order()) ? c_[i] : Rat(0);
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_invertible() const { return !c_[0].is_zero(); }

    /// h-adic valuation; returns order() when the series is 0 mod h^N.
    int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (!c_[i].is_zero()) return i;
        return order();
    }

    HSeries truncated(int order) const {
        std::vector<Rat> c(c_.begin(), c_.begin() + std::min<int>(order, this->order()));
        c.resize(order, Rat(0));
        return HSeries(std::move(c));
    }

    HSeries operator-() const {
        HSeries out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }
    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<Rat> c(n);
        for (int i = 0; i < n; ++i) c[i] = a.c_[i] + b.c_[i];
        return HSeries(std::move(c));
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }
    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<Rat> c(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j + i < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return HSeries(std::move(c));
    }
    friend HSeries operator/(const HSeries& a, const HSeries& b) { return a * b.inv(); }
    HSeries& operator+=(const HSeries& o) { return *this = *this + o; }
    HSeries& operator-=(const HSeries& o) { return *this = *this - o; }
    HSeries& operator*=(const HSeries& o) { return *this = *this * o; }
    HSeries& operator/=(const HSeries& o) { return *this = *this / o; }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        return (a - b).is_zero();  // compared at the common order
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

    HSeries inv() const {
        if (!is_invertible())
            throw std::domain_error("HSeries: inverse requires nonzero constant term");
        int n = order();
        std::vector<Rat> c(n, Rat(0));
        Rat i0 = c_[0].inv();
        c[0] = i0;
        for (int k = 1; k < n; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * c[k - j];
            c[k] = -acc * i0;
        }
        return HSeries(std::move(c));
    }

    HSeries pow(long e) const {
        if (e < 0) return inv().pow(-e);
        HSeries base = *this, out = one(order());
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// exp of a series with zero constant term.
    HSeries exp() const {
        if (!c_[0].is_zero())
            throw std::domain_error("HSeries: exp requires zero constant term");
        int n = order();
        HSeries out = one(n), term = one(n);
        for (int k = 1; k < n; ++k) {
            term = term * *this;
            term = HSeries([&] {
                std::vector<Rat> c = term.c_;
                for (auto& x : c) x /= Rat(k);
                return c;
            }());
            out += term;
        }
        return out;
    }

    /// log of a series with constant term one.
    HSeries log() const {
        if (!c_[0].is_one())
            throw std::domain_error("HSeries: log requires constant term one");
        int n = order();
        HSeries u = *this - one(n);  // valuation >= 1
        HSeries out = zero(n), upow = one(n);
        for (int k = 1; k < n; ++k) {
            upow *= u;
            Rat c = Rat((k % 2 == 1) ? 1 : -1, k);
            out += upow * HSeries(c, n);
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < order(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            os << c_[i].str();
            if (i == 1) os << "*h";
            if (i > 1) os << "*h^" << i;
            first = false;
        }
        if (first) os << "0";
        os << " + O(h^" << order() << ")";
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 1) throw std::domain_error("HSeries: order must be >= 1");
        return order;
    }
    std::vector<Rat> c_;
};

/// Substitute q = exp(h/2) into an element of Q(q), truncated at the given
/// order. Fails with a domain error when the reduced denominator vanishes at
/// q = 1, which signals a genuinely singular scalar such as 1/(q - q^{-1}).
inline HSeries embed_q_series(const RatFuncQ& x, int order) {
    HSeries qs = (HSeries::hbar(order) * HSeries(Rat(1, 2), order)).exp();
    auto subst = [&](const QPoly& p) {
        HSeries out = HSeries::zero(order);
        for (int i = p.degree(); i >= 0; --i)
            out = out * qs + HSeries(p.coeff(i), order);
        return out;
    };
    HSeries den = subst(x.den());
    if (!den.is_invertible())
        throw std::domain_error(
            "embed_q_series: denominator vanishes at q=1 (non-embeddable scalar)");
    return subst(x.num()) / den;
}

}  // namespace qweyl
