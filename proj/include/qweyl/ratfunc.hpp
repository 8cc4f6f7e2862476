#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweyl/rational.hpp"

namespace qweyl {

/// Dense univariate polynomial in q with exact rational coefficients,
/// ascending powers. The zero polynomial has an empty coefficient list.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rat c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static QPoly monomial(Rat c, int e) {
        if (c.is_zero()) return QPoly();
        std::vector<Rat> v(e + 1, Rat(0));
        v[e] = c;
        return QPoly(std::move(v));
    }
    static QPoly variable() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int e) const {
        return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[e] : Rat(0);
    }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
    int term_count() const {
        int n = 0;
        for (const auto& c : c_)
            if (!c.is_zero()) ++n;
        return n;
    }

    QPoly operator-() const {
        QPoly out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }
    QPoly scaled(const Rat& s) const {
        QPoly out = *this;
        for (auto& c : out.c_) c *= s;
        out.trim();
        return out;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder).
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
        QPoly r = a, quo;
        std::vector<Rat> qc(std::max(0, a.degree() - b.degree() + 1), Rat(0));
        Rat lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int e = r.degree() - b.degree();
            Rat f = r.leading() / lb;
            qc[e] = f;
            r = r - (b * monomial(f, e));
        }
        quo = QPoly(std::move(qc));
        return {quo, r};
    }

    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = divmod(a, b).second;
            a = b;
            b = r;
        }
        if (a.is_zero()) return a;
        return a.scaled(a.leading().inv());  // monic
    }

    Rat eval(const Rat& x) const {
        Rat out(0);
        for (int i = degree(); i >= 0; --i) out = out * x + c_[i];
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = degree(); e >= 0; --e) {
            const Rat& c = c_[e];
            if (c.is_zero()) continue;
            Rat a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? "-" : "+");
            }
            bool unit = a.is_one();
            if (!unit || e == 0) os << a.str();
            if (e > 0) {
                if (!unit) os << "*";
                os << "q";
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Element of the field Q(q) of rational functions in q. Stored reduced
/// (gcd of numerator and denominator is 1) with a monic denominator, so
/// equality is plain structural comparison. Laurent polynomials embed as
/// fractions with denominator q^k.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(QPoly(Rat(1))) {}
    RatFuncQ(long n) : num_(QPoly(Rat(n))), den_(QPoly(Rat(1))) {}
    explicit RatFuncQ(const Rat& r) : num_(QPoly(r)), den_(QPoly(Rat(1))) {}
    RatFuncQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
        normalize();
    }

    static RatFuncQ q() { return RatFuncQ(QPoly::variable(), QPoly(Rat(1))); }
    static RatFuncQ q_pow(long e) {
        if (e >= 0) return RatFuncQ(QPoly::monomial(Rat(1), static_cast<int>(e)), QPoly(Rat(1)));
        return RatFuncQ(QPoly(Rat(1)), QPoly::monomial(Rat(1), static_cast<int>(-e)));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RatFuncQ operator-() const {
        RatFuncQ out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
        return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    RatFuncQ inv() const {
        if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
        return RatFuncQ(den_, num_);
    }

    RatFuncQ pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFuncQ base = *this, out(1);
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// Evaluate at a rational point; throws if the (reduced) denominator vanishes.
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("RatFuncQ: pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str() const {
        if (den_ == QPoly(Rat(1))) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = QPoly(Rat(1));
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::divmod(num_, g).first;
            den_ = QPoly::divmod(den_, g).first;
        }
        Rat lead = den_.leading();
        if (!lead.is_one()) {
            Rat il = lead.inv();
            num_ = num_.scaled(il);
            den_ = den_.scaled(il);
        }
    }

    QPoly num_, den_;
};

}  // namespace qweyl
