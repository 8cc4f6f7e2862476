#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qweyl {

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// materializes every expression immediately, so generic code never sees
/// GMP expression templates.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const mpz_class& v) : v_(v) {}

    static Rat from_string(const std::string& s) {
        mpq_class v(s);
        v.canonicalize();
        return Rat(v);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Rat base = *this, out(1);
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat factorial_rat(long n) {
    Rat out(1);
    for (long i = 2; i <= n; ++i) out *= Rat(i);
    return out;
}

inline Rat binomial_rat(long n, long m) {
    if (m < 0 || m > n) return Rat(0);
    Rat out(1);
    for (long i = 0; i < m; ++i) out *= Rat(n - i, i + 1);
    return out;
}

}  // namespace qweyl
