#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "qweyl/rational.hpp"

namespace qweyl {

/// Polynomial in commuting variables x_0, x_1, ... with exact rational
/// coefficients. Canonical form: sorted monomial map, zero coefficients
/// dropped, trailing zero exponents trimmed, so equality is structural.
class CommutativePoly {
public:
    using Expo = std::vector<int>;

    CommutativePoly() = default;

    static CommutativePoly variable(int i) {
        CommutativePoly p;
        Expo e(i + 1, 0);
        e[i] = 1;
        p.terms_[e] = Rat(1);
        return p;
    }
    static CommutativePoly constant(const Rat& c) {
        CommutativePoly p;
        if (!c.is_zero()) p.terms_[Expo{}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    void add_term(Expo e, const Rat& c) {
        trim(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[std::move(e)] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CommutativePoly operator-() const {
        CommutativePoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    friend CommutativePoly operator+(const CommutativePoly& a, const CommutativePoly& b) {
        CommutativePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend CommutativePoly operator-(const CommutativePoly& a, const CommutativePoly& b) {
        return a + (-b);
    }
    friend CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b) {
        CommutativePoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    CommutativePoly scaled(const Rat& s) const {
        CommutativePoly out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
        return out;
    }
    CommutativePoly pow(int n) const {
        CommutativePoly out = constant(Rat(1));
        for (int i = 0; i < n; ++i) out = out * *this;
        return out;
    }
    friend bool operator==(const CommutativePoly& a, const CommutativePoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << c.str();
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) {
                    os << "*x" << i;
                    if (e[i] > 1) os << "^" << e[i];
                }
            first = false;
        }
        return os.str();
    }

private:
    static void trim(Expo& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    std::map<Expo, Rat> terms_;
};

namespace detail {

/// sum over partitions of `total` with exactly m parts (parts >= 1) of
/// (m! / prod multiplicities!) x_{part_1} ... x_{part_m}.
inline void partitions_rec(int total, int m, int max_part, std::vector<int>& parts,
                           CommutativePoly& out) {
    if (m == 0) {
        if (total != 0) return;
        std::map<int, int> mult;
        for (int p : parts) ++mult[p];
        Rat coeff = factorial_rat(static_cast<long>(parts.size()));
        for (const auto& [p, cnt] : mult) coeff /= factorial_rat(cnt);
        CommutativePoly::Expo e;
        for (int p : parts) {
            if (static_cast<int>(e.size()) <= p) e.resize(p + 1, 0);
            e[p] += 1;
        }
        out.add_term(std::move(e), coeff);
        return;
    }
    for (int p = std::min(max_part, total - (m - 1)); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(total - p, m - 1, p, parts, out);
        parts.pop_back();
    }
}

inline CommutativePoly partition_sum(int total, int m) {
    CommutativePoly out;
    std::vector<int> parts;
    partitions_rec(total, m, total, parts, out);
    return out;
}

/// sum over compositions a_1 + ... + a_m = total, a_i >= 1, of x_{a_1}...x_{a_m}.
inline void compositions_rec(int total, int m, CommutativePoly::Expo& e, CommutativePoly& out) {
    if (m == 0) {
        if (total == 0) out.add_term(e, Rat(1));
        return;
    }
    for (int a = 1; a <= total - (m - 1); ++a) {
        if (static_cast<int>(e.size()) <= a) e.resize(a + 1, 0);
        e[a] += 1;
        compositions_rec(total - a, m - 1, e, out);
        e[a] -= 1;
    }
}

inline CommutativePoly composition_sum(int total, int m) {
    CommutativePoly out;
    CommutativePoly::Expo e;
    compositions_rec(total, m, e, out);
    return out;
}

}  // namespace detail

/// p_{l;n}^{(m)} via the partition form with multinomial weights. For l = 0
/// the r = 0 contribution is the special term (-1)^{m-1} x_0^m.
inline CommutativePoly p_poly(int l, int n, int m) {
    if (l < 0 || n < 0 || m < 1) throw std::domain_error("p_poly: need l,n >= 0 and m >= 1");
    CommutativePoly out;
    int r0 = 0;
    if (l == 0) {
        Rat sign((m % 2 == 1) ? 1 : -1);
        out = out + CommutativePoly::variable(0).pow(m).scaled(sign);
        r0 = 1;
    }
    for (int r = r0; r <= n; ++r) {
        Rat c = binomial_rat(n, r);
        if (r % 2 == 1) c = -c;
        out = out + detail::partition_sum(l + r, m).scaled(c);
    }
    return out;
}

/// Same polynomial via direct composition enumeration (the rewritten form);
/// the independent oracle for p_poly.
inline CommutativePoly p_poly_compositions(int l, int n, int m) {
    if (l < 0 || n < 0 || m < 1) throw std::domain_error("p_poly: need l,n >= 0 and m >= 1");
    CommutativePoly out;
    int r0 = 0;
    if (l == 0) {
        Rat sign((m % 2 == 1) ? 1 : -1);
        out = out + CommutativePoly::variable(0).pow(m).scaled(sign);
        r0 = 1;
    }
    for (int r = r0; r <= n; ++r) {
        Rat c = binomial_rat(n, r);
        if (r % 2 == 1) c = -c;
        out = out + detail::composition_sum(l + r, m).scaled(c);
    }
    return out;
}

/// p_{l;n}^{(m)} = sum_{t=1}^{l-1} p_{t;0}^{(m-1)} p_{l-t;n}^{(1)}
///               - sum_{k=0}^{n-1} p_{1;k}^{(1)} p_{l;n-k-1}^{(m-1)}
inline bool verify_relation_l(int l, int n, int m) {
    if (m < 2 || l < 1) throw std::domain_error("verify_relation_l: need m >= 2, l >= 1");
    CommutativePoly rhs;
    for (int t = 1; t <= l - 1; ++t) rhs = rhs + p_poly(t, 0, m - 1) * p_poly(l - t, n, 1);
    for (int k = 0; k <= n - 1; ++k) rhs = rhs - p_poly(1, k, 1) * p_poly(l, n - k - 1, m - 1);
    return p_poly(l, n, m) == rhs;
}

/// p_{0;n}^{(m)} = (-1)^{m-1} x_0^{m-1} p_{0;n-1}^{(1)}
///               - sum_{k=0}^{n-2} p_{1;k}^{(1)} p_{0;n-1-k}^{(m-1)}
inline bool verify_relation_0(int n, int m) {
    if (m < 2 || n < 1) throw std::domain_error("verify_relation_0: need m >= 2, n >= 1");
    Rat sign((m % 2 == 1) ? 1 : -1);
    CommutativePoly rhs = CommutativePoly::variable(0).pow(m - 1).scaled(sign) * p_poly(0, n - 1, 1);
    for (int k = 0; k <= n - 2; ++k) rhs = rhs - p_poly(1, k, 1) * p_poly(0, n - 1 - k, m - 1);
    return p_poly(0, n, m) == rhs;
}

/// sum_{t=1}^{l-1} p_{t;0}^{(m-1)} p_{l-t;n}^{(1)} - p_{l;n}^{(m)}
///   = sum_{s=0}^{n-1} (-1)^s binom(n, s+1)
///       sum x_{a_1}...x_{a_m} over compositions a_1+...+a_m = l+s+1
///       whose leading partial sum satisfies l <= a_1+...+a_{m-1} <= l+s.
inline bool verify_lhs(int l, int n, int m) {
    if (m < 2 || l < 1) throw std::domain_error("verify_lhs: need m >= 2, l >= 1");
    CommutativePoly lhs;
    for (int t = 1; t <= l - 1; ++t) lhs = lhs + p_poly(t, 0, m - 1) * p_poly(l - t, n, 1);
    lhs = lhs - p_poly(l, n, m);
    CommutativePoly rhs;
    for (int s = 0; s <= n - 1; ++s) {
        Rat c = binomial_rat(n, s + 1);
        if (s % 2 == 1) c = -c;
        CommutativePoly window;
        for (int last = 1; last <= s + 1; ++last)
            window = window +
                     detail::composition_sum(l + s + 1 - last, m - 1) * CommutativePoly::variable(last);
        rhs = rhs + window.scaled(c);
    }
    return lhs == rhs;
}

}  // namespace qweyl
