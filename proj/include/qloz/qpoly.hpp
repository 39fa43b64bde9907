#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "qloz/errors.hpp"

namespace qloz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact univariate polynomial in q. Sparse exponent -> coefficient map;
/// no stored coefficient is zero, the zero polynomial is the empty map.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(long long constant) {
        if (constant != 0) c_[0] = constant;
    }
    explicit QPoly(const BigInt& constant) {
        if (constant != 0) c_[0] = constant;
    }

    static QPoly zero() { return QPoly{}; }
    static QPoly one() { return QPoly{1}; }
    static QPoly monomial(long long exponent, BigInt coeff = BigInt(1)) {
        QPoly p;
        if (coeff != 0) p.c_[exponent] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    /// Degree of the zero polynomial is reported as -1.
    long long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    long long low_degree() const { return c_.empty() ? -1 : c_.begin()->first; }

    const std::map<long long, BigInt>& coeffs() const { return c_; }

    BigInt coeff(long long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    BigInt eval_one() const {
        BigInt s = 0;
        for (auto& [e, v] : c_) s += v;
        return s;
    }

    QPoly& operator+=(const QPoly& o) {
        for (auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (auto& [ea, va] : a.c_)
            for (auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    /// Multiply by q^dq. Negative dq must not push any exponent below zero.
    QPoly shifted(long long dq) const {
        if (is_zero()) return QPoly{};
        if (dq < 0 && low_degree() + dq < 0)
            throw DivisionFailureError("monomial division leaves negative exponent");
        QPoly r;
        for (auto& [e, v] : c_) r.c_[e + dq] = v;
        return r;
    }

    /// Add c * q^e in place.
    void add_term(long long e, const BigInt& v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool operator==(const QPoly&) const = default;

    std::string to_string() const;

private:
    std::map<long long, BigInt> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q is the zero polynomial.
QPoly q_integer(long long n);

}  // namespace qloz
