#pragma once

#include <map>

#include "qloz/qpoly.hpp"

namespace qloz {

/// Canonical form sign * q^qpow * prod_{d>=2} Phi_d(q)^{e_d} over cyclotomic
/// polynomials. q-integers factor as [n]_q = prod_{d | n, d > 1} Phi_d(q), so
/// ratios of q-factorials and q-hyperfactorials stay exact without expansion.
class QProduct {
public:
    QProduct() = default;

    static QProduct q_power(long long k) {
        QProduct p;
        p.qpow_ = k;
        return p;
    }

    int sign() const { return sign_; }
    long long qpow() const { return qpow_; }
    const std::map<long, long long>& cyclo() const { return e_; }

    bool is_one() const { return sign_ == 1 && qpow_ == 0 && e_.empty(); }

    QProduct& operator*=(const QProduct& o);
    QProduct& operator/=(const QProduct& o);
    friend QProduct operator*(QProduct a, const QProduct& b) { return a *= b; }
    friend QProduct operator/(QProduct a, const QProduct& b) { return a /= b; }

    /// True iff qpow >= 0 and every cyclotomic exponent is nonnegative.
    bool expandable() const;

    /// Exact polynomial expansion; throws NotPolynomialError when not expandable.
    QPoly expand() const;

    /// Value at q = 1 without expanding: Phi_d(1) = p when d is a prime power p^k,
    /// otherwise 1 (d >= 2 throughout).
    BigInt eval_at_one() const;

    void mul_cyclo(long d, long long exponent);
    void mul_q_power(long long k) { qpow_ += k; }
    void mul_sign(int s) { sign_ *= s; }

    /// Multiply by [n]_q (as a product of cyclotomic factors); n >= 1.
    void mul_q_integer(long long n, long long exponent = 1);

    bool operator==(const QProduct&) const = default;

    std::string to_string() const;

private:
    int sign_ = 1;
    long long qpow_ = 0;
    std::map<long, long long> e_;
};

/// [n]_q! in canonical form; [0]_q! = 1.
QProduct q_factorial(long long n);

/// H_q(n) = [0]_q! [1]_q! ... [n-1]_q!; H_q(0) = H_q(1) = 1.
QProduct q_hyperfactorial(long long n);

/// d-th cyclotomic polynomial, d >= 1, computed exactly and cached.
const QPoly& cyclotomic(long d);

/// Ordinary hyperfactorial H(n) = 0! 1! ... (n-1)!.
BigInt hyperfactorial(long long n);

}  // namespace qloz
