#include "qloz/qproduct.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace qloz {

namespace {

// Exact division, quotient only; the caller guarantees divisibility.
QPoly divide_exact(const QPoly& num, const QPoly& den) {
    std::map<long long, BigInt> rem = num.coeffs();
    QPoly quot;
    const long long dd = den.degree();
    const BigInt& dlead = den.coeffs().rbegin()->second;
    while (!rem.empty()) {
        auto lead = rem.rbegin();
        long long e = lead->first - dd;
        if (e < 0) throw std::logic_error("divide_exact: not divisible");
        BigInt c = lead->second / dlead;
        if (c * dlead != lead->second) throw std::logic_error("divide_exact: not divisible");
        quot.add_term(e, c);
        for (auto& [de, dv] : den.coeffs()) {
            long long re = de + e;
            auto it = rem.find(re);
            BigInt nv = (it == rem.end() ? BigInt(0) : it->second) - c * dv;
            if (nv == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[re] = nv;
            }
        }
    }
    return quot;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    return ds;
}

// For d >= 2: Phi_d(1) = p when d = p^k, else 1.
long phi_at_one(long d) {
    long n = d;
    long p = 0;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            p = f;
            while (n % f == 0) n /= f;
            break;
        }
    }
    if (p == 0) return d;        // d prime
    return n == 1 ? p : 1;       // pure prime power vs several prime factors
}

}  // namespace

const QPoly& cyclotomic(long d) {
    static std::unordered_map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // Fill bottom-up over sorted divisors: Phi_e = (q^e - 1) / prod_{f|e, f<e} Phi_f.
    auto ds = divisors(d);
    std::sort(ds.begin(), ds.end());
    for (long e : ds) {
        if (cache.count(e)) continue;
        QPoly phi;
        if (e == 1) {
            phi = QPoly::monomial(1) - QPoly::one();
        } else {
            QPoly den = QPoly::one();
            for (long f : divisors(e))
                if (f != e) den *= cache.at(f);
            phi = divide_exact(QPoly::monomial(e) - QPoly::one(), den);
        }
        cache.emplace(e, std::move(phi));
    }
    return cache.at(d);
}

QProduct& QProduct::operator*=(const QProduct& o) {
    sign_ *= o.sign_;
    qpow_ += o.qpow_;
    for (auto& [d, e] : o.e_) mul_cyclo(d, e);
    return *this;
}

QProduct& QProduct::operator/=(const QProduct& o) {
    sign_ *= o.sign_;
    qpow_ -= o.qpow_;
    for (auto& [d, e] : o.e_) mul_cyclo(d, -e);
    return *this;
}

void QProduct::mul_cyclo(long d, long long exponent) {
    if (exponent == 0) return;
    auto it = e_.find(d);
    if (it == e_.end()) {
        e_[d] = exponent;
    } else {
        it->second += exponent;
        if (it->second == 0) e_.erase(it);
    }
}

void QProduct::mul_q_integer(long long n, long long exponent) {
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) mul_cyclo(d, exponent);
}

bool QProduct::expandable() const {
    if (qpow_ < 0) return false;
    for (auto& [d, e] : e_)
        if (e < 0) return false;
    return true;
}

QPoly QProduct::expand() const {
    if (!expandable()) throw NotPolynomialError("q-product has negative exponents: " + to_string());
    QPoly r = QPoly::monomial(qpow_, BigInt(sign_));
    for (auto& [d, e] : e_) {
        const QPoly& phi = cyclotomic(d);
        for (long long k = 0; k < e; ++k) r *= phi;
    }
    return r;
}

BigInt QProduct::eval_at_one() const {
    if (!expandable()) throw NotPolynomialError("q-product has negative exponents: " + to_string());
    BigInt v = sign_;
    for (auto& [d, e] : e_) {
        long b = phi_at_one(d);
        for (long long k = 0; k < e; ++k) v *= b;
    }
    return v;
}

std::string QProduct::to_string() const {
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    os << "q^" << qpow_;
    for (auto& [d, e] : e_) os << " Phi_" << d << "^" << e;
    return os.str();
}

QProduct q_factorial(long long n) {
    QProduct p;
    // Phi_d appears in [k]_q for every multiple k of d, so its exponent in
    // [n]_q! is floor(n/d).
    for (long d = 2; d <= n; ++d) p.mul_cyclo(d, n / d);
    return p;
}

QProduct q_hyperfactorial(long long n) {
    QProduct p;
    // Exponent of Phi_d in H_q(n) = sum_{k<n} floor(k/d).
    for (long d = 2; d <= n - 1; ++d) {
        long long s = 0;
        for (long long k = d; k < n; ++k) s += k / d;
        p.mul_cyclo(d, s);
    }
    return p;
}

BigInt hyperfactorial(long long n) {
    BigInt h = 1, f = 1;
    for (long long k = 1; k < n; ++k) {
        f *= k;
        h *= f;
    }
    return h;
}

}  // namespace qloz
