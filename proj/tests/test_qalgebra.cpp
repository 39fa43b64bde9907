#include <doctest.h>

#include <random>

#include "qloz/qpoly.hpp"
#include "qloz/qproduct.hpp"

using namespace qloz;

TEST_CASE("q_integer basics") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == QPoly::one());
    QPoly three;
    three.add_term(0, 1);
    three.add_term(1, 1);
    three.add_term(2, 1);
    CHECK(q_integer(3) == three);
}

TEST_CASE("q_factorial and q_hyperfactorial canonical forms") {
    CHECK(q_factorial(0).is_one());
    CHECK(q_hyperfactorial(0).is_one());
    CHECK(q_hyperfactorial(1).is_one());

    // H_q(3) = [1]! [2]! = 1 + q = Phi_2.
    QPoly one_plus_q;
    one_plus_q.add_term(0, 1);
    one_plus_q.add_term(1, 1);
    CHECK(q_hyperfactorial(3).expand() == one_plus_q);

    // [4]! = Phi_2^2 Phi_3 Phi_4.
    QProduct f4 = q_factorial(4);
    CHECK(f4.cyclo() == std::map<long, long long>{{2, 2}, {3, 1}, {4, 1}});

    // Direct expansion matches [1][2][3][4].
    QPoly direct = q_integer(2) * q_integer(3) * q_integer(4);
    CHECK(f4.expand() == direct);
}

TEST_CASE("qp_mul and qp_div are exact on the exponent maps") {
    QProduct x = q_factorial(7);
    CHECK((x / x).is_one());
    CHECK((q_hyperfactorial(2) * q_hyperfactorial(2)).is_one());

    // [4]!/[3]! = [4] = Phi_2 Phi_4.
    QProduct r = q_factorial(4) / q_factorial(3);
    CHECK(r.cyclo() == std::map<long, long long>{{2, 1}, {4, 1}});
    CHECK(r.expand() == q_integer(4));
}

TEST_CASE("expand matches polynomial multiplication on random small products") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> pick(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        QProduct a, b;
        for (int k = 0; k < 3; ++k) {
            long long n = pick(rng), m = pick(rng);
            a *= q_factorial(n);
            b *= q_factorial(m);
        }
        a.mul_q_power(pick(rng));
        b.mul_q_power(pick(rng));
        CHECK((a * b).expand() == a.expand() * b.expand());
    }
}

TEST_CASE("expandability and NotPolynomial") {
    QProduct bad = q_factorial(2) / q_factorial(5);
    CHECK(!bad.expandable());
    CHECK_THROWS_AS(bad.expand(), NotPolynomialError);
    CHECK_THROWS_AS(bad.eval_at_one(), NotPolynomialError);
}

TEST_CASE("eval_at_one agrees with expansion") {
    for (long long n = 0; n <= 12; ++n) {
        QProduct h = q_hyperfactorial(n);
        CHECK(h.eval_at_one() == h.expand().eval_one());
    }
    QProduct r = q_hyperfactorial(9) / (q_hyperfactorial(4) * q_hyperfactorial(5));
    CHECK(r.eval_at_one() == r.expand().eval_one());
}

TEST_CASE("reciprocal identity: q^{n-1} [n]_{1/q} = [n]_q for n <= 30") {
    for (long long n = 1; n <= 30; ++n) {
        QPoly p = q_integer(n);
        // Substituting q -> 1/q and clearing q^{n-1} reverses the coefficients.
        QPoly rev;
        for (auto& [e, v] : p.coeffs()) rev.add_term(n - 1 - e, v);
        CHECK(rev == p);
    }
}

TEST_CASE("H_q(n+1) = [n]_q! H_q(n) for n <= 30") {
    for (long long n = 0; n <= 30; ++n)
        CHECK(q_hyperfactorial(n + 1) == q_factorial(n) * q_hyperfactorial(n));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == QPoly::monomial(1) - QPoly::one());
    CHECK(cyclotomic(2) == q_integer(2));
    QPoly phi6;
    phi6.add_term(0, 1);
    phi6.add_term(1, -1);
    phi6.add_term(2, 1);
    CHECK(cyclotomic(6) == phi6);
    // prod_{d | n} Phi_d = q^n - 1.
    for (long n : {6L, 12L, 30L}) {
        QPoly prod = QPoly::one();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == QPoly::monomial(n) - QPoly::one());
    }
}

TEST_CASE("hyperfactorial integers") {
    CHECK(hyperfactorial(0) == 1);
    CHECK(hyperfactorial(1) == 1);
    CHECK(hyperfactorial(4) == 12);  // 0! 1! 2! 3!
}
