#pragma once

namespace qloz {

/// Literal transcriptions of the closed-form q-exponents. Everything funnels
/// through choose2 so inclusive/exclusive conventions cannot drift between
/// formulas and tests.

constexpr long long choose2(long long n) { return n * (n + 1) / 2; }  // C(n+1, 2)

/// Exponent relating the wt1 generating function of an F region to the pile
/// volume generating function.
constexpr long long exp_g(long long x, long long y, long long z, long long a, long long b,
                          long long c, long long d, long long e, long long f) {
    return (x + z + d + f) * choose2(y + b) + e * choose2(b) + a * (c + x) * (a + b + y) +
           a * choose2(x + c) + (x + d) * (a + b + y) * (f + x + z) +
           (x + z + f) * choose2(d + x) + b * (d + e + x + y) * (a + b + y) +
           b * choose2(x + y + d + e) + f * (z + b) * (a + b + d + e + x + 2 * y + z) +
           (z + b) * choose2(f) + x * c * (a + b + d + x + y) + x * choose2(c);
}

/// Exponent relating the wt2 generating function of an F region to the pile
/// volume generating function.
constexpr long long exp_h(long long x, long long y, long long z, long long a, long long b,
                          long long c, long long d, long long e, long long f) {
    return b * choose2(x + z + d + e + f) + y * choose2(x + z + d + f) + (x + c) * choose2(a) +
           x * c * (a + d) + c * choose2(x) + (x + d) * choose2(x + z + f) +
           (x + d) * (x + z + f) * (a + d) + f * choose2(b + z) + (x + y + d + e) * choose2(b) +
           f * (z + b) * (x + y + z + a + d + e + f) +
           b * (x + y + z + a + d + e + f) * (x + y + d + e);
}

/// q-power prefactor of the wt2 generating function of a Q region.
constexpr long long exp_E(long long a, long long b, long long x, long long y, long long z,
                          long long /*t*/) {
    return (y + b) * choose2(z) + x * choose2(a + z) + b * (x + y) * (a + y + z) +
           (x + y) * choose2(b);
}

/// q-power prefactor of the wt3 generating function of a Q region.
constexpr long long exp_q_wt3(long long a, long long b, long long x, long long y,
                              long long /*z*/, long long t) {
    return b * choose2(a + y) + y * choose2(a + y + t) + x * choose2(y + t);
}

/// q-power prefactor of the wt2 generating function of a B region.
constexpr long long exp_A(long long x, long long y, long long z, long long t, long long a,
                          long long b, long long c, long long d) {
    return y * choose2(a + z) + (c + z + t) * choose2(z + b) + x * choose2(b + d + z) +
           a * z * (b + z) + z * choose2(a) + c * (x + t) * (b + d + z + t) +
           (x + t) * choose2(c);
}

/// q-power prefactor of the wt2 generating function of a K region.
constexpr long long exp_k_wt2(long long a, long long x, long long y, long long z,
                              long long /*t*/) {
    return y * choose2(z) + x * choose2(z + a);
}

constexpr long long exp_hex_wt1(long long a, long long b, long long /*c*/) {
    return a * choose2(b);
}

constexpr long long exp_hex_wt2(long long a, long long b, long long /*c*/) {
    return b * choose2(a);
}

}  // namespace qloz
