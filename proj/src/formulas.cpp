#include "qloz/formulas.hpp"

#include "qloz/exponents.hpp"

namespace qloz {

namespace {

// Accumulates a product of H_q(arg)^exp factors.
struct HProd {
    QProduct p;
    HProd& num(long long arg, long long exp = 1) {
        QProduct h = q_hyperfactorial(arg);
        for (long long k = 0; k < exp; ++k) p *= h;
        return *this;
    }
    HProd& den(long long arg, long long exp = 1) {
        QProduct h = q_hyperfactorial(arg);
        for (long long k = 0; k < exp; ++k) p /= h;
        return *this;
    }
};

// Integer counterpart of HProd; numerator and denominator kept separate so the
// division at the end is exact.
struct HProdInt {
    BigInt n = 1, d = 1;
    HProdInt& num(long long arg, long long exp = 1) {
        BigInt h = hyperfactorial(arg);
        for (long long k = 0; k < exp; ++k) n *= h;
        return *this;
    }
    HProdInt& den(long long arg, long long exp = 1) {
        BigInt h = hyperfactorial(arg);
        for (long long k = 0; k < exp; ++k) d *= h;
        return *this;
    }
    BigInt value() const {
        BigInt q = n / d;
        if (q * d != n) throw std::logic_error("hyperfactorial ratio is not an integer");
        return q;
    }
};

}  // namespace

QProduct f_macmahon_q(long long a, long long b, long long c) {
    HProd h;
    h.num(a).num(b).num(c).num(a + b + c).den(a + b).den(b + c).den(c + a);
    return h.p;
}

QProduct f_hex_wt1(long long a, long long b, long long c) {
    QProduct p = f_macmahon_q(a, b, c);
    p.mul_q_power(exp_hex_wt1(a, b, c));
    return p;
}

QProduct f_hex_wt2(long long a, long long b, long long c) {
    QProduct p = f_macmahon_q(a, b, c);
    p.mul_q_power(exp_hex_wt2(a, b, c));
    return p;
}

QProduct f_k_wt2(long long a, long long x, long long y, long long z, long long t) {
    HProd h;
    h.num(a).num(x).num(y).num(z).num(t)
        .den(a + x).den(a + y).den(y + z).den(t + x)
        .num(a + x + y).num(a + y + z).num(a + t + x).num(a + x + y + z + t)
        .den(a + x + y + z).den(a + x + y + t).den(a + z + t);
    h.p.mul_q_power(exp_k_wt2(a, x, y, z, t));
    return h.p;
}

QProduct f_q_wt2(long long a, long long b, long long x, long long y, long long z, long long t) {
    HProd h;
    h.num(x).num(y).num(z).num(t).num(a).num(b)
        .den(a + x).den(b + t).den(a + b + y)
        .num(a + b + x + 2 * y + z + t).num(a + b + x + y + t)
        .den(a + b + y + z + t).den(a + b + x + 2 * y + t).den(a + b + x + y + z)
        .num(a + x + y).num(b + y + t).num(a + b + y + z, 2)
        .den(x + y + t).den(a + y + z).den(b + y + z);
    h.p.mul_q_power(exp_E(a, b, x, y, z, t));
    return h.p;
}

QProduct f_q_wt3(long long a, long long b, long long x, long long y, long long z, long long t) {
    HProd h;
    h.num(x).num(y).num(z).num(t).num(a).num(b)
        .den(a + x).den(b + t).den(a + b + y)
        .num(a + b + x + 2 * y + z + t).num(a + b + x + y + t)
        .den(a + b + y + z + t).den(a + b + x + 2 * y + t).den(a + b + x + y + z)
        .num(a + x + y).num(b + y + t).num(a + b + y + z, 2)
        .den(x + y + t).den(a + y + z).den(b + y + z);
    h.p.mul_q_power(exp_q_wt3(a, b, x, y, z, t));
    return h.p;
}

QProduct f_b_wt2(long long x, long long y, long long z, long long t, long long a, long long b,
                 long long c, long long d) {
    HProd h;
    h.num(x).num(y).num(z).num(t).num(a, 2).num(b).num(c).num(d)
        .den(a + c).den(b + y).den(d + x)
        .num(a + b + c + d + x + z + 2 * t).num(a + b + c + d + y + 2 * z + t)
        .den(a + c + d + x + z + 2 * t).den(a + b + c + y + 2 * z + t)
        .num(a + b + c + d + x + y + 2 * z + 2 * t).num(a + b + c + d + x + y + z + t)
        .den(a + b + c + d + x + y + z + 2 * t).den(a + b + c + d + x + y + 2 * z + t)
        .num(a + b + c + y + z + t).num(a + c + d + x + z + t).num(b + c + d + z + t, 3)
        .den(b + c + d + y + z + t).den(b + c + d + x + z + t).den(a + b + c + d + z + t, 2)
        .num(d + x + t).num(b + y + z).num(a + c + z + t)
        .den(b + c + z + t).den(c + d + z + t).den(a + y + z).den(a + x + t).den(b + d + z + t);
    h.p.mul_q_power(exp_A(x, y, z, t, a, b, c, d));
    return h.p;
}

QProduct f_main_q(long long x, long long y, long long z, long long a, long long b, long long c,
                  long long d, long long e, long long f) {
    const long long A = a + b + c + d + e + f;
    HProd h;
    h.num(x).num(y).num(z).num(a, 2).num(b, 2).num(c, 2).num(d).num(e).num(f)
        .num(d + e + f + x + y + z, 4)
        .den(a + d).den(b + e).den(c + f)
        .den(d + e + x + y + z).den(e + f + x + y + z).den(f + d + x + y + z)
        .num(A + 2 * x + 2 * y + 2 * z).num(A + x + y + z, 2)
        .den(A + 2 * x + y + z).den(A + x + 2 * y + z).den(A + x + y + 2 * z)
        .num(a + b + d + e + x + y + z).num(a + c + d + f + x + y + z)
        .num(b + c + e + f + x + y + z)
        .den(a + d + e + f + x + y + z, 2).den(b + d + e + f + x + y + z, 2)
        .den(c + d + e + f + x + y + z, 2)
        .num(a + d + x + y).num(b + e + y + z).num(c + f + z + x)
        .den(a + b + y).den(b + c + z).den(c + a + x)
        .num(A - a + x + y + 2 * z).num(A - b + 2 * x + y + z).num(A - c + x + 2 * y + z)
        .den(b + c + e + f + x + y + 2 * z).den(c + a + d + f + 2 * x + y + z)
        .den(a + b + d + e + x + 2 * y + z);
    return h.p;
}

BigInt f_main_count(long long x, long long y, long long z, long long a, long long b, long long c,
                    long long d, long long e, long long f) {
    const long long A = a + b + c + d + e + f;
    HProdInt h;
    h.num(x).num(y).num(z).num(a, 2).num(b, 2).num(c, 2).num(d).num(e).num(f)
        .num(d + e + f + x + y + z, 4)
        .den(a + d).den(b + e).den(c + f)
        .den(d + e + x + y + z).den(e + f + x + y + z).den(f + d + x + y + z)
        .num(A + 2 * x + 2 * y + 2 * z).num(A + x + y + z, 2)
        .den(A + 2 * x + y + z).den(A + x + 2 * y + z).den(A + x + y + 2 * z)
        .num(a + b + d + e + x + y + z).num(a + c + d + f + x + y + z)
        .num(b + c + e + f + x + y + z)
        .den(a + d + e + f + x + y + z, 2).den(b + d + e + f + x + y + z, 2)
        .den(c + d + e + f + x + y + z, 2)
        .num(a + d + x + y).num(b + e + y + z).num(c + f + z + x)
        .den(a + b + y).den(b + c + z).den(c + a + x)
        .num(A - a + x + y + 2 * z).num(A - b + 2 * x + y + z).num(A - c + x + 2 * y + z)
        .den(b + c + e + f + x + y + 2 * z).den(c + a + d + f + 2 * x + y + z)
        .den(a + b + d + e + x + 2 * y + z);
    return h.value();
}

BigInt f_corollary_pp(long long a, long long b, long long c, long long x, long long y,
                      long long z) {
    HProdInt h;
    h.num(x).num(y).num(z).num(a).num(b).num(c).num(x + y + z)
        .num(a + b + c + 2 * x + 2 * y + 2 * z).num(a + b + c + x + y + z, 2)
        .den(a + b + c + 2 * x + y + z).den(a + b + c + x + 2 * y + z)
        .den(a + b + c + x + y + 2 * z)
        .num(a + b + x + y + z).num(a + c + x + y + z).num(b + c + x + y + z)
        .den(a + x + y + z, 2).den(b + x + y + z, 2).den(c + x + y + z, 2)
        .num(a + x + y).num(b + y + z).num(c + z + x)
        .den(a + b + y).den(b + c + z).den(c + a + x);
    return h.value();
}

std::optional<FormulaId> formula_id_from_string(const std::string& s) {
    if (s == "macmahon_q") return FormulaId::MacMahonQ;
    if (s == "main_count") return FormulaId::MainCount;
    if (s == "main_q") return FormulaId::MainQ;
    if (s == "hex_wt1") return FormulaId::HexWt1;
    if (s == "hex_wt2") return FormulaId::HexWt2;
    if (s == "k_wt2") return FormulaId::KWt2;
    if (s == "q_wt2") return FormulaId::QWt2;
    if (s == "q_wt3") return FormulaId::QWt3;
    if (s == "b_wt2") return FormulaId::BWt2;
    if (s == "exp_g") return FormulaId::ExpG;
    if (s == "exp_h") return FormulaId::ExpH;
    if (s == "exp_e") return FormulaId::ExpE;
    if (s == "exp_a") return FormulaId::ExpA;
    if (s == "corollary_pp") return FormulaId::CorollaryPP;
    return std::nullopt;
}

std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::MacMahonQ: return "macmahon_q";
        case FormulaId::MainCount: return "main_count";
        case FormulaId::MainQ: return "main_q";
        case FormulaId::HexWt1: return "hex_wt1";
        case FormulaId::HexWt2: return "hex_wt2";
        case FormulaId::KWt2: return "k_wt2";
        case FormulaId::QWt2: return "q_wt2";
        case FormulaId::QWt3: return "q_wt3";
        case FormulaId::BWt2: return "b_wt2";
        case FormulaId::ExpG: return "exp_g";
        case FormulaId::ExpH: return "exp_h";
        case FormulaId::ExpE: return "exp_e";
        case FormulaId::ExpA: return "exp_a";
        case FormulaId::CorollaryPP: return "corollary_pp";
    }
    return "?";
}

std::vector<std::string> formula_id_names() {
    return {"macmahon_q", "main_count", "main_q", "hex_wt1", "hex_wt2", "k_wt2", "q_wt2",
            "q_wt3", "b_wt2", "exp_g", "exp_h", "exp_e", "exp_a", "corollary_pp"};
}

}  // namespace qloz
