#include "qloz/qpoly.hpp"

#include <sstream>

namespace qloz {

QPoly q_integer(long long n) {
    QPoly p;
    for (long long e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        BigInt a = abs(v);
        if (a != 1 || e == 0) os << a.str();
        if (e > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qloz
