#include "cfseq/unipoly.hpp"

namespace cfseq {

std::string to_string(const RatPoly& p, std::string_view var) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (is_zero(c)) continue;
        bool first = out.empty();
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Rational a = abs(c);
        bool unit = a == 1 && k > 0;
        if (!unit) out += to_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace cfseq
