#include "cfseq/rational.hpp"

#include <cctype>

namespace cfseq {

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InputError("malformed rational: '" + std::string(whole) + "'");
    BigInt v{std::string(s)};
    if (neg) v = -v;
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, text));
    BigInt num = parse_int(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        throw InputError("malformed rational: '" + std::string(text) + "'");
    BigInt den{std::string(den_part)};
    if (den == 0)
        throw InputError("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

} // namespace cfseq
