#ifndef CFSEQ_RATIONAL_HPP
#define CFSEQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cfseq/error.hpp"

namespace cfseq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Kept canonical by the backend: denominator > 0,
/// gcd(|num|, den) = 1, no rounding anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inverse(const Rational& r) {
    if (r.is_zero()) throw InputError("inverse of zero");
    return 1 / r;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw InputError("not an integer: " + r.str());
    return numerator(r);
}

/// "p/q" with "/1" suppressed.
std::string to_string(const Rational& r);

/// Accepts "p" or "p/q" with optional leading '-'. Exact, no rounding.
Rational parse_rational(std::string_view text);

} // namespace cfseq

#endif
