#ifndef CFSEQ_EXPRPARSE_HPP
#define CFSEQ_EXPRPARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cfseq/multirat.hpp"
#include "cfseq/unipoly.hpp"

namespace cfseq {

/// Parse a characteristic-polynomial expression in the variable "x" with
/// symbolic coefficients drawn from `symbols`. Grammar: integers, symbols,
/// +, -, *, ^ (nonnegative integer exponents), parentheses.
UniPoly<MultiRat> parse_charpoly(std::string_view text, const std::vector<std::string>& symbols);

/// True iff no coefficient mentions a symbol.
bool is_constant_poly(const UniPoly<MultiRat>& p);

/// Downcast a symbol-free polynomial to rational coefficients.
RatPoly to_rational_poly(const UniPoly<MultiRat>& p);

} // namespace cfseq

#endif
