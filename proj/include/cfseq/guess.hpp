#ifndef CFSEQ_GUESS_HPP
#define CFSEQ_GUESS_HPP

#include <optional>
#include <vector>

#include "cfseq/cfinite.hpp"
#include "cfseq/rational.hpp"

namespace cfseq {

struct GuessResult {
    CFiniteSeq seq;
    /// Terms consumed to pin the recurrence down (2 * fitted order).
    int fitted_terms = 0;
    /// Extra supplied terms that confirmed the fit.
    int slack_terms = 0;
    Certification certification = Certification::conjectured;
};

/// Minimal-order recurrence consistent with every supplied term, searched
/// bottom-up over orders 0..max_order by exact elimination on the
/// sliding-window system. Requires at least 2*max_order terms; with
/// known_bound set, a successful fit is a proof (two sequences of order
/// <= B agreeing on 2B terms are identical) and the result is proved.
/// Returns nullopt when no order <= max_order fits.
std::optional<GuessResult> guess_min_rec(const std::vector<Rational>& terms, int max_order,
                                         bool known_bound = false);

} // namespace cfseq

#endif
