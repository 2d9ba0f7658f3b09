#ifndef CFSEQ_SUMS_HPP
#define CFSEQ_SUMS_HPP

#include <vector>

#include "cfseq/cfinite.hpp"
#include "cfseq/multirat.hpp"
#include "cfseq/unipoly.hpp"

namespace cfseq {

/// The telescoped identity sum_{0 <= k < n} a(k) = b(n) - b(0), where
/// b(n) = sum_i b_coeffs[i] * a(n+i), valid for every sequence annihilated
/// by source_poly. scale = p(1), nonzero by construction.
template <CoefficientField F>
struct SumIdentity {
    std::vector<F> b_coeffs;
    F scale;
    UniPoly<F> source_poly;
};

/// Write p(x) = (x - 1) q(x) + p(1) and set b = -q(N)a / p(1). Refuses
/// when p(1) = 0 (the partial sums of such a sequence are not reachable by
/// this telescoping).
template <CoefficientField F>
SumIdentity<F> polysum(const UniPoly<F>& p) {
    if (p.is_zero_poly()) throw InputError("polysum of the zero polynomial");
    const UniPoly<F> x_minus_1(std::vector<F>{F(-1), F(1)});
    auto [q, rem] = poly_divrem(p, x_minus_1);
    F p1 = rem.coeff(0);
    if (is_zero(p1)) throw Refusal("p(1) = 0: partial sums are not expressible by telescoping");
    const F neg_inv = -inverse(p1);
    std::vector<F> b;
    b.reserve(static_cast<std::size_t>(q.degree() + 1));
    for (int k = 0; k <= q.degree(); ++k) b.push_back(q.coeff(k) * neg_inv);
    return SumIdentity<F>{std::move(b), std::move(p1), p};
}

/// Telescoping identity for the section n -> a(mn), from the charpoly of
/// msection(a, m, 0). Reports m when that polynomial vanishes at 1.
SumIdentity<Rational> uniform_msection_sum(const CFiniteSeq& a, int m);

/// Exact validation of the identity on 0 <= n <= n_max. The precondition
/// (source_poly annihilates a) is checked rigorously first and reported as
/// a distinct error from a value mismatch.
bool sum_identity_check(const CFiniteSeq& a, const SumIdentity<Rational>& id, int n_max);

/// Specialize a symbolic identity by evaluating every coefficient at the
/// given point. Refuses when the denominator p(1) vanishes there.
SumIdentity<Rational> specialize(const SumIdentity<MultiRat>& id,
                                 const std::map<std::string, Rational>& point);

/// L_m * sum_{0 <= k < n} F(mk)^2 = F(mn) F(m(n-1)) for odd m, checked
/// exactly for 1 <= n <= n_max. Even m is rejected.
bool fib_square_sum_check(int m, int n_max);

/// (5 F_m^2 - 4) F_m^2 - F_{2m}^2 = -8 F_m^2 ((-1)^m + 1)/2, checked
/// exactly for 1 <= m <= m_max and additionally certified for all m by
/// building both sides with closure operations and testing equality.
bool vanish_identity_check(int m_max);

} // namespace cfseq

#endif
