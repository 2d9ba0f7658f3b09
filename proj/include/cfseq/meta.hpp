#ifndef CFSEQ_META_HPP
#define CFSEQ_META_HPP

#include <utility>
#include <vector>

#include "cfseq/cfinite.hpp"
#include "cfseq/guess.hpp"

namespace cfseq {

/// Certified family {c_k(m)}: for every m >= 1,
/// a(mn) = sum_{k=1..d} c_k(m) * a((n-k)m), and each c_k is itself
/// C-finite in m with order at most C(d,k).
struct MetaRecurrence {
    CFiniteSeq base;
    /// coeff_seqs[k-1] holds c_k(1), c_k(2), ... as a sequence in m.
    std::vector<CFiniteSeq> coeff_seqs;
    std::vector<int> order_bounds;
    Certification certification = Certification::conjectured;
    int samples_checked = 0;
};

/// Annihilators of n -> a(ni) a(nj). `poly` is the uniform degree-d^2
/// polynomial charpoly(M^i (x) M^j); `minimal_poly` is the minimal
/// annihilator certified by bounded guessing against actual product terms.
struct ProductAnnihilator {
    int i = 0, j = 0;
    RatPoly poly;
    RatPoly minimal_poly;
};

long long binomial(int n, int k);

/// Exact table of m-section recurrence coefficients: entry [k-1][m-1] is
/// c_k(m), read off charpoly(M^m). Column k=1 is the trace (power-sum)
/// sequence; column k=d has constant absolute value.
std::vector<std::vector<Rational>> msection_coeff_table(const CFiniteSeq& a, int m_max);

/// Mine and certify the full meta-recurrence. Samples m = 1..2*max C(d,k)+d,
/// guesses each column under its order bound (a proof, by the bound
/// argument), then re-validates on two fresh samples. A guessing failure at
/// the bound is impossible for honest inputs and raises GuessFailure.
MetaRecurrence meta_msection(const CFiniteSeq& a);

ProductAnnihilator product_annihilator(const CFiniteSeq& a, int i, int j);

/// The sequence i -> c_k(i,j) of coefficients of the uniform product
/// annihilator at fixed j, guessed under the bound C(d,k). The bound holds
/// for k = 1; for k >= 2 the true order can exceed it, in which case this
/// raises GuessFailure rather than emitting an uncertified fit.
GuessResult meta_product_coeffs(const CFiniteSeq& a, int k, int j, int i_max);

/// Degree-4 factor pair for order-2 sequences with distinct roots:
/// (x^2 - t(i+j) x + s^{i+j}) (x^2 - s^j t(i-j) x + s^{i+j}) with
/// t(n) = trace(M^n), s = det(M). Their product annihilates
/// n -> a(ni) a(nj); verified by the rigorous zero test before returning.
std::pair<RatPoly, RatPoly> second_order_product_factors(const CFiniteSeq& a, int i, int j);

/// Which power law the trailing coefficient c_d(m) follows, decided from
/// exact data: c_d(m) = omega^m, or c_d(m) = (-1)^{d+1} omega^m, with
/// omega = (-1)^d * p(0). The two coincide for odd d.
struct TrailingCoeffLaw {
    Rational omega;
    bool matches_omega_pow = false;
    bool matches_signed_omega_pow = false;
};

TrailingCoeffLaw trailing_coeff_law(const CFiniteSeq& a, int m_max);

/// True iff c_1(m) equals the base sequence's own terms a(m) on the sampled
/// range; c_1 always satisfies the base recurrence, but starts from the
/// trace values, so this only holds for trace-convention initial terms.
bool coeff1_matches_base_terms(const MetaRecurrence& mr, int samples);

} // namespace cfseq

#endif
