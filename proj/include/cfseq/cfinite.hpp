#ifndef CFSEQ_CFINITE_HPP
#define CFSEQ_CFINITE_HPP

#include <utility>
#include <vector>

#include "cfseq/matrix.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/unipoly.hpp"

namespace cfseq {

/// proved: the stored recurrence is a genuine annihilator (constructed, or
/// guessed under an a-priori order bound with enough terms).
/// conjectured: fits all data seen, but no bound certifies it.
enum class Certification { proved, conjectured };

const char* to_string(Certification c);

/// Sequence satisfying a(n) = sum_{k=1..d} rec[k-1] * a(n-k) for n >= d,
/// with exact rational terms. Order 0 is the identically-zero sequence.
/// Instances are immutable; every operation returns a fresh value.
class CFiniteSeq {
public:
    /// Zero sequence.
    CFiniteSeq() : cert_(Certification::proved) {}

    /// Validates: enough initial terms, and any terms beyond index order-1
    /// must satisfy the recurrence.
    CFiniteSeq(std::vector<Rational> rec_coeffs, std::vector<Rational> init_terms,
               Certification cert = Certification::proved);

    int order() const { return static_cast<int>(rec_.size()); }
    const std::vector<Rational>& rec_coeffs() const { return rec_; }
    const std::vector<Rational>& init_terms() const { return init_; }
    Certification certification() const { return cert_; }
    bool proved() const { return cert_ == Certification::proved; }
    bool is_zero_seq() const { return rec_.empty(); }

    /// First `count` terms a(0..count-1).
    std::vector<Rational> terms(int count) const;
    Rational term(long long n) const;

    /// Monic characteristic polynomial x^d - c1 x^{d-1} - ... - cd.
    RatPoly char_poly() const;

private:
    std::vector<Rational> rec_;
    std::vector<Rational> init_;
    Certification cert_;
};

/// Validated construction; certification is proved.
CFiniteSeq make(std::vector<Rational> rec_coeffs, std::vector<Rational> init_terms);

/// Recurrence coefficients read off a monic annihilator.
std::vector<Rational> rec_from_annihilator(const RatPoly& p);

/// d x d companion matrix of the characteristic polynomial. Rejects the
/// zero sequence (order 0).
RatMatrix companion(const CFiniteSeq& a);

/// The sequence n -> a(mn + r), 0 <= r < m. Returned at order exactly d
/// (coefficients read off charpoly(M^m)), deliberately unminimized.
CFiniteSeq msection(const CFiniteSeq& a, int m, int r);

CFiniteSeq add(const CFiniteSeq& a, const CFiniteSeq& b);
CFiniteSeq subtract(const CFiniteSeq& a, const CFiniteSeq& b);

/// Term-wise product; annihilator from the Kronecker product of the
/// companion matrices, then minimized.
CFiniteSeq hadamard(const CFiniteSeq& a, const CFiniteSeq& b);

/// Convolution sum_{k=0..n} a(k) b(n-k); annihilator is the product of the
/// characteristic polynomials, then minimized.
CFiniteSeq cauchy(const CFiniteSeq& a, const CFiniteSeq& b);

/// The shift-operator action: n -> sum_i p_i * a(n+i), minimized.
CFiniteSeq apply_operator(const RatPoly& p, const CFiniteSeq& a);

/// n -> c * a(n).
CFiniteSeq scale(const CFiniteSeq& a, const Rational& c);

/// Minimal-order recurrence generating the same terms, decided rigorously
/// from the first 2d terms. Requires a proved input.
CFiniteSeq minimize(const CFiniteSeq& a);

/// Rigorous equality: agreement on order(a) + order(b) terms decides
/// agreement everywhere. Requires proved inputs.
bool equals(const CFiniteSeq& a, const CFiniteSeq& b);

/// Rigorous zero test: p annihilates a iff the first order(a) terms of
/// p(N)a vanish.
bool annihilates(const RatPoly& p, const CFiniteSeq& a);

/// Closed form as a list of (root, highest power of n multiplying root^n).
struct ClosedFormSpec {
    std::vector<std::pair<Rational, int>> terms;
};

/// prod (x - r)^{max_power + 1}, expanded.
RatPoly annihilator_from_closed_form(const ClosedFormSpec& spec);

} // namespace cfseq

#endif
