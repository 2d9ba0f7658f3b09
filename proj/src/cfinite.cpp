#include "cfseq/cfinite.hpp"

#include <algorithm>

#include "cfseq/error.hpp"
#include "cfseq/guess.hpp"

namespace cfseq {

const char* to_string(Certification c) {
    return c == Certification::proved ? "proved" : "conjectured";
}

namespace {

Certification combine(Certification a, Certification b) {
    return (a == Certification::proved && b == Certification::proved)
               ? Certification::proved
               : Certification::conjectured;
}

// Minimization that preserves the caller's certification; the public
// minimize() enforces the proved precondition.
CFiniteSeq minimized(const CFiniteSeq& a) {
    const int d = a.order();
    if (d == 0) return a;
    auto fit = guess_min_rec(a.terms(2 * d), d, true);
    if (!fit)
        throw Error("minimization failed below a valid order bound");
    CFiniteSeq s = fit->seq;
    if (a.certification() == Certification::conjectured)
        s = CFiniteSeq(s.rec_coeffs(), s.init_terms(), Certification::conjectured);
    return s;
}

CFiniteSeq from_annihilator(const RatPoly& p, std::vector<Rational> init, Certification cert) {
    return CFiniteSeq(rec_from_annihilator(p), std::move(init), cert);
}

} // namespace

CFiniteSeq::CFiniteSeq(std::vector<Rational> rec_coeffs, std::vector<Rational> init_terms,
                       Certification cert)
    : rec_(std::move(rec_coeffs)), init_(std::move(init_terms)), cert_(cert) {
    const std::size_t d = rec_.size();
    if (init_.size() < d)
        throw InputError("too few initial terms: order " + std::to_string(d) + " needs at least " +
                         std::to_string(d) + ", got " + std::to_string(init_.size()));
    for (std::size_t n = d; n < init_.size(); ++n) {
        Rational expect(0);
        for (std::size_t k = 0; k < d; ++k) expect += rec_[k] * init_[n - 1 - k];
        if (expect != init_[n])
            throw InputError("initial terms violate the recurrence at index " + std::to_string(n) +
                             ": expected " + to_string(expect) + ", got " + to_string(init_[n]));
    }
    if (d == 0) init_.clear();
}

std::vector<Rational> CFiniteSeq::terms(int count) const {
    if (count < 0) throw InputError("negative term count");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    const std::size_t d = rec_.size();
    for (int n = 0; n < count; ++n) {
        std::size_t un = static_cast<std::size_t>(n);
        if (un < init_.size()) {
            out.push_back(init_[un]);
            continue;
        }
        Rational v(0);
        for (std::size_t k = 0; k < d; ++k) v += rec_[k] * out[un - 1 - k];
        out.push_back(std::move(v));
    }
    return out;
}

Rational CFiniteSeq::term(long long n) const {
    if (n < 0) throw InputError("negative index");
    return terms(static_cast<int>(n) + 1).back();
}

RatPoly CFiniteSeq::char_poly() const {
    const int d = order();
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    c[static_cast<std::size_t>(d)] = 1;
    for (int k = 1; k <= d; ++k) c[static_cast<std::size_t>(d - k)] = -rec_[static_cast<std::size_t>(k - 1)];
    return RatPoly(std::move(c));
}

CFiniteSeq make(std::vector<Rational> rec_coeffs, std::vector<Rational> init_terms) {
    return CFiniteSeq(std::move(rec_coeffs), std::move(init_terms));
}

std::vector<Rational> rec_from_annihilator(const RatPoly& p) {
    if (p.is_zero_poly() || !p.is_monic())
        throw InputError("annihilator must be monic");
    const int d = p.degree();
    std::vector<Rational> rec(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) rec[static_cast<std::size_t>(k - 1)] = -p.coeff(d - k);
    return rec;
}

RatMatrix companion(const CFiniteSeq& a) {
    const int d = a.order();
    if (d == 0) throw InputError("zero sequence has no companion matrix");
    RatMatrix m(d, d);
    for (int i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
    const auto& rec = a.rec_coeffs();
    for (int j = 0; j < d; ++j) m.at(d - 1, j) = rec[static_cast<std::size_t>(d - 1 - j)];
    return m;
}

CFiniteSeq msection(const CFiniteSeq& a, int m, int r) {
    if (m < 1) throw InputError("m-section requires m >= 1");
    if (r < 0 || r >= m) throw InputError("m-section offset must satisfy 0 <= r < m");
    const int d = a.order();
    if (d == 0) return CFiniteSeq();
    RatPoly p = charpoly(mat_pow(companion(a), static_cast<unsigned long long>(m)));
    std::vector<Rational> all = a.terms((d - 1) * m + r + 1);
    std::vector<Rational> init;
    init.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) init.push_back(all[static_cast<std::size_t>(k * m + r)]);
    return from_annihilator(p, std::move(init), a.certification());
}

namespace {

CFiniteSeq combine_termwise(const CFiniteSeq& a, const CFiniteSeq& b, const RatPoly& annihilator,
                            const std::vector<Rational>& values) {
    CFiniteSeq raw = from_annihilator(annihilator, values, combine(a.certification(), b.certification()));
    return minimized(raw);
}

} // namespace

CFiniteSeq add(const CFiniteSeq& a, const CFiniteSeq& b) {
    const int d = a.order() + b.order();
    if (d == 0) return CFiniteSeq();
    RatPoly p = a.char_poly() * b.char_poly();
    std::vector<Rational> ta = a.terms(d), tb = b.terms(d), sum(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n)
        sum[static_cast<std::size_t>(n)] = ta[static_cast<std::size_t>(n)] + tb[static_cast<std::size_t>(n)];
    return combine_termwise(a, b, p, sum);
}

CFiniteSeq subtract(const CFiniteSeq& a, const CFiniteSeq& b) {
    return add(a, scale(b, Rational(-1)));
}

CFiniteSeq hadamard(const CFiniteSeq& a, const CFiniteSeq& b) {
    if (a.order() == 0 || b.order() == 0) return CFiniteSeq();
    const int d = a.order() * b.order();
    RatPoly p = charpoly(kronecker(companion(a), companion(b)));
    std::vector<Rational> ta = a.terms(d), tb = b.terms(d), prod(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n)
        prod[static_cast<std::size_t>(n)] = ta[static_cast<std::size_t>(n)] * tb[static_cast<std::size_t>(n)];
    return combine_termwise(a, b, p, prod);
}

CFiniteSeq cauchy(const CFiniteSeq& a, const CFiniteSeq& b) {
    if (a.order() == 0 || b.order() == 0) return CFiniteSeq();
    const int d = a.order() + b.order();
    // The generating function's denominator is the product of the reversed
    // characteristic polynomials, so the annihilator is their plain product.
    RatPoly p = a.char_poly() * b.char_poly();
    std::vector<Rational> ta = a.terms(d), tb = b.terms(d), conv(static_cast<std::size_t>(d), Rational(0));
    for (int n = 0; n < d; ++n)
        for (int k = 0; k <= n; ++k)
            conv[static_cast<std::size_t>(n)] +=
                ta[static_cast<std::size_t>(k)] * tb[static_cast<std::size_t>(n - k)];
    return combine_termwise(a, b, p, conv);
}

CFiniteSeq apply_operator(const RatPoly& p, const CFiniteSeq& a) {
    const int d = a.order();
    if (d == 0 || p.is_zero_poly()) return CFiniteSeq();
    const int g = p.degree();
    std::vector<Rational> ta = a.terms(d + g);
    std::vector<Rational> vals(static_cast<std::size_t>(d), Rational(0));
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= g; ++i)
            vals[static_cast<std::size_t>(n)] += p.coeff(i) * ta[static_cast<std::size_t>(n + i)];
    CFiniteSeq raw(a.rec_coeffs(), std::move(vals), a.certification());
    return minimized(raw);
}

CFiniteSeq scale(const CFiniteSeq& a, const Rational& c) {
    if (is_zero(c) || a.order() == 0) return CFiniteSeq();
    std::vector<Rational> init = a.init_terms();
    for (auto& v : init) v *= c;
    return CFiniteSeq(a.rec_coeffs(), std::move(init), a.certification());
}

CFiniteSeq minimize(const CFiniteSeq& a) {
    if (!a.proved()) throw InputError("minimize requires a proved sequence");
    return minimized(a);
}

bool equals(const CFiniteSeq& a, const CFiniteSeq& b) {
    if (!a.proved() || !b.proved()) throw InputError("equality test requires proved sequences");
    const int n = a.order() + b.order();
    return a.terms(n) == b.terms(n);
}

bool annihilates(const RatPoly& p, const CFiniteSeq& a) {
    const int d = a.order();
    if (d == 0 || p.is_zero_poly()) return true;
    const int g = p.degree();
    std::vector<Rational> ta = a.terms(d + g);
    for (int n = 0; n < d; ++n) {
        Rational v(0);
        for (int i = 0; i <= g; ++i) v += p.coeff(i) * ta[static_cast<std::size_t>(n + i)];
        if (!is_zero(v)) return false;
    }
    return true;
}

RatPoly annihilator_from_closed_form(const ClosedFormSpec& spec) {
    for (std::size_t i = 0; i < spec.terms.size(); ++i)
        for (std::size_t j = i + 1; j < spec.terms.size(); ++j)
            if (spec.terms[i].first == spec.terms[j].first)
                throw InputError("duplicate root in closed form: " + to_string(spec.terms[i].first));
    RatPoly p = RatPoly::constant(Rational(1));
    for (const auto& [root, power] : spec.terms) {
        if (power < 0) throw InputError("negative power in closed form");
        RatPoly factor(std::vector<Rational>{-root, Rational(1)});
        for (int k = 0; k <= power; ++k) p = p * factor;
    }
    return p;
}

} // namespace cfseq
