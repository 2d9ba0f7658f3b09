#ifndef CFSEQ_UNIPOLY_HPP
#define CFSEQ_UNIPOLY_HPP

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "cfseq/error.hpp"
#include "cfseq/rational.hpp"

namespace cfseq {

/// Contract for coefficient fields. Satisfied by Rational (exact rationals)
/// and MultiRat (multivariate rational functions over the rationals).
template <typename F>
concept CoefficientField = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<F>;
    requires std::constructible_from<F, int>;
};

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <CoefficientField F>
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(F v) { return UniPoly(std::vector<F>{std::move(v)}); }

    static UniPoly monomial(F v, int degree) {
        std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
        c.back() = std::move(v);
        return UniPoly(std::move(c));
    }

    bool is_zero_poly() const { return c_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<F>& coeffs() const { return c_; }

    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const F& leading() const { return c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == F(1); }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<int>(k)));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] = c[k] + a.c_[k];
            if (k < b.c_.size()) c[k] = c[k] + b.c_[k];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    UniPoly operator-() const {
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(-v);
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }

    UniPoly scaled(const F& s) const {
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v * s);
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!(a.c_[k] == b.c_[k])) return false;
        return true;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

template <CoefficientField F>
UniPoly<F> poly_mul(const UniPoly<F>& p, const UniPoly<F>& q) {
    return p * q;
}

/// Exact division with remainder: p = d*quotient + remainder,
/// deg remainder < deg d. Requires an invertible leading coefficient.
template <CoefficientField F>
std::pair<UniPoly<F>, UniPoly<F>> poly_divrem(const UniPoly<F>& p, const UniPoly<F>& d) {
    if (d.is_zero_poly()) throw InputError("polynomial division by zero");
    const F lead_inv = inverse(d.leading());
    std::vector<F> rem(p.coeffs());
    const int dd = d.degree();
    if (p.degree() < dd) return {UniPoly<F>(), p};
    std::vector<F> quot(static_cast<std::size_t>(p.degree() - dd) + 1, F(0));
    for (int k = p.degree(); k >= dd; --k) {
        F factor = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (is_zero(factor)) continue;
        quot[static_cast<std::size_t>(k - dd)] = factor;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] =
                rem[static_cast<std::size_t>(k - dd + j)] - factor * d.coeff(j);
    }
    return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm.
template <CoefficientField F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = poly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a.scaled(inverse(a.leading()));
}

using RatPoly = UniPoly<Rational>;

/// Deterministic human rendering, highest power first: "x^2 - 3*x + 1".
std::string to_string(const RatPoly& p, std::string_view var = "x");

} // namespace cfseq

#endif
