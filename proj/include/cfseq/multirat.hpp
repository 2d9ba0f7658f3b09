#ifndef CFSEQ_MULTIRAT_HPP
#define CFSEQ_MULTIRAT_HPP

#include <map>
#include <string>
#include <vector>

#include "cfseq/rational.hpp"

namespace cfseq {

/// Exponent map of a monomial; only positive exponents are stored.
using Monomial = std::map<std::string, int>;

/// Sparse multivariate polynomial over the rationals.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    static MultiPoly variable(const std::string& name);

    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    MultiPoly scaled(const Rational& s) const;

    /// Positive scalar c such that p/c has coprime integer coefficients.
    Rational content() const;
    /// Componentwise-minimal exponent vector over all terms.
    Monomial monomial_content() const;
    MultiPoly divided_by_monomial(const Monomial& m) const;

    /// Exact evaluation; every variable of the polynomial must be bound.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Leading coefficient in the term order (deterministic).
    const Rational& leading_coeff() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

/// Multivariate rational function over the rationals. The fraction is kept
/// with common monomial and scalar content cancelled and the denominator's
/// leading coefficient positive; full multivariate gcd reduction is not
/// attempted, and equality is decided by cross-multiplication.
class MultiRat {
public:
    MultiRat() : num_(), den_(Rational(1)) {}
    MultiRat(int v) : MultiRat(Rational(v)) {}
    explicit MultiRat(const Rational& v) : num_(v), den_(Rational(1)) {}
    explicit MultiRat(MultiPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    MultiRat(MultiPoly num, MultiPoly den);

    static MultiRat variable(const std::string& name) {
        return MultiRat(MultiPoly::variable(name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero_value() const { return num_.is_zero_poly(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    friend MultiRat operator+(const MultiRat& a, const MultiRat& b);
    friend MultiRat operator-(const MultiRat& a, const MultiRat& b);
    friend MultiRat operator*(const MultiRat& a, const MultiRat& b);
    MultiRat operator-() const;

    /// Mathematical equality (cross-multiplication), not representation
    /// equality.
    friend bool operator==(const MultiRat& a, const MultiRat& b);

    MultiRat reciprocal() const;

    /// Exact evaluation; refuses when the denominator vanishes at the point.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    std::string str() const;

private:
    void normalize();

    MultiPoly num_, den_;
};

inline bool is_zero(const MultiRat& f) { return f.is_zero_value(); }
inline MultiRat inverse(const MultiRat& f) { return f.reciprocal(); }

/// True iff f and g agree as rational functions.
bool multirat_eq(const MultiRat& f, const MultiRat& g);

} // namespace cfseq

#endif
