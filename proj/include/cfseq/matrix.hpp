#ifndef CFSEQ_MATRIX_HPP
#define CFSEQ_MATRIX_HPP

#include <vector>

#include "cfseq/rational.hpp"
#include "cfseq/unipoly.hpp"

namespace cfseq {

/// Dense matrix over the rationals, row-major. Immutable in spirit: the
/// library never mutates a matrix after it is fully built.
class RatMatrix {
public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Rational trace() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

    RatMatrix scaled(const Rational& s) const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// M^e by binary exponentiation; M^0 is the identity.
RatMatrix mat_pow(const RatMatrix& m, unsigned long long e);

/// Kronecker product: block (p,q) of the result is A(p,q) * B. Eigenvalues
/// of the result are the pairwise products of the factors' eigenvalues.
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Monic characteristic polynomial, computed exactly (Faddeev-LeVerrier;
/// the only divisions are by the integers 1..n).
RatPoly charpoly(const RatMatrix& m);

Rational det(const RatMatrix& m);

} // namespace cfseq

#endif
