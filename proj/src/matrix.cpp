#include "cfseq/matrix.hpp"

#include "cfseq/error.hpp"

namespace cfseq {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational RatMatrix::trace() const {
    if (!square()) throw InputError("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    return a + b.scaled(Rational(-1));
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix c(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k] * s;
    return c;
}

RatMatrix mat_pow(const RatMatrix& m, unsigned long long e) {
    if (!m.square()) throw InputError("power of non-square matrix");
    RatMatrix acc = RatMatrix::identity(m.rows());
    RatMatrix base = m;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    if (!a.square() || !b.square()) throw InputError("kronecker of non-square matrix");
    const int na = a.rows(), nb = b.rows();
    RatMatrix c(na * nb, na * nb);
    for (int p = 0; p < na; ++p)
        for (int q = 0; q < na; ++q) {
            const Rational& apq = a.at(p, q);
            if (is_zero(apq)) continue;
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j)
                    c.at(p * nb + i, q * nb + j) = apq * b.at(i, j);
        }
    return c;
}

RatPoly charpoly(const RatMatrix& m) {
    if (!m.square()) throw InputError("charpoly of non-square matrix");
    const int n = m.rows();
    // Faddeev-LeVerrier. c[n] = 1 down to c[0]; every division is by an
    // integer 1..n, so the arithmetic stays exact over the rationals.
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = 1;
    RatMatrix work = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        work = m * work;
        Rational ck = -work.trace() / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k < n)
            for (int i = 0; i < n; ++i) work.at(i, i) += ck;
    }
    return RatPoly(std::move(c));
}

Rational det(const RatMatrix& m) {
    const int n = m.rows();
    Rational c0 = charpoly(m).coeff(0);
    return n % 2 == 0 ? c0 : -c0;
}

} // namespace cfseq
