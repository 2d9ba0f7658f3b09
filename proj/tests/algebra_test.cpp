#include "doctest.h"

#include <random>

#include "cfseq/error.hpp"
#include "cfseq/matrix.hpp"
#include "cfseq/multirat.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/unipoly.hpp"

using namespace cfseq;

namespace {

Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return Rational(num(rng), den(rng));
}

RatPoly rnd_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = rnd_rational(rng);
    return RatPoly(std::move(c));
}

RatMatrix rnd_matrix(std::mt19937& rng, int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rnd_rational(rng);
    return m;
}

RatPoly poly_from_ints(std::vector<int> lowest_first) {
    std::vector<Rational> c;
    for (int v : lowest_first) c.emplace_back(v);
    return RatPoly(std::move(c));
}

// Oracle: naive term-wise annihilation check, no library machinery.
bool kills_terms(const RatPoly& p, const std::vector<Rational>& t, int count) {
    for (int n = 0; n < count; ++n) {
        Rational v(0);
        for (int k = 0; k <= p.degree(); ++k) v += p.coeff(k) * t[static_cast<std::size_t>(n + k)];
        if (!is_zero(v)) return false;
    }
    return true;
}

std::vector<Rational> fib_terms(int count) {
    std::vector<Rational> f{Rational(0), Rational(1)};
    while (static_cast<int>(f.size()) < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    f.resize(static_cast<std::size_t>(count));
    return f;
}

} // namespace

TEST_CASE("rational formatting and parsing") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-10/15") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("rational arithmetic stays canonical") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = rnd_rational(rng), b = rnd_rational(rng);
        for (const Rational& v : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(BigInt(abs(numerator(v))), denominator(v)) == 1);
        }
        if (!is_zero(b)) {
            Rational q = a / b;
            CHECK(denominator(q) > 0);
            CHECK(gcd(BigInt(abs(numerator(q))), denominator(q)) == 1);
        }
    }
}

TEST_CASE("poly_mul basics") {
    RatPoly a = poly_from_ints({-1, 1}); // x - 1
    RatPoly b = poly_from_ints({1, 1});  // x + 1
    CHECK(poly_mul(a, b) == poly_from_ints({-1, 0, 1}));
    RatPoly fib_cp = poly_from_ints({-1, -1, 1});
    CHECK(poly_mul(fib_cp, RatPoly::constant(Rational(1))) == fib_cp);
}

TEST_CASE("product of quadratics annihilates squared Fibonacci terms") {
    RatPoly p = poly_mul(poly_from_ints({1, -3, 1}), poly_from_ints({1, 2, 1}));
    CHECK(p.degree() == 4);
    std::vector<Rational> sq;
    for (const Rational& f : fib_terms(30)) sq.push_back(f * f);
    CHECK(kills_terms(p, sq, 20));
    // Dropping a factor must break annihilation.
    CHECK(!kills_terms(poly_from_ints({1, -3, 1}), sq, 20));
}

TEST_CASE("poly_divrem examples") {
    auto [q1, r1] = poly_divrem(poly_from_ints({-1, -1, 1}), poly_from_ints({-1, 1}));
    CHECK(q1 == poly_from_ints({0, 1}));
    CHECK(r1 == poly_from_ints({-1})); // remainder equals p(1)

    auto [q2, r2] = poly_divrem(poly_from_ints({-2, 1}), poly_from_ints({-1, 1}));
    CHECK(q2 == poly_from_ints({1}));
    CHECK(r2 == poly_from_ints({-1}));

    CHECK_THROWS_AS(poly_divrem(poly_from_ints({1, 1}), RatPoly()), InputError);
}

TEST_CASE("poly_divrem over symbolic coefficients") {
    using SymPoly = UniPoly<MultiRat>;
    MultiRat L = MultiRat::variable("L"), s = MultiRat::variable("s");
    SymPoly p(std::vector<MultiRat>{s, -L, MultiRat(1)});
    SymPoly d(std::vector<MultiRat>{MultiRat(-1), MultiRat(1)});
    auto [q, r] = poly_divrem(p, d);
    CHECK(q.degree() == 1);
    CHECK(multirat_eq(q.coeff(1), MultiRat(1)));
    CHECK(multirat_eq(q.coeff(0), MultiRat(1) - L));
    CHECK(multirat_eq(r.coeff(0), MultiRat(1) - L + s));
    // Oracle: expand d*q + r and compare with p.
    SymPoly rebuilt = d * q + r;
    CHECK(rebuilt == p);
}

TEST_CASE("poly_divrem reconstruction on random inputs") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly p = rnd_poly(rng, 6);
        RatPoly d = rnd_poly(rng, 3);
        if (d.is_zero_poly()) continue;
        auto [q, r] = poly_divrem(p, d);
        CHECK(d * q + r == p);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("charpoly examples") {
    RatMatrix fib(2, 2);
    fib.at(0, 1) = 1;
    fib.at(1, 0) = 1;
    fib.at(1, 1) = 1;
    CHECK(charpoly(fib) == poly_from_ints({-1, -1, 1}));

    CHECK(charpoly(RatMatrix::identity(3)) == poly_from_ints({-1, 3, -3, 1}));

    RatMatrix sq(2, 2);
    sq.at(0, 0) = 1;
    sq.at(0, 1) = 1;
    sq.at(1, 0) = 1;
    sq.at(1, 1) = 2;
    // trace 3, determinant 1
    CHECK(charpoly(sq) == poly_from_ints({1, -3, 1}));

    CHECK_THROWS_AS(charpoly(RatMatrix(2, 3)), InputError);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = size(rng);
        RatMatrix m = rnd_matrix(rng, n);
        RatPoly p = charpoly(m);
        // Substitute the matrix into its own characteristic polynomial.
        RatMatrix acc(n, n);
        RatMatrix power = RatMatrix::identity(n);
        for (int k = 0; k <= p.degree(); ++k) {
            acc = acc + power.scaled(p.coeff(k));
            if (k < p.degree()) power = power * m;
        }
        CHECK(acc == RatMatrix(n, n));
    }
}

TEST_CASE("mat_pow") {
    RatMatrix fib(2, 2);
    fib.at(0, 1) = 1;
    fib.at(1, 0) = 1;
    fib.at(1, 1) = 1;
    CHECK(mat_pow(fib, 0) == RatMatrix::identity(2));

    RatMatrix direct = fib * fib;
    CHECK(mat_pow(fib, 2) == direct);
    CHECK(direct.at(0, 0) == 1);
    CHECK(direct.at(1, 1) == 2);

    // Oracle: repeated multiplication.
    RatMatrix fifth = RatMatrix::identity(2);
    for (int k = 0; k < 5; ++k) fifth = fifth * fib;
    CHECK(mat_pow(fib, 5) == fifth);
    CHECK(fifth.at(0, 0) == 3);
    CHECK(fifth.at(0, 1) == 5);
    CHECK(fifth.at(1, 0) == 5);
    CHECK(fifth.at(1, 1) == 8);
}

TEST_CASE("kronecker product") {
    RatMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = 2;
    b.at(0, 0) = 3;
    CHECK(kronecker(a, b).at(0, 0) == 6);

    CHECK(kronecker(RatMatrix::identity(2), RatMatrix::identity(2)) == RatMatrix::identity(4));

    RatMatrix fib(2, 2);
    fib.at(0, 1) = 1;
    fib.at(1, 0) = 1;
    fib.at(1, 1) = 1;
    // Oracle: the explicit 4x4 block matrix, written out by hand.
    RatMatrix explicit4(4, 4);
    int rows[4][4] = {
        {0, 0, 0, 1},
        {0, 0, 1, 1},
        {0, 1, 0, 1},
        {1, 1, 1, 1},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) explicit4.at(i, j) = rows[i][j];
    CHECK(kronecker(fib, fib) == explicit4);
    RatPoly expected = poly_mul(poly_from_ints({1, -3, 1}), poly_from_ints({1, 2, 1}));
    CHECK(charpoly(explicit4) == expected);
    CHECK(charpoly(kronecker(fib, fib)) == expected);
}

TEST_CASE("kronecker eigenvalues are pairwise products (power-sum route)") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size(1, 3);
    for (int trial = 0; trial < 12; ++trial) {
        int na = size(rng), nb = size(rng);
        RatMatrix a = rnd_matrix(rng, na), b = rnd_matrix(rng, nb);
        const int n = na * nb;
        // Independent route: power sums p_k = tr(A^k) tr(B^k), then Newton's
        // identities give the elementary symmetric functions of the pairwise
        // eigenvalue products.
        std::vector<Rational> psums(static_cast<std::size_t>(n) + 1, Rational(0));
        RatMatrix pa = RatMatrix::identity(na), pb = RatMatrix::identity(nb);
        for (int k = 1; k <= n; ++k) {
            pa = pa * a;
            pb = pb * b;
            psums[static_cast<std::size_t>(k)] = pa.trace() * pb.trace();
        }
        std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
        e[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Rational acc(0);
            for (int i = 1; i <= k; ++i) {
                Rational term = e[static_cast<std::size_t>(k - i)] * psums[static_cast<std::size_t>(i)];
                acc += (i % 2 == 1) ? term : -term;
            }
            e[static_cast<std::size_t>(k)] = acc / k;
        }
        RatPoly kp = charpoly(kronecker(a, b));
        for (int k = 0; k <= n; ++k) {
            Rational coeff = kp.coeff(n - k);
            Rational expected = (k % 2 == 0) ? e[static_cast<std::size_t>(k)] : -e[static_cast<std::size_t>(k)];
            CHECK(coeff == expected);
        }
    }
}

TEST_CASE("multirat equality examples") {
    MultiRat L = MultiRat::variable("L"), s = MultiRat::variable("s");
    MultiRat one(1);
    CHECK(multirat_eq(L - one, (L * L - one) * inverse(L + one)));
    MultiRat lhs(MultiPoly::variable("s"), MultiPoly(Rational(1)));
    MultiRat rhs(-MultiPoly::variable("s"), MultiPoly(Rational(-1)));
    CHECK(multirat_eq(lhs, rhs));
    CHECK(!multirat_eq(one - L + s, MultiRat(0)));
}

TEST_CASE("multirat equality is an equivalence relation") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto rnd_mp = [&](bool nonzero) {
        MultiPoly p(Rational(coeff(rng)));
        p = p + MultiPoly::variable("u").scaled(Rational(coeff(rng)));
        p = p + MultiPoly::variable("v").scaled(Rational(coeff(rng)));
        if (nonzero && p.is_zero_poly()) p = MultiPoly(Rational(1));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        MultiRat f(rnd_mp(false), rnd_mp(true));
        MultiPoly junk = rnd_mp(true);
        MultiRat g(f.num() * junk, f.den() * junk);
        MultiRat h(g.num() * junk, g.den() * junk);
        CHECK(multirat_eq(f, f));
        CHECK(multirat_eq(f, g));
        CHECK(multirat_eq(g, f));
        CHECK((multirat_eq(f, g) && multirat_eq(g, h) ? multirat_eq(f, h) : true));
    }
}

TEST_CASE("multirat evaluation") {
    MultiRat L = MultiRat::variable("L");
    MultiRat f = (L - MultiRat(1)) * inverse(L + MultiRat(1));
    CHECK(f.evaluate({{"L", Rational(3)}}) == Rational(1, 2));
    MultiRat g = inverse(L - MultiRat(2));
    CHECK_THROWS_AS(g.evaluate({{"L", Rational(2)}}), Refusal);
}

TEST_CASE("multirat keeps the fraction content-stripped") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiRat f(x.scaled(Rational(2)) * y, (x * x).scaled(Rational(4)));
    // common monomial x and common scalar 2 are cancelled
    CHECK(multirat_eq(f, MultiRat(y, (x).scaled(Rational(2)))));
    Rational cn = f.num().content(), cd = f.den().content();
    CHECK(gcd(numerator(cn), numerator(cd)) == 1);
    // no shared monomial factor remains
    Monomial mn = f.num().monomial_content(), md = f.den().monomial_content();
    for (const auto& [var, e] : mn) CHECK(md.find(var) == md.end());
}
