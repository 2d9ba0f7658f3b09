#include "cfseq/sums.hpp"

#include "cfseq/error.hpp"

namespace cfseq {

SumIdentity<Rational> uniform_msection_sum(const CFiniteSeq& a, int m) {
    CFiniteSeq section = msection(a, m, 0);
    RatPoly p = section.char_poly();
    if (is_zero(p(Rational(1))))
        throw Refusal("section characteristic polynomial vanishes at 1 for m = " +
                      std::to_string(m) + "; no telescoped sum");
    return polysum(p);
}

bool sum_identity_check(const CFiniteSeq& a, const SumIdentity<Rational>& id, int n_max) {
    if (n_max < 0) throw InputError("negative n_max");
    if (!annihilates(id.source_poly, a))
        throw InputError("source polynomial does not annihilate the sequence");
    const int width = static_cast<int>(id.b_coeffs.size());
    std::vector<Rational> t = a.terms(n_max + width + 1);
    auto b_at = [&](int n) {
        Rational v(0);
        for (int i = 0; i < width; ++i)
            v += id.b_coeffs[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(n + i)];
        return v;
    };
    const Rational b0 = b_at(0);
    Rational running(0);
    for (int n = 0; n <= n_max; ++n) {
        if (running != b_at(n) - b0) return false;
        if (n < n_max) running += t[static_cast<std::size_t>(n)];
    }
    return true;
}

SumIdentity<Rational> specialize(const SumIdentity<MultiRat>& id,
                                 const std::map<std::string, Rational>& point) {
    Rational p1 = id.scale.evaluate(point);
    if (is_zero(p1))
        throw Refusal("telescoping denominator vanishes at the evaluation point");
    std::vector<Rational> b;
    b.reserve(id.b_coeffs.size());
    for (const auto& c : id.b_coeffs) b.push_back(c.evaluate(point));
    std::vector<Rational> pc;
    for (int k = 0; k <= id.source_poly.degree(); ++k)
        pc.push_back(id.source_poly.coeff(k).evaluate(point));
    return SumIdentity<Rational>{std::move(b), std::move(p1), RatPoly(std::move(pc))};
}

bool fib_square_sum_check(int m, int n_max) {
    if (m < 1 || m % 2 == 0) throw InputError("identity requires odd m >= 1");
    if (n_max < 1) throw InputError("n_max must be >= 1");
    CFiniteSeq fib = make({Rational(1), Rational(1)}, {Rational(0), Rational(1)});
    const Rational lucas_m = mat_pow(companion(fib), static_cast<unsigned long long>(m)).trace();
    std::vector<Rational> f = fib.terms(m * n_max + 1);
    Rational sum(0);
    for (int n = 1; n <= n_max; ++n) {
        const Rational& prev = f[static_cast<std::size_t>(m) * (n - 1)];
        sum += prev * prev;
        if (lucas_m * sum != f[static_cast<std::size_t>(m) * n] * prev) return false;
    }
    return true;
}

bool vanish_identity_check(int m_max) {
    if (m_max < 1) throw InputError("m_max must be >= 1");
    CFiniteSeq fib = make({Rational(1), Rational(1)}, {Rational(0), Rational(1)});
    std::vector<Rational> f = fib.terms(2 * m_max + 1);
    for (int m = 1; m <= m_max; ++m) {
        const Rational& fm = f[static_cast<std::size_t>(m)];
        const Rational& f2m = f[static_cast<std::size_t>(2 * m)];
        Rational lhs = (5 * fm * fm - 4) * fm * fm - f2m * f2m;
        Rational rhs = m % 2 == 1 ? Rational(0) : Rational(-8) * fm * fm;
        if (lhs != rhs) return false;
    }
    // Closure-algebra certificate: identical C-finite sequences in m.
    CFiniteSeq fib_sq = hadamard(fib, fib);
    CFiniteSeq fib_4th = hadamard(fib_sq, fib_sq);
    CFiniteSeq even_section = msection(fib, 2, 0);
    CFiniteSeq lhs_seq = subtract(subtract(scale(fib_4th, Rational(5)), scale(fib_sq, Rational(4))),
                                  hadamard(even_section, even_section));
    CFiniteSeq alternating = make({Rational(-1)}, {Rational(1)});
    CFiniteSeq rhs_seq = add(scale(hadamard(fib_sq, alternating), Rational(-4)),
                             scale(fib_sq, Rational(-4)));
    return equals(lhs_seq, rhs_seq);
}

} // namespace cfseq
