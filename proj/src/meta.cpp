#include "cfseq/meta.hpp"

#include <algorithm>

#include "cfseq/error.hpp"

namespace cfseq {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

namespace {

Rational rat_pow(const Rational& base, int e) {
    Rational acc(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

std::vector<Rational> product_terms(const CFiniteSeq& a, int i, int j, int count) {
    const int top = std::max(i, j) * (count - 1);
    std::vector<Rational> t = a.terms(top + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n)
        out.push_back(t[static_cast<std::size_t>(n) * i] * t[static_cast<std::size_t>(n) * j]);
    return out;
}

// First `bound` terms of p(N) applied to the values must vanish; `bound` is
// the degree of a known annihilator of the value sequence.
bool poly_kills_values(const RatPoly& p, const std::vector<Rational>& values, int bound) {
    const int g = p.degree();
    for (int n = 0; n < bound; ++n) {
        Rational v(0);
        for (int k = 0; k <= g; ++k) v += p.coeff(k) * values[static_cast<std::size_t>(n + k)];
        if (!is_zero(v)) return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<Rational>> msection_coeff_table(const CFiniteSeq& a, int m_max) {
    if (!a.proved()) throw InputError("coefficient table requires a proved sequence");
    const int d = a.order();
    if (d < 1) throw InputError("coefficient table requires order >= 1");
    if (m_max < 1) throw InputError("coefficient table requires m_max >= 1");
    std::vector<std::vector<Rational>> table(static_cast<std::size_t>(d));
    for (auto& col : table) col.reserve(static_cast<std::size_t>(m_max));
    const RatMatrix base = companion(a);
    RatMatrix power = RatMatrix::identity(d);
    for (int m = 1; m <= m_max; ++m) {
        power = power * base;
        RatPoly p = charpoly(power);
        for (int k = 1; k <= d; ++k)
            table[static_cast<std::size_t>(k - 1)].push_back(-p.coeff(d - k));
    }
    return table;
}

MetaRecurrence meta_msection(const CFiniteSeq& a) {
    const int d = a.order();
    if (d < 1) throw InputError("meta-recurrence requires order >= 1");
    std::vector<int> bounds(static_cast<std::size_t>(d));
    int max_bound = 0;
    for (int k = 1; k <= d; ++k) {
        bounds[static_cast<std::size_t>(k - 1)] = static_cast<int>(binomial(d, k));
        max_bound = std::max(max_bound, bounds[static_cast<std::size_t>(k - 1)]);
    }
    const int sample_count = 2 * max_bound + d;
    auto table = msection_coeff_table(a, sample_count + 2);

    MetaRecurrence mr;
    mr.base = a;
    mr.order_bounds = bounds;
    mr.samples_checked = sample_count + 2;
    for (int k = 1; k <= d; ++k) {
        const auto& column = table[static_cast<std::size_t>(k - 1)];
        std::vector<Rational> sample(column.begin(), column.begin() + sample_count);
        auto fit = guess_min_rec(sample, bounds[static_cast<std::size_t>(k - 1)], true);
        if (!fit)
            throw GuessFailure("no recurrence of order <= " +
                               std::to_string(bounds[static_cast<std::size_t>(k - 1)]) +
                               " fits coefficient column k=" + std::to_string(k));
        // Fresh samples the fit never saw.
        std::vector<Rational> predicted = fit->seq.terms(sample_count + 2);
        for (int m = sample_count + 1; m <= sample_count + 2; ++m)
            if (predicted[static_cast<std::size_t>(m - 1)] != column[static_cast<std::size_t>(m - 1)])
                throw GuessFailure("certified coefficient column k=" + std::to_string(k) +
                                   " disagrees with a fresh sample at m=" + std::to_string(m));
        mr.coeff_seqs.push_back(fit->seq);
    }
    mr.certification = Certification::proved;
    return mr;
}

ProductAnnihilator product_annihilator(const CFiniteSeq& a, int i, int j) {
    if (i < 1 || j < 1) throw InputError("product annihilator requires i, j >= 1");
    if (!a.proved()) throw InputError("product annihilator requires a proved sequence");
    const int d = a.order();
    ProductAnnihilator out;
    out.i = i;
    out.j = j;
    if (d == 0) {
        out.poly = RatPoly::constant(Rational(1));
        out.minimal_poly = out.poly;
        return out;
    }
    const RatMatrix m = companion(a);
    out.poly = charpoly(kronecker(mat_pow(m, static_cast<unsigned long long>(i)),
                                  mat_pow(m, static_cast<unsigned long long>(j))));
    const int dd = d * d;
    std::vector<Rational> values = product_terms(a, i, j, 2 * dd);
    auto fit = guess_min_rec(values, dd, true);
    if (!fit)
        throw GuessFailure("product sequence admits no recurrence of order <= " +
                           std::to_string(dd));
    out.minimal_poly = fit->seq.char_poly();
    if (!poly_kills_values(out.poly, values, dd))
        throw Error("internal: uniform product annihilator failed the zero test");
    return out;
}

GuessResult meta_product_coeffs(const CFiniteSeq& a, int k, int j, int i_max) {
    const int d = a.order();
    if (d < 1) throw InputError("product coefficients require order >= 1");
    if (j < 1) throw InputError("product coefficients require j >= 1");
    if (k < 1 || k > d * d) throw InputError("coefficient index out of range");
    const int bound = static_cast<int>(binomial(d, k));
    if (i_max < 2 * bound + 2)
        throw InputError("need i_max >= " + std::to_string(2 * bound + 2) +
                         " samples for bound " + std::to_string(bound));
    const int dd = d * d;
    const RatMatrix m = companion(a);
    const RatMatrix mj = mat_pow(m, static_cast<unsigned long long>(j));
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(i_max));
    RatMatrix mi = RatMatrix::identity(d);
    for (int i = 1; i <= i_max; ++i) {
        mi = mi * m;
        RatPoly pij = charpoly(kronecker(mi, mj));
        values.push_back(-pij.coeff(dd - k));
        // c_k(i,j) = c_k(j,i): the two Kronecker factors commute up to
        // similarity, so the characteristic polynomials agree.
        if (i <= 6) {
            RatPoly pji = charpoly(kronecker(mj, mi));
            if (!(pij == pji)) throw Error("internal: product coefficient symmetry violated");
        }
    }
    auto fit = guess_min_rec(values, bound, true);
    if (!fit)
        throw GuessFailure("product coefficient c_" + std::to_string(k) + "(i," +
                           std::to_string(j) + ") admits no recurrence of order <= " +
                           std::to_string(bound) + " in i");
    return *fit;
}

std::pair<RatPoly, RatPoly> second_order_product_factors(const CFiniteSeq& a, int i, int j) {
    if (a.order() != 2) throw InputError("factor split is implemented for order 2 only");
    if (j < 1 || i < j) throw InputError("factor split requires i >= j >= 1");
    RatPoly p = a.char_poly();
    if (poly_gcd(p, p.derivative()).degree() != 0)
        throw InputError("factor split requires a squarefree characteristic polynomial");
    const RatMatrix m = companion(a);
    const Rational s = det(m);
    const Rational trace_sum = mat_pow(m, static_cast<unsigned long long>(i + j)).trace();
    const Rational trace_diff = mat_pow(m, static_cast<unsigned long long>(i - j)).trace();
    const Rational s_ipj = rat_pow(s, i + j);
    RatPoly left(std::vector<Rational>{s_ipj, -trace_sum, Rational(1)});
    RatPoly right(std::vector<Rational>{s_ipj, -rat_pow(s, j) * trace_diff, Rational(1)});
    std::vector<Rational> values = product_terms(a, i, j, 4 + 4);
    if (!poly_kills_values(left * right, values, 4))
        throw Error("internal: factor product failed the zero test");
    return {left, right};
}

TrailingCoeffLaw trailing_coeff_law(const CFiniteSeq& a, int m_max) {
    const int d = a.order();
    if (d < 1) throw InputError("trailing coefficient law requires order >= 1");
    RatPoly p = a.char_poly();
    TrailingCoeffLaw law;
    law.omega = d % 2 == 0 ? p.coeff(0) : -p.coeff(0);
    law.matches_omega_pow = true;
    law.matches_signed_omega_pow = true;
    const Rational sign(d % 2 == 0 ? -1 : 1); // (-1)^{d+1}
    auto table = msection_coeff_table(a, m_max);
    const auto& cd = table[static_cast<std::size_t>(d - 1)];
    for (int m = 1; m <= m_max; ++m) {
        Rational wm = rat_pow(law.omega, m);
        const Rational& actual = cd[static_cast<std::size_t>(m - 1)];
        if (actual != wm) law.matches_omega_pow = false;
        if (actual != sign * wm) law.matches_signed_omega_pow = false;
    }
    return law;
}

bool coeff1_matches_base_terms(const MetaRecurrence& mr, int samples) {
    if (mr.coeff_seqs.empty()) throw InputError("meta-recurrence has no coefficients");
    std::vector<Rational> c1 = mr.coeff_seqs.front().terms(samples);
    std::vector<Rational> base = mr.base.terms(samples + 1);
    for (int m = 1; m <= samples; ++m)
        if (c1[static_cast<std::size_t>(m - 1)] != base[static_cast<std::size_t>(m)]) return false;
    return true;
}

} // namespace cfseq
