#include "cfseq/guess.hpp"

#include <algorithm>

#include "cfseq/error.hpp"

namespace cfseq {

namespace {

// Solve the order-r window system over the rationals. Returns the unique
// coefficient vector when the system is consistent and fully determined.
enum class SolveStatus { inconsistent, underdetermined, unique };

SolveStatus solve_window_system(const std::vector<Rational>& t, int r,
                                std::vector<Rational>& out) {
    const int len = static_cast<int>(t.size());
    const int rows = len - r;
    // Augmented matrix: row for each n in [r, len): sum_k c_k t[n-k] = t[n].
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows));
    for (int n = r; n < len; ++n) {
        auto& row = m[static_cast<std::size_t>(n - r)];
        row.reserve(static_cast<std::size_t>(r) + 1);
        for (int k = 1; k <= r; ++k) row.push_back(t[static_cast<std::size_t>(n - k)]);
        row.push_back(t[static_cast<std::size_t>(n)]);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < r && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (!is_zero(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row)]);
        Rational inv = 1 / m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int j = col; j <= r; ++j) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (is_zero(f)) continue;
            for (int j = col; j <= r; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (!is_zero(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]))
            return SolveStatus::inconsistent;
    if (static_cast<int>(pivot_col.size()) < r) return SolveStatus::underdetermined;
    out.assign(static_cast<std::size_t>(r), Rational(0));
    for (int i = 0; i < r; ++i)
        out[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    return SolveStatus::unique;
}

bool reproduces(const std::vector<Rational>& t, const std::vector<Rational>& rec) {
    const std::size_t r = rec.size();
    for (std::size_t n = r; n < t.size(); ++n) {
        Rational v(0);
        for (std::size_t k = 0; k < r; ++k) v += rec[k] * t[n - 1 - k];
        if (v != t[n]) return false;
    }
    return true;
}

} // namespace

std::optional<GuessResult> guess_min_rec(const std::vector<Rational>& terms, int max_order,
                                         bool known_bound) {
    if (max_order < 0) throw InputError("negative order bound");
    const int len = static_cast<int>(terms.size());
    if (len < 2 * max_order)
        throw InputError("guessing with bound " + std::to_string(max_order) + " needs at least " +
                         std::to_string(2 * max_order) + " terms, got " + std::to_string(len));
    const Certification cert = known_bound ? Certification::proved : Certification::conjectured;
    if (std::all_of(terms.begin(), terms.end(), [](const Rational& v) { return is_zero(v); }))
        return GuessResult{CFiniteSeq(), 0, len, cert};
    for (int r = 1; r <= max_order; ++r) {
        std::vector<Rational> rec;
        switch (solve_window_system(terms, r, rec)) {
            case SolveStatus::inconsistent:
                continue;
            case SolveStatus::underdetermined:
                throw InputError("underdetermined guess at order " + std::to_string(r) +
                                 ": several recurrences fit the supplied terms");
            case SolveStatus::unique:
                break;
        }
        if (!reproduces(terms, rec))
            throw Error("internal: eliminated solution fails to reproduce terms");
        std::vector<Rational> init(terms.begin(), terms.begin() + r);
        return GuessResult{CFiniteSeq(std::move(rec), std::move(init), cert), 2 * r, len - 2 * r,
                           cert};
    }
    return std::nullopt;
}

} // namespace cfseq
