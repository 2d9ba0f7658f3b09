#include "cfseq/report.hpp"

namespace cfseq {

std::string render_report(const Report& r, Format f) {
    if (f == Format::table) return r.table;
    Json j;
    j["command"] = r.command;
    for (const auto& [key, value] : r.body.items()) j[key] = value;
    return j.dump(2) + "\n";
}

std::string join_rationals(const std::vector<Rational>& values, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out += sep;
        out += to_string(values[k]);
    }
    return out;
}

std::string demo_pair(const CFiniteSeq& s) {
    return "[[" + join_rationals(s.init_terms(), ", ") + "], [" +
           join_rationals(s.rec_coeffs(), ", ") + "]]";
}

std::string demo_meta(const MetaRecurrence& mr) {
    std::string out = "[";
    for (std::size_t k = 0; k < mr.coeff_seqs.size(); ++k) {
        if (k > 0) out += ", ";
        out += demo_pair(mr.coeff_seqs[k]);
    }
    return out + "]";
}

Json seq_json(const std::string& name, const CFiniteSeq& s) {
    Json j;
    j["name"] = name;
    j["order"] = s.order();
    Json init = Json::array(), rec = Json::array();
    for (const auto& v : s.init_terms()) init.push_back(to_string(v));
    for (const auto& v : s.rec_coeffs()) rec.push_back(to_string(v));
    j["init"] = init;
    j["rec"] = rec;
    j["certification"] = to_string(s.certification());
    return j;
}

namespace {

std::string shifted_term(const std::string& symbol, const std::string& base, int i) {
    if (i == 0 && base.empty()) return symbol + "(0)";
    if (i == 0) return symbol + "(" + base + ")";
    if (base.empty()) return symbol + "(" + std::to_string(i) + ")";
    return symbol + "(" + base + "+" + std::to_string(i) + ")";
}

void append_signed(std::string& out, const Rational& coeff, const std::string& label) {
    if (is_zero(coeff)) return;
    bool neg = coeff < 0;
    Rational mag = abs(coeff);
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += label;
}

} // namespace

std::string sum_identity_text(const SumIdentity<Rational>& id, const std::string& seq_symbol) {
    std::string rhs;
    for (std::size_t i = 0; i < id.b_coeffs.size(); ++i)
        append_signed(rhs, id.b_coeffs[i], shifted_term(seq_symbol, "n", static_cast<int>(i)));
    for (std::size_t i = 0; i < id.b_coeffs.size(); ++i)
        append_signed(rhs, -id.b_coeffs[i], shifted_term(seq_symbol, "", static_cast<int>(i)));
    if (rhs.empty()) rhs = "0";
    return "sum_{0<=k<n} " + seq_symbol + "(k) = " + rhs;
}

std::string sum_identity_text(const SumIdentity<MultiRat>& id, const std::string& seq_symbol) {
    // Render as -(sum_i q_i (a(n+i) - a(i))) / p(1). The quotient q is
    // rederived from the source polynomial so its coefficients print as
    // plain polynomials instead of unreduced fractions.
    const UniPoly<MultiRat> x_minus_1(std::vector<MultiRat>{MultiRat(-1), MultiRat(1)});
    auto [q, rem] = poly_divrem(id.source_poly, x_minus_1);
    std::string terms;
    for (int i = 0; i <= q.degree(); ++i) {
        MultiRat c = q.coeff(i);
        if (is_zero(c)) continue;
        if (!terms.empty()) terms += " + ";
        std::string group = "(" + shifted_term(seq_symbol, "n", i) + " - " +
                            shifted_term(seq_symbol, "", i) + ")";
        if (c == MultiRat(1)) {
            terms += group;
        } else {
            terms += "(" + c.str() + ")*" + group;
        }
    }
    if (terms.empty()) terms = "0";
    return "sum_{0<=k<n} " + seq_symbol + "(k) = -(" + terms + ") / (" + id.scale.str() + ")";
}

} // namespace cfseq
