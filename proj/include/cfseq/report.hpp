#ifndef CFSEQ_REPORT_HPP
#define CFSEQ_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "cfseq/cfinite.hpp"
#include "cfseq/meta.hpp"
#include "cfseq/multirat.hpp"
#include "cfseq/sums.hpp"

namespace cfseq {

using Json = nlohmann::ordered_json;

enum class Format { table, json };

/// Command result with both renderings prepared; the machine form is
/// byte-stable for identical inputs.
struct Report {
    std::vector<std::string> command;
    std::string table;
    Json body;
};

std::string render_report(const Report& r, Format f);

std::string join_rationals(const std::vector<Rational>& values, const std::string& sep = " ");

/// The pair-of-lists shape "[[init...], [rec...]]" used for golden
/// comparisons.
std::string demo_pair(const CFiniteSeq& s);

/// "[[[init],[rec]], ...]" over the meta coefficient sequences.
std::string demo_meta(const MetaRecurrence& mr);

Json seq_json(const std::string& name, const CFiniteSeq& s);

/// "sum_{0<=k<n} a(k) = ..." with the b-coefficients folded in.
std::string sum_identity_text(const SumIdentity<Rational>& id, const std::string& seq_symbol = "a");

/// Fraction form "-(q-terms) / (p(1))" for symbolic identities.
std::string sum_identity_text(const SumIdentity<MultiRat>& id, const std::string& seq_symbol = "a");

} // namespace cfseq

#endif
