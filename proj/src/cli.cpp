#include "cfseq/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cfseq/error.hpp"
#include "cfseq/exprparse.hpp"
#include "cfseq/meta.hpp"
#include "cfseq/oeis.hpp"
#include "cfseq/report.hpp"
#include "cfseq/seqfile.hpp"
#include "cfseq/sums.hpp"

namespace cfseq::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(std::ostream& out, const Report& rep, bool json) {
    out << render_report(rep, json ? Format::json : Format::table);
}

struct MsectArgs {
    std::string file;
    int m = 1;
    int r = 0;
    bool json = false;
    bool compat = false;
};

int run_msect(const MsectArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    SeqDef def = load_seq_file(a.file);
    CFiniteSeq s = msection(def.seq, a.m, a.r);
    if (a.compat) {
        out << demo_pair(s) << "\n";
        return 0;
    }
    Report rep;
    rep.command = argv;
    rep.table = "init: " + join_rationals(s.init_terms()) + "\n" +
                "rec: " + join_rationals(s.rec_coeffs()) + "\n";
    rep.body = seq_json(def.name + "_m" + std::to_string(a.m) + "r" + std::to_string(a.r), s);
    emit(out, rep, a.json);
    return 0;
}

struct MetaArgs {
    std::string file;
    bool json = false;
    bool compat = false;
};

int run_meta_msect(const MetaArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    SeqDef def = load_seq_file(a.file);
    MetaRecurrence mr = meta_msection(def.seq);
    if (a.compat) {
        out << demo_meta(mr) << "\n";
        return 0;
    }
    Report rep;
    rep.command = argv;
    std::string table;
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < mr.coeff_seqs.size(); ++k) {
        const CFiniteSeq& c = mr.coeff_seqs[k];
        table += "c" + std::to_string(k + 1) + ": init [" + join_rationals(c.init_terms()) +
                 "] rec [" + join_rationals(c.rec_coeffs()) + "] " + to_string(c.certification()) +
                 "\n";
        Json cj = seq_json("c" + std::to_string(k + 1), c);
        cj["order_bound"] = mr.order_bounds[k];
        coeffs.push_back(cj);
    }
    table += "status: " + std::string(to_string(mr.certification)) + " (" +
             std::to_string(mr.samples_checked) + " samples)\n";
    rep.table = table;
    rep.body["name"] = def.name;
    rep.body["order"] = mr.base.order();
    rep.body["coefficients"] = coeffs;
    rep.body["certification"] = to_string(mr.certification);
    rep.body["samples_checked"] = mr.samples_checked;
    emit(out, rep, a.json);
    return 0;
}

struct PolysumArgs {
    std::string file;
    int m = 1;
    std::string symbolic;
    std::string charpoly_expr;
    bool json = false;
};

Json sum_identity_json(const SumIdentity<Rational>& id, const std::string& identity) {
    Json j;
    Json b = Json::array();
    for (const auto& v : id.b_coeffs) b.push_back(to_string(v));
    j["b_coeffs"] = b;
    j["scale"] = to_string(id.scale);
    j["source_poly"] = to_string(id.source_poly);
    j["identity"] = identity;
    return j;
}

Json sum_identity_json(const SumIdentity<MultiRat>& id, const std::string& identity) {
    Json j;
    Json b = Json::array();
    for (const auto& v : id.b_coeffs) b.push_back(v.str());
    j["b_coeffs"] = b;
    j["scale"] = id.scale.str();
    std::string poly;
    for (int k = id.source_poly.degree(); k >= 0; --k) {
        if (is_zero(id.source_poly.coeff(k))) continue;
        if (!poly.empty()) poly += " + ";
        poly += "(" + id.source_poly.coeff(k).str() + ")";
        if (k > 0) poly += "*x" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    j["source_poly"] = poly;
    j["identity"] = identity;
    return j;
}

int run_polysum(const PolysumArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    const bool have_file = !a.file.empty();
    const bool have_expr = !a.charpoly_expr.empty();
    if (have_file == have_expr)
        throw InputError("polysum needs either a sequence file or --charpoly, not both");
    if (!a.symbolic.empty() && !have_expr)
        throw InputError("--symbolic requires --charpoly");
    Report rep;
    rep.command = argv;
    if (have_file) {
        SeqDef def = load_seq_file(a.file);
        SumIdentity<Rational> id = uniform_msection_sum(def.seq, a.m);
        std::string text = sum_identity_text(id);
        std::string table;
        if (a.m > 1)
            table += "section: a(k) = " + def.name + "(" + std::to_string(a.m) + "*k)\n";
        table += text + "\n";
        rep.table = table;
        rep.body["name"] = def.name;
        rep.body["m"] = a.m;
        Json idj = sum_identity_json(id, text);
        for (const auto& [key, value] : idj.items()) rep.body[key] = value;
        emit(out, rep, a.json);
        return 0;
    }
    std::vector<std::string> symbols = split_csv(a.symbolic);
    UniPoly<MultiRat> parsed = parse_charpoly(a.charpoly_expr, symbols);
    if (symbols.empty()) {
        if (!is_constant_poly(parsed))
            throw InputError("expression mentions symbols; declare them with --symbolic");
        SumIdentity<Rational> id = polysum(to_rational_poly(parsed));
        std::string text = sum_identity_text(id);
        rep.table = text + "\n";
        Json idj = sum_identity_json(id, text);
        for (const auto& [key, value] : idj.items()) rep.body[key] = value;
    } else {
        SumIdentity<MultiRat> id = polysum(parsed);
        std::string text = sum_identity_text(id);
        rep.table = text + "\n";
        Json idj = sum_identity_json(id, text);
        for (const auto& [key, value] : idj.items()) rep.body[key] = value;
    }
    emit(out, rep, a.json);
    return 0;
}

struct ProdrecArgs {
    std::string file;
    int i = 1;
    int j = 1;
    bool json = false;
};

int run_prodrec(const ProdrecArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    SeqDef def = load_seq_file(a.file);
    ProductAnnihilator pa = product_annihilator(def.seq, a.i, a.j);
    bool have_factors = false;
    RatPoly left, right;
    if (def.seq.order() == 2) {
        try {
            std::tie(left, right) = second_order_product_factors(
                def.seq, std::max(a.i, a.j), std::min(a.i, a.j));
            have_factors = true;
        } catch (const InputError&) {
            // repeated roots: no uniform factor split at order 2
        }
    }
    Report rep;
    rep.command = argv;
    std::string table = "poly: " + to_string(pa.poly) + "\n" +
                        "minimal: " + to_string(pa.minimal_poly) + "\n";
    if (have_factors)
        table += "L: " + to_string(left) + "\nR: " + to_string(right) + "\n";
    rep.table = table;
    rep.body["name"] = def.name;
    rep.body["i"] = a.i;
    rep.body["j"] = a.j;
    rep.body["poly"] = to_string(pa.poly);
    rep.body["minimal_poly"] = to_string(pa.minimal_poly);
    if (have_factors) {
        rep.body["factors"] = Json{{"L", to_string(left)}, {"R", to_string(right)}};
    } else {
        rep.body["factors"] = nullptr;
    }
    emit(out, rep, a.json);
    return 0;
}

struct VerifyArgs {
    std::string file;
    int max_m = 8;
    bool json = false;
};

int run_verify(const VerifyArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    SeqDef def = load_seq_file(a.file);
    const CFiniteSeq& s = def.seq;
    Report rep;
    rep.command = argv;
    Json checks = Json::array();
    std::string table;
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        all_ok = all_ok && ok;
        table += std::string(ok ? "ok" : "FAIL") + ": " + name;
        if (!detail.empty()) table += " (" + detail + ")";
        table += "\n";
        checks.push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
    };
    auto note = [&](const std::string& name, const std::string& detail) {
        table += "info: " + name + ": " + detail + "\n";
        checks.push_back(Json{{"name", name}, {"ok", nullptr}, {"detail", detail}});
    };

    const int d = s.order();
    if (d == 0) {
        note("order", "zero sequence; nothing to verify");
    } else {
        {
            const int count = 3 * d + 5;
            RatPoly p = s.char_poly();
            std::vector<Rational> t = s.terms(count + d);
            bool ok = true;
            for (int n = 0; n < count && ok; ++n) {
                Rational v(0);
                for (int k = 0; k <= d; ++k) v += p.coeff(k) * t[static_cast<std::size_t>(n + k)];
                ok = is_zero(v);
            }
            record("characteristic polynomial annihilates " + std::to_string(count) + " terms", ok,
                   "");
        }
        try {
            MetaRecurrence mr = meta_msection(s);
            record("meta-recurrence certified",
                   mr.certification == Certification::proved, "orders " + [&] {
                       std::string o;
                       for (std::size_t k = 0; k < mr.coeff_seqs.size(); ++k) {
                           if (k > 0) o += ",";
                           o += std::to_string(mr.coeff_seqs[k].order());
                       }
                       return o;
                   }() + " within bounds, " + std::to_string(mr.samples_checked) + " samples");
            record("c1 satisfies the base recurrence",
                   annihilates(s.char_poly(), mr.coeff_seqs.front()), "");
            note("c1 equals base terms a(m)",
                 coeff1_matches_base_terms(mr, a.max_m)
                     ? "yes (initial terms follow the trace convention)"
                     : "no (base initial terms differ from the trace sequence)");
        } catch (const Error& e) {
            record("meta-recurrence certified", false, e.what());
        }
        {
            TrailingCoeffLaw law = trailing_coeff_law(s, a.max_m);
            note("trailing coefficient law",
                 "omega = " + to_string(law.omega) +
                     "; c_d(m) = omega^m: " + (law.matches_omega_pow ? "yes" : "no") +
                     "; c_d(m) = (-1)^(d+1) omega^m: " +
                     (law.matches_signed_omega_pow ? "yes" : "no"));
        }
        for (int m = 1; m <= a.max_m; ++m) {
            try {
                SumIdentity<Rational> id = uniform_msection_sum(s, m);
                bool ok = sum_identity_check(msection(s, m, 0), id, 20);
                record("telescoped sum at m = " + std::to_string(m), ok, "");
            } catch (const Refusal& e) {
                note("telescoped sum at m = " + std::to_string(m), e.what());
            }
        }
    }
    rep.table = table;
    rep.body["name"] = def.name;
    rep.body["order"] = d;
    rep.body["checks"] = checks;
    rep.body["all_ok"] = all_ok;
    emit(out, rep, a.json);
    return all_ok ? 0 : 1;
}

struct OeisArgs {
    std::string file;
    int coeff = 0;
    std::string bfile_path;
    std::string id;
    bool network = false;
    long long offset = 0;
    int timeout = 10;
    bool json = false;
};

int run_oeis_check(const OeisArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    if (a.bfile_path.empty() == a.id.empty())
        throw InputError("oeis-check needs exactly one of --bfile or --id");
    SeqDef def = load_seq_file(a.file);
    BFile b;
    std::string source;
    if (!a.bfile_path.empty()) {
        b = parse_bfile(slurp(a.bfile_path));
        source = a.bfile_path;
    } else {
        FetchOptions opts;
        opts.network = a.network;
        opts.timeout_seconds = a.timeout;
        b = fetch_bfile(a.id, opts);
        source = a.id;
    }
    CFiniteSeq target = def.seq;
    std::string label = def.name;
    if (a.coeff != 0) {
        MetaRecurrence mr = meta_msection(def.seq);
        if (a.coeff < 1 || a.coeff > static_cast<int>(mr.coeff_seqs.size()))
            throw InputError("--coeff out of range 1.." + std::to_string(mr.coeff_seqs.size()));
        target = mr.coeff_seqs[static_cast<std::size_t>(a.coeff - 1)];
        label = def.name + ".c" + std::to_string(a.coeff);
    }
    PrefixReport pr = compare_prefix(target, b, a.offset);
    Report rep;
    rep.command = argv;
    std::string table = "sequence: " + label + "\nsource: " + source + "\ncompared: " +
                        std::to_string(pr.compared) + "\nmatched: " + std::to_string(pr.matched) +
                        "\n";
    if (pr.mismatch)
        table += "first mismatch at term " + std::to_string(pr.mismatch_position) + ": sequence " +
                 pr.seq_value + " vs b-file " + pr.bfile_value + "\n";
    rep.table = table;
    rep.body["name"] = label;
    rep.body["source"] = source;
    rep.body["offset"] = a.offset;
    rep.body["compared"] = pr.compared;
    rep.body["matched"] = pr.matched;
    if (pr.mismatch) {
        rep.body["mismatch"] = Json{{"position", pr.mismatch_position},
                                    {"seq_value", pr.seq_value},
                                    {"bfile_value", pr.bfile_value}};
    } else {
        rep.body["mismatch"] = nullptr;
    }
    emit(out, rep, a.json);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact recurrences, meta-recurrences, and telescoped sums for C-finite sequences",
                 "cfseq"};
    app.require_subcommand(1);

    MsectArgs msect_args;
    auto* msect_cmd = app.add_subcommand("msect", "recurrence of the section n -> a(mn+r)");
    msect_cmd->add_option("seqfile", msect_args.file, "sequence definition file")->required();
    msect_cmd->add_option("m", msect_args.m, "section stride (>= 1)")->required();
    msect_cmd->add_option("r", msect_args.r, "section offset (0 <= r < m)")->required();
    msect_cmd->add_flag("--json", msect_args.json, "machine-readable output");
    msect_cmd->add_flag("--compat", msect_args.compat, "[[init],[rec]] golden shape");

    MetaArgs meta_args;
    auto* meta_cmd =
        app.add_subcommand("meta-msect", "certified recurrences for the section coefficients c_k(m)");
    meta_cmd->add_option("seqfile", meta_args.file, "sequence definition file")->required();
    meta_cmd->add_flag("--json", meta_args.json, "machine-readable output");
    meta_cmd->add_flag("--compat", meta_args.compat, "[[[init],[rec]],...] golden shape");

    PolysumArgs polysum_args;
    auto* polysum_cmd = app.add_subcommand("polysum", "telescoped partial-sum identity");
    polysum_cmd->add_option("seqfile", polysum_args.file, "sequence definition file");
    polysum_cmd->add_option("--m", polysum_args.m, "sum the section n -> a(mn)")
        ->check(CLI::PositiveNumber);
    polysum_cmd->add_option("--symbolic", polysum_args.symbolic, "comma-separated symbol names");
    polysum_cmd->add_option("--charpoly", polysum_args.charpoly_expr,
                            "characteristic polynomial expression in x");
    polysum_cmd->add_flag("--json", polysum_args.json, "machine-readable output");

    ProdrecArgs prodrec_args;
    auto* prodrec_cmd = app.add_subcommand("prodrec", "annihilators of n -> a(ni) a(nj)");
    prodrec_cmd->add_option("seqfile", prodrec_args.file, "sequence definition file")->required();
    prodrec_cmd->add_option("i", prodrec_args.i, "first index factor")->required();
    prodrec_cmd->add_option("j", prodrec_args.j, "second index factor")->required();
    prodrec_cmd->add_flag("--json", prodrec_args.json, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "self-checks and convention reports");
    verify_cmd->add_option("seqfile", verify_args.file, "sequence definition file")->required();
    verify_cmd->add_option("--max-m", verify_args.max_m, "sampling depth")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify_args.json, "machine-readable output");

    OeisArgs oeis_args;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "compare against an OEIS b-file");
    oeis_cmd->add_option("seqfile", oeis_args.file, "sequence definition file")->required();
    oeis_cmd->add_option("--coeff", oeis_args.coeff, "compare meta coefficient c_k instead (k >= 1)");
    oeis_cmd->add_option("--bfile", oeis_args.bfile_path, "local b-file fixture");
    oeis_cmd->add_option("--id", oeis_args.id, "OEIS identifier ('A' + 6 digits)");
    oeis_cmd->add_flag("--network", oeis_args.network, "allow the HTTPS fetch");
    oeis_cmd->add_option("--offset", oeis_args.offset, "b-file index aligned with term 0");
    oeis_cmd->add_option("--timeout", oeis_args.timeout, "fetch timeout in seconds");
    oeis_cmd->add_flag("--json", oeis_args.json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cfseq");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*msect_cmd) return run_msect(msect_args, args, out);
        if (*meta_cmd) return run_meta_msect(meta_args, args, out);
        if (*polysum_cmd) return run_polysum(polysum_args, args, out);
        if (*prodrec_cmd) return run_prodrec(prodrec_args, args, out);
        if (*verify_cmd) return run_verify(verify_args, args, out);
        if (*oeis_cmd) return run_oeis_check(oeis_args, args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
    } catch (const GuessFailure& e) {
        err << "diagnostic: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace cfseq::cli
