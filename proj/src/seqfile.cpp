#include "cfseq/seqfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "cfseq/error.hpp"

namespace cfseq {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_values(const std::string& text, const std::string& where) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            out.push_back(parse_rational(tok));
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    return out;
}

} // namespace

SeqDef parse_seq_stream(std::istream& in, const std::string& origin) {
    std::optional<std::string> name;
    std::optional<std::vector<Rational>> rec, init;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = origin + ":" + std::to_string(lineno);
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw InputError(where + ": expected 'key = value', got '" + body + "'");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (key == "name") {
            if (name) throw InputError(where + ": duplicate 'name'");
            if (value.empty() || value.find_first_of(" \t") != std::string::npos)
                throw InputError(where + ": 'name' must be a single token");
            name = value;
        } else if (key == "rec") {
            if (rec) throw InputError(where + ": duplicate 'rec'");
            rec = parse_values(value, where);
        } else if (key == "init") {
            if (init) throw InputError(where + ": duplicate 'init'");
            init = parse_values(value, where);
        } else {
            throw InputError(where + ": unknown key '" + key + "'");
        }
    }
    if (!name) throw InputError(origin + ": missing 'name'");
    if (!rec) throw InputError(origin + ": missing 'rec'");
    if (!init) throw InputError(origin + ": missing 'init'");
    try {
        return SeqDef{*name, make(std::move(*rec), std::move(*init))};
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

SeqDef load_seq_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open sequence file: " + path);
    return parse_seq_stream(in, path);
}

} // namespace cfseq
