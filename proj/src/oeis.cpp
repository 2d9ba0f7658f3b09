#include "httplib.h"

#include "cfseq/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cfseq/error.hpp"

namespace cfseq {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_signed_integer(const std::string& s, BigInt& out) {
    std::string_view v = s;
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = BigInt(s);
    return true;
}

} // namespace

BFile parse_bfile(std::string_view text, std::string id) {
    BFile b;
    b.id = std::move(id);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_prev = false;
    long long prev = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed.front() == '#') continue;
        auto tokens = split_ws(trimmed);
        if (tokens.size() != 2)
            throw InputError("b-file line " + std::to_string(lineno) +
                             ": expected 'index value', got '" + line + "'");
        BigInt idx, val;
        if (!parse_signed_integer(tokens[0], idx) || !parse_signed_integer(tokens[1], val))
            throw InputError("b-file line " + std::to_string(lineno) + ": malformed number in '" +
                             line + "'");
        long long index = static_cast<long long>(idx);
        if (have_prev && index <= prev)
            throw InputError("b-file line " + std::to_string(lineno) +
                             ": indices must be strictly increasing");
        prev = index;
        have_prev = true;
        b.entries.push_back(BFileEntry{index, std::move(val)});
    }
    return b;
}

std::string serialize_bfile(const BFile& b) {
    std::string out;
    for (const auto& e : b.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value.str();
        out += '\n';
    }
    return out;
}

PrefixReport compare_prefix(const CFiniteSeq& seq, const BFile& b, long long offset) {
    PrefixReport rep;
    auto it = std::lower_bound(b.entries.begin(), b.entries.end(), offset,
                               [](const BFileEntry& e, long long v) { return e.index < v; });
    // Count the contiguous run starting exactly at `offset`.
    int available = 0;
    for (auto jt = it; jt != b.entries.end() && jt->index == offset + available; ++jt) ++available;
    rep.compared = available;
    if (available == 0) return rep;
    std::vector<Rational> t = seq.terms(available);
    for (int k = 0; k < available; ++k) {
        const Rational& sv = t[static_cast<std::size_t>(k)];
        const BigInt& bv = (it + k)->value;
        if (is_integer(sv) && numerator(sv) == bv) {
            ++rep.matched;
            continue;
        }
        rep.mismatch = true;
        rep.mismatch_position = k;
        rep.seq_value = to_string(sv);
        rep.bfile_value = bv.str();
        break;
    }
    return rep;
}

bool valid_oeis_id(const std::string& id) {
    if (id.size() != 7 || id.front() != 'A') return false;
    return std::all_of(id.begin() + 1, id.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BFile fetch_bfile(const std::string& id, const FetchOptions& options) {
    if (!valid_oeis_id(id))
        throw InputError("malformed OEIS identifier '" + id + "' (expected 'A' + 6 digits)");
    if (!options.network)
        throw Refusal("network access is disabled; no request attempted");
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto get = [&](auto& client) {
        client.set_connection_timeout(options.timeout_seconds, 0);
        client.set_read_timeout(options.timeout_seconds, 0);
        client.set_follow_location(true);
        return client.Get(path);
    };
    httplib::Result res;
    if (options.use_tls) {
        httplib::SSLClient client(options.host, options.port);
        res = get(client);
    } else {
        httplib::Client client(options.host, options.port);
        res = get(client);
    }
    if (!res)
        throw NetworkError("request for " + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw HttpError("HTTP " + std::to_string(res->status) + " fetching " + path, res->status);
    return parse_bfile(res->body, id);
}

} // namespace cfseq
