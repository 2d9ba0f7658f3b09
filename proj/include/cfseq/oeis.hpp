#ifndef CFSEQ_OEIS_HPP
#define CFSEQ_OEIS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cfseq/cfinite.hpp"
#include "cfseq/rational.hpp"

namespace cfseq {

struct BFileEntry {
    long long index = 0;
    BigInt value;
};

/// Parsed OEIS b-file: "index value" lines with strictly increasing
/// indices; '#' comments and blank lines allowed.
struct BFile {
    std::string id; // "A" + 6 digits when known
    std::vector<BFileEntry> entries;
};

BFile parse_bfile(std::string_view text, std::string id = "");

/// Normalized data lines only: "index value\n" per entry.
std::string serialize_bfile(const BFile& b);

struct PrefixReport {
    int matched = 0;  // longest matching prefix length
    int compared = 0; // aligned pairs that were available
    bool mismatch = false;
    long long mismatch_position = 0; // k with seq term k vs b-file index offset+k
    std::string seq_value;
    std::string bfile_value;
};

/// Compare terms(seq)[k] against the b-file value at index offset + k,
/// k = 0, 1, ...; alignment is explicit, never guessed. Comparison stops
/// where the b-file runs out (or has an index gap) or at the first
/// mismatch.
PrefixReport compare_prefix(const CFiniteSeq& seq, const BFile& b, long long offset);

bool valid_oeis_id(const std::string& id);

struct FetchOptions {
    bool network = false; // refused unless explicitly enabled
    std::string host = "oeis.org";
    int port = 443;
    bool use_tls = true;
    int timeout_seconds = 10;
};

/// HTTPS GET of the standard b-file path for the identifier; one request,
/// no retries. Never called implicitly by library code.
BFile fetch_bfile(const std::string& id, const FetchOptions& options);

} // namespace cfseq

#endif
