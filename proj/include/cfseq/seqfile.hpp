#ifndef CFSEQ_SEQFILE_HPP
#define CFSEQ_SEQFILE_HPP

#include <iosfwd>
#include <string>

#include "cfseq/cfinite.hpp"

namespace cfseq {

/// A named sequence definition from a .seq file:
///   name = fib
///   rec  = 1 1
///   init = 0 1
/// Rationals are "p/q" or integers; '#' starts a comment.
struct SeqDef {
    std::string name;
    CFiniteSeq seq;
};

SeqDef parse_seq_stream(std::istream& in, const std::string& origin);
SeqDef load_seq_file(const std::string& path);

} // namespace cfseq

#endif
