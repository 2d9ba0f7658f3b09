#ifndef CFSEQ_ERROR_HPP
#define CFSEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cfseq {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad constructor arguments, unparsable files, violated
/// preconditions the caller could have checked.
class InputError : public Error {
public:
    using Error::Error;
};

/// A request that is mathematically impossible or explicitly disabled
/// (p(1) = 0 telescoping, network access without the opt-in flag, ...).
class Refusal : public Error {
public:
    using Error::Error;
};

/// Guessing at a certified order bound found no fit. The bound argument says
/// this cannot happen for honest inputs, so it is surfaced loudly instead of
/// being downgraded to an empty result.
class GuessFailure : public Error {
public:
    using Error::Error;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

class HttpError : public Error {
public:
    HttpError(const std::string& msg, int status) : Error(msg), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

} // namespace cfseq

#endif
