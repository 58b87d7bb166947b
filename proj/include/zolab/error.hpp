#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zolab {

// Base for every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry structured detail.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's precondition (probability not in [0,1],
// non-increasing growth list, vertex out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An index computation left the signed 64-bit range. `term` names the first
// failing term of the construction (1-based).
class IndexOverflow : public Error {
public:
    IndexOverflow(const std::string& what, long long term)
        : Error(what), term_(term) {}
    long long term() const noexcept { return term_; }

private:
    long long term_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class VocabularyError : public Error {
public:
    using Error::Error;
};

// Search or enumeration would exceed its configured work limit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// An exact oracle's applicability check failed; the caller should fall back
// to brute force or Monte Carlo.
class OracleNotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace zolab
