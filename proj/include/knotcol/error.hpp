#pragma once

#include <stdexcept>
#include <string>

namespace knotcol {

/// Base of every error raised for bad input. Internal inconsistencies
/// (which indicate a bug) are reported with std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text: PD codes, residue lists.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace knotcol
