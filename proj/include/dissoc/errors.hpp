#pragma once

#include <stdexcept>
#include <string>

namespace dissoc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A FamilySpec or family grammar string violates a constraint.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Input graph larger than the operation's cap.
class UnsupportedSize : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation precondition (e.g. is_maximal on a non-dissociation set).
class ContractError : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation ran past its wall-clock budget.
class TimeLimitExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    enum class Kind { malformed, truncated };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace dissoc
