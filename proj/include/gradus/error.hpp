#pragma once

#include <stdexcept>
#include <string>

namespace gradus {

/// Broad classification of failures. The C API and the CLI map these onto
/// status codes / exit codes.
enum class ErrorKind {
    Usage,         ///< malformed input: bad syntax, unknown option, bad file
    Precondition,  ///< well-formed input that violates an operation's contract
    Internal,      ///< an invariant the library itself should guarantee failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class ParseError : public UsageError {
public:
    ParseError(const std::string& what, std::size_t position)
        : UsageError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

/// Invariant check that stays on in release builds.
inline void check_invariant(bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("invariant violated: ") + what);
}

}  // namespace gradus
