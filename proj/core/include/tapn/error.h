#ifndef TAPN_ERROR_H
#define TAPN_ERROR_H

#include <stdexcept>
#include <string>

namespace tapn {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NetErrorKind {
    InhibitorNotZeroInfinity,
    InhibitorOnOutputArc,
    UnpairedTransportArc,
    DuplicateTransportGroup,
    InvariantExcludesZero,
    DanglingArcEndpoint,
    DuplicateArc,
    DuplicateName,
    ConstantTooLarge,
    KTooSmall,
};

const char* to_string(NetErrorKind kind);

class NetError : public Error {
public:
    NetError(NetErrorKind kind, const std::string& what)
        : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    NetErrorKind kind() const noexcept { return kind_; }

private:
    NetErrorKind kind_;
};

/// Malformed input text (net files, interval strings, queries).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(format(what, line, column)), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column);
    int line_;
    int column_;
};

/// Thrown by the concrete semantics when a delay or firing is not allowed.
class SemanticsError : public Error {
public:
    using Error::Error;
};

} // namespace tapn

#endif
