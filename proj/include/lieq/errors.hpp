#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("elements are bound to different algebras") {}
};

class SingularMap : public Error {
public:
    SingularMap() : Error("linear map is singular") {}
};

class UnknownAlgebra : public Error {
public:
    explicit UnknownAlgebra(const std::string& name)
        : Error("unknown catalog algebra '" + name + "'") {}
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

class Inconsistent : public Error {
public:
    using Error::Error;
};

/// (i, j, k) index triple; meaning depends on the producer.
struct IndexTriple {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// Raised when a sector split violates the contraction convergence condition.
/// Carries every (mu, nu, lambda) with a nonzero first-sector bracket
/// coefficient on a second-sector generator.
class NotContractible : public Error {
public:
    explicit NotContractible(std::vector<IndexTriple> triples)
        : Error("split is not contractible (" + std::to_string(triples.size()) +
                " violating triples)"),
          triples_(std::move(triples)) {}

    const std::vector<IndexTriple>& triples() const noexcept { return triples_; }

private:
    std::vector<IndexTriple> triples_;
};

/// Diagnostic for malformed text input. Carries the source name, 1-based line
/// (0 when not line-specific) and the offending token.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::string token, const std::string& what)
        : Error(format(source, line, token, what)),
          source_(std::move(source)),
          line_(line),
          token_(std::move(token)) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    static std::string format(const std::string& source, std::size_t line,
                              const std::string& token, const std::string& what) {
        std::string out = source.empty() ? std::string("<input>") : source;
        if (line > 0)
            out += ":" + std::to_string(line);
        out += ": " + what;
        if (!token.empty())
            out += " (token '" + token + "')";
        return out;
    }

    std::string source_;
    std::size_t line_;
    std::string token_;
};

} // namespace lieq
