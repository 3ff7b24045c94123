#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Valuation certificate failed: the lifted image vanishes mod p^N although
// the element is nonzero. Caller must raise the working precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

struct NotFinite : Error {
    explicit NotFinite(const std::string& msg) : Error(msg) {}
};

struct NotFaithfulAction : Error {
    explicit NotFaithfulAction(const std::string& msg) : Error(msg) {}
};

struct EigenvalueNotInField : Error {
    explicit EigenvalueNotInField(const std::string& msg) : Error(msg) {}
};

struct TwistNotZero : Error {
    explicit TwistNotZero(const std::string& msg) : Error(msg) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& msg) : Error(msg) {}
};

struct EtaMismatch : Error {
    explicit EtaMismatch(const std::string& msg) : Error(msg) {}
};

struct NotInAlgebra : Error {
    explicit NotInAlgebra(const std::string& msg) : Error(msg) {}
};

struct NonTermination : Error {
    explicit NonTermination(const std::string& msg) : Error(msg) {}
};

struct DivisionFailure : Error {
    explicit DivisionFailure(const std::string& msg) : Error(msg) {}
};

struct CapTooSmall : Error {
    explicit CapTooSmall(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace cherednik
