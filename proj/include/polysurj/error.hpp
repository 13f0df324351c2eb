#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysurj {

enum class Errc {
    ZeroInput,
    ZeroArgument,
    FactorizationTooHard,
    BothZero,
    NotCoprime,
    ZeroPolynomial,
    ZeroFunction,
    ConstantFunction,
    InvariantViolated,
    NotEmbeddedLine,
    NotLaurent,
    NonIntegralExponent,
    NoWitnessFound,
    SyntaxError,
    UnknownVariable,
    CorpusFormatError,
    BudgetExhausted,
    MixedRadicands,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::FactorizationTooHard: return "FactorizationTooHard";
        case Errc::BothZero: return "BothZero";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroFunction: return "ZeroFunction";
        case Errc::ConstantFunction: return "ConstantFunction";
        case Errc::InvariantViolated: return "InvariantViolated";
        case Errc::NotEmbeddedLine: return "NotEmbeddedLine";
        case Errc::NotLaurent: return "NotLaurent";
        case Errc::NonIntegralExponent: return "NonIntegralExponent";
        case Errc::NoWitnessFound: return "NoWitnessFound";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::CorpusFormatError: return "CorpusFormatError";
        case Errc::BudgetExhausted: return "BudgetExhausted";
        case Errc::MixedRadicands: return "MixedRadicands";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::size_t position = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          position_(position) {}

    Errc code() const { return code_; }

    // 1-based input offset; meaningful for SyntaxError only.
    std::size_t position() const { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, std::size_t position = 0) {
    throw Error(code, message, position);
}

}  // namespace polysurj
