#include "kdom/error.hpp"

namespace kdom {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SimplenessViolation: return "SimplenessViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DisconnectedInput: return "DisconnectedInput";
        case ErrorCode::EmptyFactor: return "EmptyFactor";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InfiniteDiameter: return "InfiniteDiameter";
        case ErrorCode::InfiniteRadius: return "InfiniteRadius";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& what, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0) {
        out += " at line " + std::to_string(line);
    }
    if (!what.empty()) {
        out += ": " + what;
    }
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& what, std::size_t line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace kdom
