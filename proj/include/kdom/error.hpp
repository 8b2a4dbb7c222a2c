#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kdom {

enum class ErrorCode {
    IndexOutOfRange,
    SimplenessViolation,
    ParseError,
    CountMismatch,
    InvalidOrder,
    InvalidParameter,
    TooLarge,
    DisconnectedInput,
    EmptyFactor,
    PreconditionViolated,
    BudgetExceeded,
    InfiniteDiameter,
    InfiniteRadius,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
// `line` is 1-based and only meaningful for errors raised while parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::size_t line = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_;
};

}  // namespace kdom
