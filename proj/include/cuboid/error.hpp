#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuboid {

enum class ErrorCode {
    NotCoprime,
    Equal,
    NonPositive,
    NotEven,
    NotMonic,
    NotPrime,
    NotOddPrime,
    ZeroInput,
    ZeroX,
    NotOnCurve,
    SingularCurve,
    EmptyInput,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable domain error in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cuboid
