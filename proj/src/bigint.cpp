#include "cuboid/bigint.hpp"

#include <limits>

#include "cuboid/error.hpp"

namespace cuboid {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::Equal: return "Equal";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::NotEven: return "NotEven";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotOddPrime: return "NotOddPrime";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ZeroX: return "ZeroX";
        case ErrorCode::NotOnCurve: return "NotOnCurve";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string to_string(const Int& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

Int parse_int(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw Error(ErrorCode::ParseError, "expected integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw Error(ErrorCode::ParseError, "expected integer, got '" + std::string(text) + "'");
    }
    // mpz_set_str rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Int(digits, 10);
}

std::optional<std::int64_t> to_int64(const Int& n) {
    static const Int lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Int hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (n < lo || n > hi) return std::nullopt;
    return static_cast<std::int64_t>(std::stoll(n.get_str(10)));
}

}  // namespace cuboid
