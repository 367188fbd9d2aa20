#include "dlin/error.hpp"

namespace dlin {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::EmptyPrefix: return "EmptyPrefix";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

Error::Error(ErrorKind kind, const std::string& detail, std::size_t position)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail + " (at offset " +
                         std::to_string(position) + ")"),
      kind_(kind), detail_(detail), position_(position) {}

} // namespace dlin
