#ifndef DLIN_ERROR_HPP
#define DLIN_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlin {

enum class ErrorKind {
    ZeroDenominator,
    DivisionByZero,
    FieldMismatch,
    EmptyPrefix,
    PrefixTooShort,
    NotInvertible,
    NotMonic,
    ZeroPolynomial,
    ArityMismatch,
    SyntaxError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the engine. `what()` is "<ErrorName>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);
    Error(ErrorKind kind, const std::string& detail, std::size_t position);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    const std::string& detail() const noexcept { return detail_; }
    /// Byte offset into the parsed text, for SyntaxError.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::string detail_;
    std::optional<std::size_t> position_;
};

} // namespace dlin

#endif
