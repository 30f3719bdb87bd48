#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gacfit {

enum class ErrorCode {
    DimensionMismatch,
    NonPositiveAxis,
    InvalidConic,
    TooFewPoints,
    NonFiniteInput,
    EmptyPointSet,
    SingularP0,
    NoFeasibleEigenvalue,
    DegenerateDirect,
    MethodModeMismatch,
    ZeroPatternViolation,
    NotCentralConic,
    MalformedLine,
    NonFiniteValue,
    EmptyDataset,
    IoError,
    InvalidArgument,
};

/// Stable identifier used in machine-readable error objects.
std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. Parse errors carry the
/// 1-based line number of the offending input line.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(message), code_(code), line_(line)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

} // namespace gacfit
