#include "gacfit/error.hpp"

namespace gacfit {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPositiveAxis: return "NonPositiveAxis";
    case ErrorCode::InvalidConic: return "InvalidConic";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::SingularP0: return "SingularP0";
    case ErrorCode::NoFeasibleEigenvalue: return "NoFeasibleEigenvalue";
    case ErrorCode::DegenerateDirect: return "DegenerateDirect";
    case ErrorCode::MethodModeMismatch: return "MethodModeMismatch";
    case ErrorCode::ZeroPatternViolation: return "ZeroPatternViolation";
    case ErrorCode::NotCentralConic: return "NotCentralConic";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace gacfit
