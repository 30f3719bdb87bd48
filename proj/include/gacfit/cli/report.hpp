#pragma once

#include <string>

#include <json.hpp>

#include "gacfit/error.hpp"
#include "gacfit/fit_engine.hpp"

namespace gacfit::cli {

using Json = nlohmann::ordered_json;

/// %.17g; non-finite values become JSON null.
std::string format_number(double v);

/// Compact JSON with every floating value printed by format_number, so equal
/// inputs always give byte-identical text.
std::string dump_json(const Json& j);

/// Report object with keys ipns, implicit, kind, center, semi_axes,
/// angle_deg, objective, lambda, mode, method, n_points.
Json fit_report(const FitResult& r);

std::string text_report(const FitResult& r);

/// {"error": {"code": ..., "message": ..., "line": ...}}
Json error_report(const Error& e);
Json error_report(std::string_view code, const std::string& message);

} // namespace gacfit::cli
