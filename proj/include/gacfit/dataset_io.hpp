#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gacfit/gac_core.hpp"

namespace gacfit {

inline constexpr std::string_view kBuiltinTable3 = "builtin:table3";

struct Dataset {
    std::vector<Point2> points;
    std::string label;
    /// File path, or "builtin:table3".
    std::string source;
};

/// Parses `x,y` rows. Blank lines and lines starting with `#` are skipped, as
/// is a single `x,y` header before the first data row. Whitespace around
/// fields is ignored. Throws MalformedLine, NonFiniteValue (both with the
/// 1-based line number) and EmptyDataset.
Dataset parse_csv(std::string_view text, std::string source = "<memory>");

/// Header `x,y` followed by one row per point with 17 significant digits.
std::string serialize_csv(const Dataset& ds);

/// The ten-point reference dataset.
const Dataset& builtin_table3();

/// Reads a CSV file, or returns the builtin dataset for "builtin:table3".
/// Throws IoError plus every parse_csv error.
Dataset load_dataset(const std::string& source);

} // namespace gacfit
