#include "gacfit/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gacfit/error.hpp"

namespace gacfit {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\v\f");
    return s.substr(first, last - first + 1);
}

enum class FieldStatus { Ok, Malformed, NonFinite };

FieldStatus parse_field(std::string_view s, double& out)
{
    s = trim(s);
    if (s.empty())
        return FieldStatus::Malformed;
    // from_chars rejects a leading '+', which hand-written files do contain.
    if (s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ptr != s.data() + s.size())
        return FieldStatus::Malformed;
    if (ec == std::errc::result_out_of_range)
        return FieldStatus::NonFinite;
    if (ec != std::errc())
        return FieldStatus::Malformed;
    return std::isfinite(out) ? FieldStatus::Ok : FieldStatus::NonFinite;
}

bool is_header(std::string_view line)
{
    const auto comma = line.find(',');
    return comma != std::string_view::npos && trim(line.substr(0, comma)) == "x" &&
           trim(line.substr(comma + 1)) == "y";
}

} // namespace

Dataset parse_csv(std::string_view text, std::string source)
{
    Dataset ds;
    ds.source = std::move(source);
    ds.label = ds.source;
    bool seen_content = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (!seen_content) {
            seen_content = true;
            if (is_header(line))
                continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorCode::MalformedLine, "expected two comma-separated values", line_no);
        Point2 p;
        const FieldStatus sx = parse_field(line.substr(0, comma), p.x);
        const FieldStatus sy = parse_field(line.substr(comma + 1), p.y);
        if (sx == FieldStatus::Malformed || sy == FieldStatus::Malformed)
            throw Error(ErrorCode::MalformedLine, "expected two comma-separated values", line_no);
        if (sx == FieldStatus::NonFinite || sy == FieldStatus::NonFinite)
            throw Error(ErrorCode::NonFiniteValue, "coordinates must be finite", line_no);
        ds.points.push_back(p);
    }
    if (ds.points.empty())
        throw Error(ErrorCode::EmptyDataset, "no data rows in " + ds.source);
    return ds;
}

std::string serialize_csv(const Dataset& ds)
{
    std::string out = "x,y\n";
    char buf[64];
    for (const Point2& p : ds.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

const Dataset& builtin_table3()
{
    static const Dataset ds{
        {{-3, 3}, {-3, 4}, {-2, 6}, {-3, 7}, {-6, 8}, {-7, 8}, {-9, 7}, {-10, 4}, {-9, 2}, {-7, 1}},
        "table3",
        std::string(kBuiltinTable3),
    };
    return ds;
}

Dataset load_dataset(const std::string& source)
{
    if (source == kBuiltinTable3)
        return builtin_table3();
    std::ifstream in(source, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error(ErrorCode::IoError, "cannot read " + source);
    Dataset ds = parse_csv(buf.str(), source);
    ds.label = std::filesystem::path(source).stem().string();
    return ds;
}

} // namespace gacfit
