#include "gacfit/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "gacfit/conic_geometry.hpp"

namespace gacfit::cli {

namespace {

void dump_into(const Json& j, std::string& out)
{
    switch (j.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            out += Json(key).dump();
            out += ':';
            dump_into(value, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first)
                out += ',';
            first = false;
            dump_into(value, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float:
        out += format_number(j.get<double>());
        break;
    default:
        out += j.dump();
        break;
    }
}

Json number_or_null(double v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

} // namespace

std::string format_number(double v)
{
    if (!std::isfinite(v))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_json(const Json& j)
{
    std::string out;
    dump_into(j, out);
    return out;
}

Json fit_report(const FitResult& r)
{
    const ConicIPNS q = canonicalize(r.conic);
    const QuadraticConic m = conic_to_matrix(q);
    const ConicParams params = extract_params(q);

    Json j;
    j["ipns"] = Json::array();
    for (double c : q.coefficients())
        j["ipns"].push_back(number_or_null(c + 0.0));
    j["implicit"] = {{"A", m.a + 0.0}, {"B", m.b + 0.0}, {"C", m.c + 0.0},
                     {"D", m.d + 0.0}, {"E", m.e + 0.0}, {"F", m.f + 0.0}};
    j["kind"] = std::string(to_string(params.kind));
    j["center"] = params.center ? Json{{"x", params.center->x + 0.0}, {"y", params.center->y + 0.0}} : Json(nullptr);
    j["semi_axes"] = params.semi_axes ? Json{{"a", params.semi_axes->a}, {"b", params.semi_axes->b}} : Json(nullptr);
    j["angle_deg"] = params.angle ? number_or_null(*params.angle * 180.0 / std::numbers::pi + 0.0) : Json(nullptr);
    j["objective"] = number_or_null(r.objective);
    j["lambda"] = number_or_null(r.lambda);
    j["mode"] = std::string(to_string(r.mode));
    j["method"] = std::string(to_string(r.method));
    j["n_points"] = r.n_points;
    return j;
}

std::string text_report(const FitResult& r)
{
    const ConicIPNS q = canonicalize(r.conic);
    const QuadraticConic m = conic_to_matrix(q);
    const ConicParams params = extract_params(q);
    std::string out;
    char buf[256];
    auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        out += buf;
        out += '\n';
    };
    line("mode       %s", std::string(to_string(r.mode)).c_str());
    line("method     %s", std::string(to_string(r.method)).c_str());
    line("points     %zu", r.n_points);
    line("ipns       %.10g %.10g %.10g %.10g %.10g %.10g", q.vbar_x, q.vbar_m, q.vbar_p, q.v1, q.v2, q.vp);
    line("implicit   %.10g x^2 %+.10g xy %+.10g y^2 %+.10g x %+.10g y %+.10g", m.a, m.b, m.c, m.d, m.e, m.f);
    line("kind       %s", std::string(to_string(params.kind)).c_str());
    if (params.center)
        line("center     (%.10g, %.10g)", params.center->x + 0.0, params.center->y + 0.0);
    if (params.semi_axes)
        line("semi-axes  %.10g, %.10g", params.semi_axes->a, params.semi_axes->b);
    if (params.angle)
        line("angle      %.10g deg", *params.angle * 180.0 / std::numbers::pi + 0.0);
    line("objective  %.10g", r.objective);
    line("lambda     %.10g", r.lambda);
    return out;
}

Json error_report(const Error& e)
{
    Json j = error_report(to_string(e.code()), e.what());
    if (e.line())
        j["error"]["line"] = *e.line();
    return j;
}

Json error_report(std::string_view code, const std::string& message)
{
    return Json{{"error", {{"code", std::string(code)}, {"message", message}}}};
}

} // namespace gacfit::cli
