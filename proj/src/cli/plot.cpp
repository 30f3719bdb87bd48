#include "gacfit/cli/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "gacfit/conic_geometry.hpp"
#include "gacfit/error.hpp"

namespace gacfit::cli {

namespace {

struct Viewport {
    BoundingBox box;
    double px;

    double sx(double x) const { return (x - box.xmin) / box.width() * px; }
    double sy(double y) const { return (box.ymax - y) / box.height() * px; }
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

} // namespace

BoundingBox plot_box(std::span<const Point2> points, FitMode mode, double margin)
{
    if (points.empty())
        throw Error(ErrorCode::EmptyPointSet, "nothing to plot");
    if (!(margin >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "plot margin must be non-negative");
    BoundingBox b{points[0].x, points[0].x, points[0].y, points[0].y};
    for (const Point2& p : points) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    if (mode == FitMode::OriginCentred || mode == FitMode::AxesAlignedOriginCentred) {
        b.xmin = std::min(b.xmin, 0.0);
        b.xmax = std::max(b.xmax, 0.0);
        b.ymin = std::min(b.ymin, 0.0);
        b.ymax = std::max(b.ymax, 0.0);
    }
    double span = std::max(b.width(), b.height());
    if (!(span > 0.0))
        span = 1.0;
    const double half = 0.5 * span * (1.0 + 2.0 * margin);
    const double cx = 0.5 * (b.xmin + b.xmax);
    const double cy = 0.5 * (b.ymin + b.ymax);
    return {cx - half, cx + half, cy - half, cy + half};
}

RenderedPlot render_plot(std::span<const Point2> points, const FitResult& result, const PlotOptions& options)
{
    RenderedPlot out;
    out.box = plot_box(points, result.mode, options.margin);
    const ConicIPNS q = canonicalize(result.conic);
    out.curves = trace_zero_set([&](double x, double y) { return evaluate_conic(q, {x, y}); }, out.box, options.grid);

    const Viewport vp{out.box, static_cast<double>(options.pixels)};
    const double r = options.pixels / 160.0;
    std::string& s = out.svg;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
             "viewBox=\"0 0 %d %d\">\n",
             options.pixels, options.pixels + 40, options.pixels, options.pixels + 40);
    s += fmt("<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n", options.pixels, options.pixels + 40);

    s += "<g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    if (out.box.ymin <= 0.0 && out.box.ymax >= 0.0)
        s += fmt("<line x1=\"0\" y1=\"%.3f\" x2=\"%d\" y2=\"%.3f\"/>\n", vp.sy(0), options.pixels, vp.sy(0));
    if (out.box.xmin <= 0.0 && out.box.xmax >= 0.0)
        s += fmt("<line x1=\"%.3f\" y1=\"0\" x2=\"%.3f\" y2=\"%d\"/>\n", vp.sx(0), vp.sx(0), options.pixels);
    s += "</g>\n";

    s += "<g id=\"conic\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\">\n";
    for (const Polyline& line : out.curves) {
        s += "<polyline points=\"";
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (k)
                s += ' ';
            s += fmt("%.3f,%.3f", vp.sx(line[k].x), vp.sy(line[k].y));
        }
        s += "\"/>\n";
    }
    s += "</g>\n";

    s += "<g id=\"points\" fill=\"#c0392b\">\n";
    for (const Point2& p : points)
        s += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.2f\"/>\n", vp.sx(p.x), vp.sy(p.y), r);
    s += "</g>\n";

    const ConicParams params = extract_params(q);
    if (params.center) {
        const double cx = vp.sx(params.center->x);
        const double cy = vp.sy(params.center->y);
        s += fmt("<g id=\"center\" stroke=\"#1f4e9c\" stroke-width=\"2\">"
                 "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>"
                 "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/></g>\n",
                 cx - 2 * r, cy, cx + 2 * r, cy, cx, cy - 2 * r, cx, cy + 2 * r);
    }

    const std::string mode(to_string(result.mode));
    const std::string method(to_string(result.method));
    s += fmt("<text x=\"10\" y=\"%d\" font-family=\"sans-serif\" font-size=\"16\">%s/%s, objective=%.6g</text>\n",
             options.pixels + 26, mode.c_str(), method.c_str(), result.objective);
    s += "</svg>\n";
    return out;
}

} // namespace gacfit::cli
