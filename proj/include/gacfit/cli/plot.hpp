#pragma once

#include <span>
#include <string>
#include <vector>

#include "gacfit/cli/contour.hpp"
#include "gacfit/fit_engine.hpp"

namespace gacfit::cli {

struct PlotOptions {
    int grid = 512;
    double margin = 0.15;
    int pixels = 800;
};

struct RenderedPlot {
    std::string svg;
    BoundingBox box;
    /// Traced zero set in data coordinates.
    std::vector<Polyline> curves;
};

/// Square box around the data, padded by `margin` of its span on each side.
/// Centred modes always include the origin.
BoundingBox plot_box(std::span<const Point2> points, FitMode mode, double margin);

RenderedPlot render_plot(std::span<const Point2> points, const FitResult& result, const PlotOptions& options);

} // namespace gacfit::cli
