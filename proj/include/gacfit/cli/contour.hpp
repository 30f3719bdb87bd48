#pragma once

#include <functional>
#include <vector>

#include "gacfit/gac_core.hpp"

namespace gacfit::cli {

struct BoundingBox {
    double xmin = 0.0;
    double xmax = 1.0;
    double ymin = 0.0;
    double ymax = 1.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

/// Closed polylines repeat their first vertex at the end.
using Polyline = std::vector<Point2>;

/// Zero level set of `f` by marching squares over `samples`×`samples` grid
/// nodes spanning `box`. Segments are chained into maximal polylines.
/// Saddle cells are resolved by the value at the cell centre.
std::vector<Polyline> trace_zero_set(const std::function<double(double, double)>& f, const BoundingBox& box,
                                     int samples);

/// Euclidean distance from `p` to the nearest segment of any polyline;
/// +inf when `lines` is empty.
double distance_to(const std::vector<Polyline>& lines, const Point2& p);

} // namespace gacfit::cli
