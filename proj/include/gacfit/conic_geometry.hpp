#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "gacfit/gac_core.hpp"

namespace gacfit {

enum class ConicKind {
    Ellipse,
    Circle,
    Hyperbola,
    Parabola,
    DegeneratePair,
    DegeneratePoint,
    DegenerateLine,
    Empty,
};

std::string_view to_string(ConicKind kind);

struct SemiAxes {
    double a = 0.0;
    double b = 0.0;
};

/// Euclidean description of a conic. For ellipses `a` is the major semi-axis
/// and `a ≥ b`; for hyperbolas `a` is the transverse semi-axis, which may be
/// shorter than `b`. `angle` is the direction of the `a` axis (or of a
/// parabola's axis), in radians within (−π/2, π/2].
struct ConicParams {
    ConicKind kind = ConicKind::Empty;
    std::optional<Point2> center;
    std::optional<SemiAxes> semi_axes;
    std::optional<double> angle;
};

ConicKind classify(const ConicIPNS& q);

/// Throws Error(NotCentralConic) when 4AC − B² vanishes.
Point2 center_of(const ConicIPNS& q);

/// Never throws; fields that do not apply to the kind are left empty.
ConicParams extract_params(const ConicIPNS& q);

/// A x² + B xy + C y² + D x + E y + F at `p`, equal to the GAC inner product
/// of the embedded point with `q`.
double evaluate_conic(const ConicIPNS& q, const Point2& p);

/// The conic carried by the point map p ↦ H·p (homogeneous 3×3 H):
/// M ↦ H⁻ᵀ·M·H⁻¹.
QuadraticConic transformed(const QuadraticConic& m, const Eigen::Matrix3d& h);
ConicIPNS rotated(const ConicIPNS& q, double angle);
ConicIPNS translated(const ConicIPNS& q, double dx, double dy);
ConicIPNS scaled_plane(const ConicIPNS& q, double s);

/// Ellipse with semi-axes a (along `angle`) and b, centred at `center`.
/// Throws Error(NonPositiveAxis).
ConicIPNS general_ellipse(double a, double b, double angle, const Point2& center);

} // namespace gacfit
