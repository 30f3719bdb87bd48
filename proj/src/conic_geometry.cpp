#include "gacfit/conic_geometry.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "gacfit/error.hpp"

namespace gacfit {

namespace {

// Zero tests compare a quantity with the magnitudes of the terms it was
// formed from, which keeps them invariant under both coefficient scaling and
// rescaling of the plane.
constexpr double kRelTol = 1e-10;

bool negligible(double value, double terms)
{
    return std::abs(value) <= kRelTol * terms;
}

struct Invariants {
    QuadraticConic m;
    double disc;       // 4AC − B², positive for ellipses
    bool central;      // disc distinguishable from zero
    double fc = 0.0;   // constant term after moving the centre to the origin
    bool fc_zero = false;
    Point2 center{};
};

Invariants invariants(const ConicIPNS& q)
{
    Invariants in;
    in.m = conic_to_matrix(q);
    const QuadraticConic& m = in.m;
    in.disc = 4.0 * m.a * m.c - m.b * m.b;
    in.central = !negligible(in.disc, 4.0 * std::abs(m.a * m.c) + m.b * m.b);
    if (in.central) {
        in.center = {(m.b * m.e - 2.0 * m.c * m.d) / in.disc, (m.b * m.d - 2.0 * m.a * m.e) / in.disc};
        const double tx = 0.5 * m.d * in.center.x;
        const double ty = 0.5 * m.e * in.center.y;
        in.fc = m.f + tx + ty;
        in.fc_zero = negligible(in.fc, std::abs(m.f) + std::abs(tx) + std::abs(ty));
    }
    return in;
}

double wrap_angle(double t)
{
    constexpr double pi = std::numbers::pi;
    while (t <= -pi / 2)
        t += pi;
    while (t > pi / 2)
        t -= pi;
    return t;
}

// Quadratic form of the 2×2 part along the unit direction at angle t.
double directional(const QuadraticConic& m, double t)
{
    const double c = std::cos(t);
    const double s = std::sin(t);
    return m.a * c * c + m.b * c * s + m.c * s * s;
}

Eigen::Matrix3d homogeneous(double c, double s, double dx, double dy)
{
    Eigen::Matrix3d h;
    h << c, -s, dx,
         s, c, dy,
         0, 0, 1;
    return h;
}

} // namespace

std::string_view to_string(ConicKind kind)
{
    switch (kind) {
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Circle: return "circle";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::DegeneratePair: return "degenerate-pair";
    case ConicKind::DegeneratePoint: return "degenerate-point";
    case ConicKind::DegenerateLine: return "degenerate-line";
    case ConicKind::Empty: return "empty";
    }
    return "unknown";
}

ConicKind classify(const ConicIPNS& q)
{
    const Invariants in = invariants(q);
    const QuadraticConic& m = in.m;
    if (!m.is_proper())
        return ConicKind::DegenerateLine;

    if (in.central) {
        if (in.disc > 0.0) {
            if (in.fc_zero)
                return ConicKind::DegeneratePoint;
            // Real ellipse iff the centred constant opposes the quadratic part.
            if (in.fc * (m.a + m.c) > 0.0)
                return ConicKind::Empty;
            const double scale = std::abs(m.a) + std::abs(m.c);
            if (negligible(m.a - m.c, scale) && negligible(m.b, scale))
                return ConicKind::Circle;
            return ConicKind::Ellipse;
        }
        return in.fc_zero ? ConicKind::DegeneratePair : ConicKind::Hyperbola;
    }

    // Parabolic quadratic part: 4·det(M) reduces to −(AE² − BDE + CD²).
    const double t1 = m.a * m.e * m.e;
    const double t2 = m.b * m.d * m.e;
    const double t3 = m.c * m.d * m.d;
    if (!negligible(t1 - t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)))
        return ConicKind::Parabola;

    // Parallel lines: the sign of this sum of 2×2 minors picks real, double or
    // imaginary.
    const double k1 = m.a * m.f;
    const double k2 = m.c * m.f;
    const double k3 = 0.25 * (m.d * m.d + m.e * m.e);
    const double k = k1 + k2 - k3;
    if (negligible(k, std::abs(k1) + std::abs(k2) + k3))
        return ConicKind::DegenerateLine;
    return k < 0.0 ? ConicKind::DegeneratePair : ConicKind::Empty;
}

Point2 center_of(const ConicIPNS& q)
{
    const Invariants in = invariants(q);
    if (!in.central)
        throw Error(ErrorCode::NotCentralConic, "4AC - B^2 vanishes, the conic has no centre");
    return in.center;
}

ConicParams extract_params(const ConicIPNS& q)
{
    ConicParams out;
    out.kind = classify(q);
    const Invariants in = invariants(q);
    const QuadraticConic& m = in.m;
    if (in.central)
        out.center = in.center;

    const double t0 = 0.5 * std::atan2(m.b, m.a - m.c);
    const double t1 = t0 + std::numbers::pi / 2;
    const double l0 = directional(m, t0);
    const double l1 = directional(m, t1);

    switch (out.kind) {
    case ConicKind::Ellipse:
    case ConicKind::Circle: {
        double a = std::sqrt(-in.fc / l0);
        double b = std::sqrt(-in.fc / l1);
        double t = t0;
        if (b > a) {
            std::swap(a, b);
            t = t1;
        }
        out.semi_axes = SemiAxes{a, b};
        out.angle = wrap_angle(t);
        break;
    }
    case ConicKind::Hyperbola: {
        // The transverse axis is the direction along which the curve is met.
        const bool first = -in.fc / l0 > 0.0;
        const double la = first ? l0 : l1;
        const double lb = first ? l1 : l0;
        out.semi_axes = SemiAxes{std::sqrt(-in.fc / la), std::sqrt(in.fc / lb)};
        out.angle = wrap_angle(first ? t0 : t1);
        break;
    }
    case ConicKind::Parabola:
        out.angle = wrap_angle(std::abs(l0) < std::abs(l1) ? t0 : t1);
        break;
    default:
        break;
    }
    return out;
}

double evaluate_conic(const ConicIPNS& q, const Point2& p)
{
    return conic_to_matrix(q)(p.x, p.y);
}

QuadraticConic transformed(const QuadraticConic& m, const Eigen::Matrix3d& h)
{
    const Eigen::Matrix3d inv = h.inverse();
    return QuadraticConic::from_matrix(inv.transpose() * m.matrix() * inv);
}

ConicIPNS rotated(const ConicIPNS& q, double angle)
{
    return matrix_to_conic(transformed(conic_to_matrix(q), homogeneous(std::cos(angle), std::sin(angle), 0, 0)));
}

ConicIPNS translated(const ConicIPNS& q, double dx, double dy)
{
    return matrix_to_conic(transformed(conic_to_matrix(q), homogeneous(1, 0, dx, dy)));
}

ConicIPNS scaled_plane(const ConicIPNS& q, double s)
{
    return matrix_to_conic(transformed(conic_to_matrix(q), Eigen::Vector3d(s, s, 1).asDiagonal().toDenseMatrix()));
}

ConicIPNS general_ellipse(double a, double b, double angle, const Point2& center)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorCode::NonPositiveAxis, "semi-axes must be positive");
    const QuadraticConic aligned{b * b, 0.0, a * a, 0.0, 0.0, -a * a * b * b};
    return translated(rotated(matrix_to_conic(aligned), angle), center.x, center.y);
}

} // namespace gacfit
