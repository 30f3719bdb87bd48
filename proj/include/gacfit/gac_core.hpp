#pragma once

#include <array>
#include <span>

#include <Eigen/Core>

namespace gacfit {

/// A sample point of the plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Geometric constraint imposed on a fitted conic.
enum class FitMode {
    General,                  ///< no constraint, 5 degrees of freedom
    AxesAligned,              ///< principal axes parallel to x/y, 4 d.f.
    OriginCentred,            ///< centre at the origin, 3 d.f.
    AxesAlignedOriginCentred, ///< both of the above, 2 d.f.
};

using GacVector = Eigen::Matrix<double, 8, 1>;
using GacMatrix = Eigen::Matrix<double, 8, 8>;

// Coefficient slots of a GAC 1-vector, in column order
// (n̄×, n̄−, n̄+, e1, e2, n+, n−, n×).
namespace slot {
inline constexpr int nbar_x = 0;
inline constexpr int nbar_m = 1;
inline constexpr int nbar_p = 2;
inline constexpr int e1 = 3;
inline constexpr int e2 = 4;
inline constexpr int n_p = 5;
inline constexpr int n_m = 6;
inline constexpr int n_x = 7;
} // namespace slot

/// An embedded point: (0, 0, 1, x, y, ½(x²+y²), ½(x²−y²), xy).
struct GacPoint {
    GacVector coords = GacVector::Zero();

    double x() const { return coords[slot::e1]; }
    double y() const { return coords[slot::e2]; }
};

/// IPNS conic vector (v̄×, v̄−, v̄+, v¹, v², v+). Homogeneous: any nonzero
/// multiple denotes the same conic. Not normalised on construction.
struct ConicIPNS {
    double vbar_x = 0.0;
    double vbar_m = 0.0;
    double vbar_p = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
    double vp = 0.0;

    /// At least one of the first five coefficients is nonzero.
    bool is_proper() const;

    std::array<double, 6> coefficients() const { return {vbar_x, vbar_m, vbar_p, v1, v2, vp}; }
    static ConicIPNS from_coefficients(const std::array<double, 6>& c)
    {
        return {c[0], c[1], c[2], c[3], c[4], c[5]};
    }

    /// Full 8-slot layout with the two trailing n−, n× slots zero.
    GacVector to_gac() const;
    static ConicIPNS from_gac(const GacVector& v);

    ConicIPNS scaled(double s) const { return {s * vbar_x, s * vbar_m, s * vbar_p, s * v1, s * v2, s * vp}; }

    friend bool operator==(const ConicIPNS&, const ConicIPNS&) = default;
};

/// Implicit conic a x² + b xy + c y² + d x + e y + f = 0.
struct QuadraticConic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;

    /// At least one of a, b, c is nonzero.
    bool is_proper() const { return a != 0.0 || b != 0.0 || c != 0.0; }

    /// Symmetric matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]].
    Eigen::Matrix3d matrix() const;
    static QuadraticConic from_matrix(const Eigen::Matrix3d& m);

    double operator()(double x, double y) const { return a * x * x + b * x * y + c * y * y + d * x + e * y + f; }

    friend bool operator==(const QuadraticConic&, const QuadraticConic&) = default;
};

/// Slot bookkeeping of one fit mode. `conic_slots` lists the GAC slots of the
/// reduced conic vector; its first `free_count` entries form the block w that
/// is eliminated through P0, the rest form the constrained vector v.
/// `point_slots` lists the GAC slots of the reduced point vector.
struct ModeLayout {
    std::span<const int> conic_slots;
    std::span<const int> point_slots;
    int free_count;

    int size() const { return static_cast<int>(conic_slots.size()); }
    std::span<const int> constrained_slots() const { return conic_slots.subspan(free_count); }
};

const ModeLayout& layout(FitMode mode);

/// The GAC bilinear form and its sub-blocks.
struct BilinearForm {
    /// 8×8 form of Cl(5,3) in the column order above.
    static const GacMatrix& full();
    /// Reduced form B̂ of a mode: rows are the mode's conic slots, columns its
    /// point slots (6×6, 5×5, 4×4, 3×3).
    static Eigen::MatrixXd reduced(FitMode mode);
    /// CRA block B_c on (v̄+, v¹, v², v+).
    static Eigen::Matrix4d cra();
    /// B_c⁰ on (v̄+, v+).
    static Eigen::Matrix2d cra0();
    /// The constraint block matching a mode: B_c or B_c⁰.
    static Eigen::MatrixXd constraint(FitMode mode);
};

GacPoint embed_point(const Point2& p);

/// The reduced point vector P̂ of a mode (6, 5, 4 or 3 entries).
Eigen::VectorXd reduce_point(const GacPoint& p, FitMode mode);

/// Reduced conic vector Q̂ of a mode, and its inverse. `expand_conic` fills the
/// mode's structurally-zero slots with exact zeros.
Eigen::VectorXd reduce_conic(const ConicIPNS& q, FitMode mode);
ConicIPNS expand_conic(const Eigen::VectorXd& reduced, FitMode mode);

/// uᵀ·form·v. Throws Error(DimensionMismatch) on incompatible shapes.
double inner_product(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Eigen::MatrixXd& form);

/// Full 8-dimensional inner product under BilinearForm::full().
double inner_product(const GacVector& u, const GacVector& v);

/// 𝒜 = −½(v̄⁺+v̄⁻), ℬ = −v̄^×, 𝒞 = −½(v̄⁺−v̄⁻), 𝒟 = v¹, ℰ = v², ℱ = −v⁺.
QuadraticConic conic_to_matrix(const ConicIPNS& q);
ConicIPNS matrix_to_conic(const QuadraticConic& m);

/// Axes-aligned origin-centred ellipse (0, a²−b², a²+b², 0, 0, −a²b²).
///
/// This is the vector a²x² + b²y² = a²b², i.e. the semi-axis `a` lies along
/// the y axis and `b` along the x axis. Throws Error(NonPositiveAxis) unless
/// a > 0 and b > 0.
ConicIPNS ellipse_ipns(double a, double b);

} // namespace gacfit
