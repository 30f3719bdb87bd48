#include "gacfit/gac_core.hpp"

#include <array>
#include <string>

#include "gacfit/error.hpp"

namespace gacfit {

namespace {

constexpr std::array<int, 6> kGeneralConic{0, 1, 2, 3, 4, 5};
constexpr std::array<int, 6> kGeneralPoint{2, 3, 4, 5, 6, 7};
constexpr std::array<int, 5> kAlignedConic{1, 2, 3, 4, 5};
constexpr std::array<int, 5> kAlignedPoint{2, 3, 4, 5, 6};
constexpr std::array<int, 4> kCentredConic{0, 1, 2, 5};
constexpr std::array<int, 4> kCentredPoint{2, 5, 6, 7};
constexpr std::array<int, 3> kBothConic{1, 2, 5};
constexpr std::array<int, 3> kBothPoint{2, 5, 6};

const ModeLayout kLayouts[] = {
    {kGeneralConic, kGeneralPoint, 2},
    {kAlignedConic, kAlignedPoint, 1},
    {kCentredConic, kCentredPoint, 2},
    {kBothConic, kBothPoint, 1},
};

GacMatrix make_full_form()
{
    GacMatrix b = GacMatrix::Zero();
    for (int i = 0; i < 3; ++i) {
        b(i, 7 - i) = -1.0;
        b(7 - i, i) = -1.0;
    }
    b(3, 3) = 1.0;
    b(4, 4) = 1.0;
    return b;
}

Eigen::MatrixXd submatrix(std::span<const int> rows, std::span<const int> cols)
{
    const GacMatrix& b = BilinearForm::full();
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b(rows[i], cols[j]);
    return out;
}

} // namespace

bool ConicIPNS::is_proper() const
{
    return vbar_x != 0.0 || vbar_m != 0.0 || vbar_p != 0.0 || v1 != 0.0 || v2 != 0.0;
}

GacVector ConicIPNS::to_gac() const
{
    GacVector v;
    v << vbar_x, vbar_m, vbar_p, v1, v2, vp, 0.0, 0.0;
    return v;
}

ConicIPNS ConicIPNS::from_gac(const GacVector& v)
{
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

Eigen::Matrix3d QuadraticConic::matrix() const
{
    Eigen::Matrix3d m;
    m << a, b / 2, d / 2,
         b / 2, c, e / 2,
         d / 2, e / 2, f;
    return m;
}

QuadraticConic QuadraticConic::from_matrix(const Eigen::Matrix3d& m)
{
    // Off-diagonal pairs are averaged so a slightly asymmetric input still maps
    // to the conic of its symmetric part.
    return {m(0, 0), m(0, 1) + m(1, 0), m(1, 1), m(0, 2) + m(2, 0), m(1, 2) + m(2, 1), m(2, 2)};
}

const ModeLayout& layout(FitMode mode)
{
    return kLayouts[static_cast<int>(mode)];
}

const GacMatrix& BilinearForm::full()
{
    static const GacMatrix b = make_full_form();
    return b;
}

Eigen::MatrixXd BilinearForm::reduced(FitMode mode)
{
    const ModeLayout& l = layout(mode);
    return submatrix(l.conic_slots, l.point_slots);
}

Eigen::Matrix4d BilinearForm::cra()
{
    constexpr std::array<int, 4> s{2, 3, 4, 5};
    return submatrix(s, s);
}

Eigen::Matrix2d BilinearForm::cra0()
{
    constexpr std::array<int, 2> s{2, 5};
    return submatrix(s, s);
}

Eigen::MatrixXd BilinearForm::constraint(FitMode mode)
{
    const auto s = layout(mode).constrained_slots();
    return submatrix(s, s);
}

GacPoint embed_point(const Point2& p)
{
    const double x = p.x;
    const double y = p.y;
    GacPoint g;
    g.coords << 0.0, 0.0, 1.0, x, y, 0.5 * (x * x + y * y), 0.5 * (x * x - y * y), x * y;
    return g;
}

Eigen::VectorXd reduce_point(const GacPoint& p, FitMode mode)
{
    const auto slots = layout(mode).point_slots;
    Eigen::VectorXd out(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = p.coords[slots[i]];
    return out;
}

Eigen::VectorXd reduce_conic(const ConicIPNS& q, FitMode mode)
{
    const GacVector full = q.to_gac();
    const auto slots = layout(mode).conic_slots;
    Eigen::VectorXd out(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = full[slots[i]];
    return out;
}

ConicIPNS expand_conic(const Eigen::VectorXd& reduced, FitMode mode)
{
    const auto slots = layout(mode).conic_slots;
    if (reduced.size() != static_cast<Eigen::Index>(slots.size()))
        throw Error(ErrorCode::DimensionMismatch,
                    "reduced conic has " + std::to_string(reduced.size()) + " entries, mode needs " +
                        std::to_string(slots.size()));
    GacVector full = GacVector::Zero();
    for (std::size_t i = 0; i < slots.size(); ++i)
        full[slots[i]] = reduced[static_cast<Eigen::Index>(i)];
    return ConicIPNS::from_gac(full);
}

double inner_product(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Eigen::MatrixXd& form)
{
    if (form.rows() != u.size() || form.cols() != v.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "inner product of sizes " + std::to_string(u.size()) + " and " + std::to_string(v.size()) +
                        " under a " + std::to_string(form.rows()) + "x" + std::to_string(form.cols()) + " form");
    return u.dot(form * v);
}

double inner_product(const GacVector& u, const GacVector& v)
{
    return u.dot(BilinearForm::full() * v);
}

QuadraticConic conic_to_matrix(const ConicIPNS& q)
{
    return {-0.5 * (q.vbar_p + q.vbar_m), -q.vbar_x, -0.5 * (q.vbar_p - q.vbar_m), q.v1, q.v2, -q.vp};
}

ConicIPNS matrix_to_conic(const QuadraticConic& m)
{
    // A + C = −v̄⁺ and A − C = −v̄⁻.
    return {-m.b, m.c - m.a, -(m.a + m.c), m.d, m.e, -m.f};
}

ConicIPNS ellipse_ipns(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorCode::NonPositiveAxis, "semi-axes must be positive");
    const double a2 = a * a;
    const double b2 = b * b;
    return {0.0, a2 - b2, a2 + b2, 0.0, 0.0, -a2 * b2};
}

} // namespace gacfit
