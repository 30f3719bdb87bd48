#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gacfit/dataset_io.hpp"
#include "gacfit/error.hpp"
#include "gacfit/fit_engine.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gacfit;
namespace oracle = testsupport::oracle;

namespace {

const std::vector<Point2>& table3()
{
    return builtin_table3().points;
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no gacfit::Error thrown");
    return ErrorCode::InvalidArgument;
}

void check_conic(const ConicIPNS& got, const std::array<double, 6>& want, double tol)
{
    const auto c = got.coefficients();
    for (std::size_t i = 0; i < 6; ++i) {
        INFO("coefficient " << i << ": " << c[i] << " vs " << want[i]);
        CHECK(std::abs(c[i] - want[i]) <= tol);
    }
}

struct Reference {
    FitMode mode;
    double reference_objective;
    // Frozen from an independent monomial-basis generalized eigen solve
    // (QZ on the pencil of the monomial scatter and the normalisation form).
    double objective;
    std::array<double, 6> canonical;
};

const std::array<Reference, 4> kReferences{{
    {FitMode::General,
     0.0245,
     0.024489748513030044,
     {0.038594268402959736, 0.020408706244013558, -0.19552412670332792, 1.2675988566300982, -1.2562132319787718,
      -5.587235146800162}},
    {FitMode::AxesAligned,
     0.0871,
     0.08708378899422976,
     {0.0, 0.030083822422484877, -0.2799899089222878, 1.5422496967234278, -1.4364355218800462, -6.146437828439045}},
    {FitMode::OriginCentred,
     1.0369,
     1.0369411152326178,
     {0.15142182905530616, -0.05444347178079473, 0.19207161208606735, 0.0, 0.0, -2.6031957277265407}},
    {FitMode::AxesAlignedOriginCentred,
     4.3361,
     4.336073572711458,
     {0.0, 0.029052719261823942, -0.11243952435769651, 0.0, 0.0, 4.446834890633143}},
}};

} // namespace

TEST_CASE("reference dataset objectives match the published table to four decimals")
{
    for (const Reference& ref : kReferences) {
        INFO(to_string(ref.mode));
        const FitResult r = fit(table3(), ref.mode);
        CHECK(std::abs(r.objective - ref.reference_objective) <= 5e-5);
    }
}

TEST_CASE("reference dataset fits match the frozen independent solution")
{
    for (const Reference& ref : kReferences) {
        INFO(to_string(ref.mode));
        const FitResult r = fit(table3(), ref.mode);
        CHECK(std::abs(r.objective - ref.objective) <= 1e-10);
        check_conic(canonicalize(r.conic), ref.canonical, 1e-9);
        CHECK(std::abs(r.objective - r.lambda) <= 1e-9 * std::max(1.0, r.lambda));
    }
}

TEST_CASE("the oracles agree with the frozen values")
{
    for (const Reference& ref : kReferences) {
        INFO(to_string(ref.mode));
        const oracle::Fit o = oracle::monomial_fit(table3(), ref.mode);
        CHECK(std::abs(o.objective - ref.objective) <= 1e-10);
        check_conic(canonicalize(oracle::to_ipns(o.conic)), ref.canonical, 1e-9);
    }
    for (FitMode mode : {FitMode::OriginCentred, FitMode::AxesAlignedOriginCentred}) {
        const oracle::Fit o = oracle::centred_projection_fit(table3(), mode);
        const Reference& ref = kReferences[mode == FitMode::OriginCentred ? 2 : 3];
        CHECK(std::abs(o.objective - ref.objective) <= 1e-10);
        check_conic(canonicalize(oracle::to_ipns(o.conic)), ref.canonical, 1e-9);
    }
}

TEST_CASE("all centred methods agree on the reference dataset")
{
    for (FitMode mode : {FitMode::OriginCentred, FitMode::AxesAlignedOriginCentred}) {
        INFO(to_string(mode));
        const FitResult e = fit(table3(), mode, FitMethod::Eigen);
        const FitResult d = fit(table3(), mode, FitMethod::Direct);
        const FitResult s = fit(table3(), mode, FitMethod::Symmetrize);
        CHECK(oracle::max_gap(canonicalize(e.conic), canonicalize(d.conic)) <= 1e-9);
        CHECK(oracle::max_gap(canonicalize(e.conic), canonicalize(s.conic)) <= 1e-9);
        CHECK(std::abs(e.objective - d.objective) <= 1e-12);
        CHECK(std::abs(e.objective - s.objective) <= 1e-12);
        CHECK(std::abs(d.lambda - e.lambda) <= 1e-9 * e.lambda);
        // Mirrored data doubles (or quadruples) the raw scatter sums.
        const double factor = mode == FitMode::OriginCentred ? 2.0 : 4.0;
        CHECK(s.n_scatter == factor * s.n_points);
        CHECK(std::abs(s.lambda * s.n_scatter - factor * e.lambda * e.n_scatter) <= 1e-9 * factor * e.lambda * e.n_scatter);
        REQUIRE(s.extended_objective.has_value());
        CHECK(std::abs(*s.extended_objective - s.objective) <= 1e-12);
    }
}

TEST_CASE("objectives grow as constraints are added")
{
    double prev = -1.0;
    for (const Reference& ref : kReferences) {
        const double obj = fit(table3(), ref.mode).objective;
        CHECK(obj > prev + 1e-3);
        prev = obj;
    }
}

TEST_CASE("scatter matrix of repeated points has rank one")
{
    const std::vector<Point2> pts(7, Point2{1.5, -2});
    const ScatterDecomposition d = build_scatter(pts, FitMode::General);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.Phat);
    const auto ev = es.eigenvalues();
    CHECK(ev[ev.size() - 1] > 1.0);
    for (Eigen::Index i = 0; i + 1 < ev.size(); ++i)
        CHECK(std::abs(ev[i]) <= 1e-12 * ev[ev.size() - 1]);
    CHECK(d.collinear);
}

TEST_CASE("scatter matrix of the unit cross in aligned-centred mode")
{
    const std::vector<Point2> pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const ScatterDecomposition d = build_scatter(pts, FitMode::AxesAlignedOriginCentred);
    // Rows B̂·P̂ are (−½(x²−y²), −½(x²+y²), −1) = (∓½, −½, −1).
    Eigen::Matrix3d want;
    want << 0.25, 0, 0, 0, 0.25, 0.5, 0, 0.5, 1;
    CHECK((d.Phat - want).norm() <= 1e-15);
    CHECK(d.P0.rows() == 1);
    CHECK(d.P1.cols() == 2);
    CHECK(d.Pc.rows() == 2);

    const Eigen::MatrixXd pcon = build_operator(d);
    Eigen::Matrix2d want_op;
    want_op << -0.5, -1, -0.25, -0.5;
    CHECK((pcon - want_op).norm() <= 1e-15);

    const FitResult r = fit(pts, FitMode::AxesAlignedOriginCentred);
    CHECK(r.objective <= 1e-30);
    check_conic(canonicalize(r.conic), {0, 0, 1, 0, 0, -0.5}, 1e-15);
}

TEST_CASE("block shapes by mode")
{
    const auto& pts = table3();
    struct Shape {
        FitMode mode;
        int p0, p1c, pc;
    };
    for (const Shape s : {Shape{FitMode::General, 2, 4, 4}, Shape{FitMode::AxesAligned, 1, 4, 4},
                          Shape{FitMode::OriginCentred, 2, 2, 2}, Shape{FitMode::AxesAlignedOriginCentred, 1, 2, 2}}) {
        const ScatterDecomposition d = build_scatter(pts, s.mode);
        CHECK(d.P0.rows() == s.p0);
        CHECK(d.P0.cols() == s.p0);
        CHECK(d.P1.rows() == s.p0);
        CHECK(d.P1.cols() == s.p1c);
        CHECK(d.Pc.rows() == s.pc);
        CHECK(d.Bc.rows() == s.pc);
        CHECK(d.Phat.isApprox(d.Phat.transpose(), 0.0));
        CHECK(build_operator(d).rows() == s.pc);
    }
}

TEST_CASE("operator with a vanishing cross block is Bc times Pc")
{
    ScatterDecomposition d = build_scatter(table3(), FitMode::OriginCentred);
    d.P1.setZero();
    CHECK((build_operator(d) - d.Bc * d.Pc).norm() == 0.0);
}

TEST_CASE("symmetrised operator entries double on the raw sums")
{
    const auto& pts = table3();
    const ScatterDecomposition base = build_scatter(pts, FitMode::OriginCentred);
    const std::vector<Point2> ext = symmetrize(pts, FitMode::OriginCentred);
    const ScatterDecomposition sym = build_scatter(ext, FitMode::General);
    // In the mirrored set the odd moments vanish, so the (v̄⁺, v⁺) part of the
    // general operator decouples and reproduces the centred one.
    const Eigen::MatrixXd op_base = build_operator(base) * static_cast<double>(base.n_points);
    const Eigen::MatrixXd op_sym = build_operator(sym) * static_cast<double>(sym.n_points);
    Eigen::Matrix2d corners;
    corners << op_sym(0, 0), op_sym(0, 3), op_sym(3, 0), op_sym(3, 3);
    CHECK((corners - 2.0 * op_base).norm() <= 1e-10 * op_base.norm());
    CHECK(std::abs(op_sym(0, 1)) <= 1e-10 * op_base.norm());
    CHECK(std::abs(op_sym(1, 0)) <= 1e-10 * op_base.norm());
}

TEST_CASE("direct method on a symmetric operator")
{
    // P̂ for which the centred operator is [[a, r], [r, a]] with r = s.
    ScatterDecomposition d;
    d.mode = FitMode::AxesAlignedOriginCentred;
    d.Phat = Eigen::Matrix3d::Identity();
    d.P0 = Eigen::MatrixXd::Identity(1, 1);
    d.P1 = Eigen::MatrixXd::Zero(1, 2);
    d.Pc = Eigen::Matrix2d::Identity();
    d.Bc = BilinearForm::cra0();
    d.n_points = 10;
    const FitResult r = solve_direct(d);
    CHECK(r.conic.vbar_p == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.conic.vp == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(-2.0 * r.conic.vbar_p * r.conic.vp == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigen path reports infeasible spectra")
{
    ScatterDecomposition d;
    d.mode = FitMode::AxesAlignedOriginCentred;
    d.Phat = Eigen::Matrix3d::Zero();
    d.Phat(0, 0) = 1.0;
    d.Phat(1, 1) = 1.0;
    d.P0 = Eigen::MatrixXd::Identity(1, 1);
    d.P1 = Eigen::MatrixXd::Zero(1, 2);
    d.Pc = Eigen::Matrix2d::Zero();
    d.Pc(0, 0) = 1.0;
    d.Bc = BilinearForm::cra0();
    d.n_points = 3;
    // Operator [[0, 0], [−1, 0]]: a double zero eigenvalue with κ = 0.
    CHECK(code_of([&] { solve_eigen(d); }) == ErrorCode::NoFeasibleEigenvalue);
}

TEST_CASE("symmetrize appends mirror images in order")
{
    const std::vector<Point2> one{{1, 2}};
    CHECK(symmetrize(one, FitMode::OriginCentred) == std::vector<Point2>{{1, 2}, {-1, -2}});
    CHECK(symmetrize(one, FitMode::AxesAlignedOriginCentred) == std::vector<Point2>{{1, 2}, {-1, -2}, {1, -2}, {-1, 2}});
    CHECK(symmetrize(table3(), FitMode::OriginCentred).size() == 20);
    CHECK(code_of([&] { symmetrize(one, FitMode::General); }) == ErrorCode::MethodModeMismatch);
}

TEST_CASE("fit argument checks")
{
    const auto& pts = table3();
    CHECK(code_of([&] { fit(pts, FitMode::General, FitMethod::Direct); }) == ErrorCode::MethodModeMismatch);
    CHECK(code_of([&] { fit(pts, FitMode::AxesAligned, FitMethod::Symmetrize); }) == ErrorCode::MethodModeMismatch);
    const std::vector<Point2> four(pts.begin(), pts.begin() + 4);
    CHECK(code_of([&] { fit(four, FitMode::General); }) == ErrorCode::TooFewPoints);
    CHECK_NOTHROW(fit(four, FitMode::AxesAligned));
    const std::vector<Point2> dup(12, Point2{1, 1});
    CHECK(code_of([&] { fit(dup, FitMode::AxesAlignedOriginCentred, FitMethod::Symmetrize); }) ==
          ErrorCode::TooFewPoints);
    std::vector<Point2> bad = pts;
    bad[3].x = std::nan("");
    CHECK(code_of([&] { fit(bad, FitMode::General); }) == ErrorCode::NonFiniteInput);
    CHECK(code_of([&] { build_scatter(bad, FitMode::General); }) == ErrorCode::NonFiniteInput);
    CHECK(code_of([&] { build_scatter(four, FitMode::General); }) == ErrorCode::TooFewPoints);
}

TEST_CASE("degenerate datasets")
{
    std::vector<Point2> line, diag;
    for (int i = 0; i < 12; ++i) {
        line.push_back({0.5 * i - 1.0, 0.25 * i + 3.0});
        diag.push_back({0.7 * i - 3.0, (i % 2 ? 1 : -1) * (0.7 * i - 3.0)});
    }
    CHECK(code_of([&] { fit(line, FitMode::General); }) == ErrorCode::SingularP0);
    CHECK(code_of([&] { fit(line, FitMode::OriginCentred); }) == ErrorCode::SingularP0);
    CHECK(code_of([&] { fit(diag, FitMode::AxesAligned); }) == ErrorCode::SingularP0);
    CHECK(code_of([&] { fit(diag, FitMode::AxesAlignedOriginCentred); }) == ErrorCode::SingularP0);

    // Points on x² − y² = 3: the v⁺ direction is absorbed by v̄⁻.
    std::vector<Point2> rect;
    for (int i = 0; i < 10; ++i) {
        const double u = -1.2 + 0.27 * i;
        rect.push_back({(i % 2 ? 1 : -1) * std::sqrt(3.0) * std::cosh(u), std::sqrt(3.0) * std::sinh(u)});
    }
    CHECK(code_of([&] { fit(rect, FitMode::AxesAlignedOriginCentred, FitMethod::Direct); }) ==
          ErrorCode::DegenerateDirect);
}

TEST_CASE("exact recovery of an aligned-centred ellipse")
{
    std::vector<Point2> pts;
    for (int i = 0; i < 24; ++i) {
        const double t = 0.26 * i;
        pts.push_back({std::cos(t), 2.0 * std::sin(t)});
    }
    for (FitMethod m : {FitMethod::Eigen, FitMethod::Direct, FitMethod::Symmetrize}) {
        const FitResult r = fit(pts, FitMode::AxesAlignedOriginCentred, m);
        CHECK(r.objective <= 1e-18);
        const ConicIPNS want = canonicalize(ellipse_ipns(2, 1));
        CHECK(oracle::max_gap(canonicalize(r.conic), want) <= 1e-9);
    }
}

TEST_CASE("objective evaluation")
{
    CHECK(code_of([] { evaluate_objective(ellipse_ipns(1, 1), std::vector<Point2>{}); }) == ErrorCode::EmptyPointSet);
    const std::vector<Point2> on{{0.5, 0}, {0, 0.5}, {-0.5, 0}};
    CHECK(evaluate_objective(ellipse_ipns(0.5, 0.5), on) == 0.0);
    const std::vector<Point2> off{{1, 0}};
    // Unit ellipse vector (0,0,1,0,0,−½) at (1,0): −½ + ½ = 0; at (2,0): −2 + ½.
    CHECK(evaluate_objective({0, 0, 1, 0, 0, -0.5}, off) == 0.0);
    CHECK(evaluate_objective({0, 0, 1, 0, 0, -0.5}, std::vector<Point2>{{2, 0}}) == 2.25);
}

TEST_CASE("canonical representative")
{
    const ConicIPNS q{0.2, -1, 3, 0.5, -0.25, -4};
    CHECK(oracle::max_gap(canonicalize(q), canonicalize(q.scaled(-3))) <= 1e-15);
    const ConicIPNS unit = canonicalize(ellipse_ipns(1, 1));
    check_conic(unit, {0, 0, 1, 0, 0, -0.5}, 0.0);
    CHECK(canonicalize(unit) == unit);
    CHECK(std::abs(constraint_value(canonicalize(q)) - 1.0) <= 1e-15);
    // κ ≤ 0: unit Euclidean norm, first coefficient positive.
    const ConicIPNS neg = canonicalize({0, -2, 0, 0, 0, 0});
    check_conic(neg, {0, 1, 0, 0, 0, 0}, 0.0);
}

TEST_CASE("mode tables")
{
    CHECK(min_points(FitMode::General) == 5);
    CHECK(min_points(FitMode::AxesAligned) == 4);
    CHECK(min_points(FitMode::OriginCentred) == 3);
    CHECK(min_points(FitMode::AxesAlignedOriginCentred) == 2);
    CHECK(is_admissible(FitMode::General, FitMethod::Eigen));
    CHECK_FALSE(is_admissible(FitMode::AxesAligned, FitMethod::Direct));
    CHECK(is_admissible(FitMode::OriginCentred, FitMethod::Symmetrize));
}
