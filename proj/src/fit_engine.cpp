#include "gacfit/fit_engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gacfit/error.hpp"

namespace gacfit {

namespace {

constexpr double kSingularRcond = 1e-12;
constexpr double kCollinearRatio = 1e-12;
constexpr double kImagTol = 1e-9;
constexpr double kPositiveTol = 1e-12;
constexpr double kKappaTol = 1e-12;
constexpr double kDirectZeroTol = 1e-12;
constexpr double kClampTol = 1e-9;

bool is_centred(FitMode mode)
{
    return mode == FitMode::OriginCentred || mode == FitMode::AxesAlignedOriginCentred;
}

bool all_finite(std::span<const Point2> points)
{
    return std::all_of(points.begin(), points.end(),
                       [](const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); });
}

std::size_t count_distinct(std::span<const Point2> points)
{
    std::vector<Point2> sorted(points.begin(), points.end());
    auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
    std::sort(sorted.begin(), sorted.end(), less);
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool points_collinear(std::span<const Point2> points)
{
    Eigen::MatrixX2d centred(points.size(), 2);
    double mx = 0.0, my = 0.0;
    for (const Point2& p : points) {
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        centred(static_cast<Eigen::Index>(i), 0) = points[i].x - mx;
        centred(static_cast<Eigen::Index>(i), 1) = points[i].y - my;
    }
    const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::MatrixX2d>(centred).singularValues();
    return sv[0] == 0.0 || sv[1] <= kCollinearRatio * sv[0];
}

std::string singular_reason(FitMode mode)
{
    switch (mode) {
    case FitMode::General:
    case FitMode::OriginCentred:
        return "all points lie on lines through the origin";
    case FitMode::AxesAligned:
    case FitMode::AxesAlignedOriginCentred:
        return "all points lie on the double line x^2 - y^2 = 0";
    }
    return {};
}

// w = −P0⁻¹·P1·v, validated by build_operator beforehand.
Eigen::VectorXd eliminated_block(const ScatterDecomposition& d, const Eigen::VectorXd& v)
{
    return -d.P0.ldlt().solve(d.P1 * v);
}

ConicIPNS assemble(const ScatterDecomposition& d, const Eigen::VectorXd& v)
{
    Eigen::VectorXd full(d.Phat.rows());
    full << eliminated_block(d, v), v;
    return expand_conic(full, d.mode);
}

double coefficient_norm(const ConicIPNS& q)
{
    double sumsq = 0.0;
    for (double c : q.coefficients())
        sumsq += c * c;
    return std::sqrt(sumsq);
}

double scatter_objective(const ScatterDecomposition& d, const ConicIPNS& q)
{
    const Eigen::VectorXd r = reduce_conic(q, d.mode);
    return r.dot(d.Phat * r);
}

} // namespace

int min_points(FitMode mode)
{
    return degrees_of_freedom(mode);
}

int degrees_of_freedom(FitMode mode)
{
    switch (mode) {
    case FitMode::General: return 5;
    case FitMode::AxesAligned: return 4;
    case FitMode::OriginCentred: return 3;
    case FitMode::AxesAlignedOriginCentred: return 2;
    }
    return 5;
}

bool is_admissible(FitMode mode, FitMethod method)
{
    return method == FitMethod::Eigen || is_centred(mode);
}

std::string_view to_string(FitMode mode)
{
    switch (mode) {
    case FitMode::General: return "general";
    case FitMode::AxesAligned: return "aligned";
    case FitMode::OriginCentred: return "centered";
    case FitMode::AxesAlignedOriginCentred: return "aligned-centered";
    }
    return "unknown";
}

std::string_view to_string(FitMethod method)
{
    switch (method) {
    case FitMethod::Eigen: return "eig";
    case FitMethod::Direct: return "direct";
    case FitMethod::Symmetrize: return "sym";
    }
    return "unknown";
}

ScatterDecomposition build_scatter(std::span<const Point2> points, FitMode mode)
{
    if (points.size() < static_cast<std::size_t>(min_points(mode)))
        throw Error(ErrorCode::TooFewPoints, "mode " + std::string(to_string(mode)) + " needs at least " +
                                                 std::to_string(min_points(mode)) + " points, got " +
                                                 std::to_string(points.size()));
    if (!all_finite(points))
        throw Error(ErrorCode::NonFiniteInput, "point coordinates must be finite");

    const Eigen::MatrixXd bhat = BilinearForm::reduced(mode);
    const Eigen::Index k = bhat.rows();
    Eigen::MatrixXd phat = Eigen::MatrixXd::Zero(k, k);
    for (const Point2& p : points) {
        const Eigen::VectorXd r = bhat * reduce_point(embed_point(p), mode);
        phat.selfadjointView<Eigen::Lower>().rankUpdate(r);
    }
    phat = phat.selfadjointView<Eigen::Lower>();
    phat /= static_cast<double>(points.size());
    if (!phat.allFinite())
        throw Error(ErrorCode::NonFiniteInput, "scatter matrix overflowed");

    const int w = layout(mode).free_count;
    const Eigen::Index c = k - w;
    ScatterDecomposition d;
    d.mode = mode;
    d.Phat = phat;
    d.P0 = phat.topLeftCorner(w, w);
    d.P1 = phat.topRightCorner(w, c);
    d.Pc = phat.bottomRightCorner(c, c);
    d.Bc = BilinearForm::constraint(mode);
    d.n_points = points.size();
    d.collinear = points_collinear(points);
    return d;
}

Eigen::MatrixXd build_operator(const ScatterDecomposition& d)
{
    if (d.collinear && (d.mode == FitMode::General || d.mode == FitMode::OriginCentred))
        throw Error(ErrorCode::SingularP0, "all points lie on a single line");

    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d.P0, Eigen::EigenvaluesOnly).eigenvalues()[0];
    const double ref = d.Phat(layout(d.mode).free_count, layout(d.mode).free_count);
    if (!(ref > 0.0) || !(lmin / ref >= kSingularRcond))
        throw Error(ErrorCode::SingularP0, singular_reason(d.mode));

    Eigen::MatrixXd pcon = d.Bc * (d.Pc - d.P1.transpose() * d.P0.ldlt().solve(d.P1));
    if (!pcon.allFinite())
        throw Error(ErrorCode::NonFiniteInput, "reduced operator overflowed");
    return pcon;
}

FitResult solve_eigen(const ScatterDecomposition& d)
{
    const Eigen::MatrixXd pcon = build_operator(d);
    const double norm = pcon.norm();
    const Eigen::EigenSolver<Eigen::MatrixXd> es(pcon);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::NoFeasibleEigenvalue, "eigendecomposition did not converge");

    struct Real {
        double lambda;
        Eigen::VectorXd v;
    };
    std::vector<EigenCandidate> spectrum;
    std::vector<Real> reals;
    for (Eigen::Index i = 0; i < pcon.rows(); ++i) {
        const std::complex<double> ev = es.eigenvalues()[i];
        EigenCandidate c{ev.real(), ev.imag(), std::nan(""), false};
        if (std::abs(ev.imag()) <= kImagTol * norm) {
            Eigen::VectorXd v = es.eigenvectors().col(i).real();
            v.normalize();
            c.kappa = v.dot(d.Bc * v);
            c.feasible = c.re >= -kPositiveTol * norm && c.kappa > kKappaTol;
            if (c.feasible)
                reals.push_back({c.re, v});
        }
        spectrum.push_back(c);
    }
    std::sort(spectrum.begin(), spectrum.end(),
              [](const EigenCandidate& a, const EigenCandidate& b) { return a.re < b.re; });
    if (reals.empty())
        throw Error(ErrorCode::NoFeasibleEigenvalue, "no non-negative eigenvalue has a normalisable eigenvector");

    const auto best = std::min_element(reals.begin(), reals.end(),
                                       [](const Real& a, const Real& b) { return a.lambda < b.lambda; });
    const Eigen::VectorXd v = best->v / std::sqrt(best->v.dot(d.Bc * best->v));

    FitResult r;
    r.conic = assemble(d, v);
    r.lambda = best->lambda;
    r.objective = scatter_objective(d, r.conic);
    r.mode = d.mode;
    r.method = FitMethod::Eigen;
    r.spectrum = std::move(spectrum);
    r.n_points = d.n_points;
    r.n_scatter = d.n_points;
    return r;
}

FitResult solve_direct(const ScatterDecomposition& d)
{
    if (!is_centred(d.mode))
        throw Error(ErrorCode::MethodModeMismatch,
                    "direct method needs a centred mode, got " + std::string(to_string(d.mode)));
    const Eigen::MatrixXd pcon = build_operator(d);
    const double a = pcon(0, 0);
    const double r = pcon(0, 1);
    const double s = pcon(1, 0);

    // r and s are, up to sign, the Schur-complement diagonals of the v⁺ and v̄⁺
    // slots; each is judged against its own diagonal entry of P̂.
    const Eigen::Index ip = layout(d.mode).free_count;
    const Eigen::Index iq = d.Phat.rows() - 1;
    if (std::abs(s) <= kDirectZeroTol * d.Phat(ip, ip))
        throw Error(ErrorCode::DegenerateDirect, "operator entry s vanishes");
    if (std::abs(r) <= kDirectZeroTol * d.Phat(iq, iq) || r / s <= 0.0)
        throw Error(ErrorCode::DegenerateDirect, "operator entries r/s are not positive");

    const double vbar_p = std::pow(r / (4.0 * s), 0.25);
    Eigen::Vector2d v(vbar_p, -1.0 / (2.0 * vbar_p));

    // The two sign branches give q and −q, which tie; the positive branch wins
    // unless the negative one is strictly better.
    ConicIPNS plus = assemble(d, v);
    ConicIPNS minus = assemble(d, -v);
    const double op = scatter_objective(d, plus);
    const double om = scatter_objective(d, minus);

    FitResult res;
    res.conic = om < op ? minus : plus;
    res.objective = std::min(op, om);
    res.lambda = a + r * v[1] / v[0];
    res.mode = d.mode;
    res.method = FitMethod::Direct;
    res.n_points = d.n_points;
    res.n_scatter = d.n_points;
    return res;
}

std::vector<Point2> symmetrize(std::span<const Point2> points, FitMode mode)
{
    if (!is_centred(mode))
        throw Error(ErrorCode::MethodModeMismatch,
                    "symmetrisation needs a centred mode, got " + std::string(to_string(mode)));
    std::vector<Point2> out(points.begin(), points.end());
    const std::size_t blocks = mode == FitMode::OriginCentred ? 2 : 4;
    out.reserve(points.size() * blocks);
    for (const Point2& p : points)
        out.push_back({-p.x, -p.y});
    if (mode == FitMode::AxesAlignedOriginCentred) {
        for (const Point2& p : points)
            out.push_back({p.x, -p.y});
        for (const Point2& p : points)
            out.push_back({-p.x, p.y});
    }
    return out;
}

FitResult fit(std::span<const Point2> points, FitMode mode, FitMethod method)
{
    if (!is_admissible(mode, method))
        throw Error(ErrorCode::MethodModeMismatch, "method " + std::string(to_string(method)) +
                                                       " is not available for mode " + std::string(to_string(mode)));
    if (!all_finite(points))
        throw Error(ErrorCode::NonFiniteInput, "point coordinates must be finite");
    const std::size_t distinct = count_distinct(points);
    if (distinct < static_cast<std::size_t>(min_points(mode)))
        throw Error(ErrorCode::TooFewPoints, "mode " + std::string(to_string(mode)) + " needs at least " +
                                                 std::to_string(min_points(mode)) + " distinct points, got " +
                                                 std::to_string(distinct));

    FitResult r;
    switch (method) {
    case FitMethod::Eigen:
        r = solve_eigen(build_scatter(points, mode));
        // Rayleigh refinement: at the unit-constraint eigenvector the mean
        // squared residual is the eigenvalue, and summing squares avoids the
        // absolute rounding floor of the eigensolver when λ is tiny.
        r.lambda = evaluate_objective(r.conic, points);
        break;
    case FitMethod::Direct:
        r = solve_direct(build_scatter(points, mode));
        break;
    case FitMethod::Symmetrize: {
        const std::vector<Point2> extended = symmetrize(points, mode);
        r = solve_eigen(build_scatter(extended, FitMode::General));
        ConicIPNS& q = r.conic;
        const double tol = kClampTol * coefficient_norm(q);
        std::vector<double*> zeros{&q.v1, &q.v2};
        if (mode == FitMode::AxesAlignedOriginCentred)
            zeros.push_back(&q.vbar_x);
        for (double* c : zeros) {
            if (std::abs(*c) > tol)
                throw Error(ErrorCode::ZeroPatternViolation,
                            "symmetrised fit left a structurally zero coefficient at " + std::to_string(*c));
            *c = 0.0;
        }
        q = q.scaled(1.0 / std::sqrt(constraint_value(q)));
        r.extended_objective = evaluate_objective(q, extended);
        r.lambda = *r.extended_objective;
        r.n_scatter = extended.size();
        break;
    }
    }
    r.mode = mode;
    r.method = method;
    r.n_points = points.size();
    r.objective = evaluate_objective(r.conic, points);
    return r;
}

double evaluate_objective(const ConicIPNS& q, std::span<const Point2> points)
{
    if (points.empty())
        throw Error(ErrorCode::EmptyPointSet, "objective of an empty point set");
    const GacVector bq = BilinearForm::full() * q.to_gac();
    double sum = 0.0;
    for (const Point2& p : points) {
        const double t = embed_point(p).coords.dot(bq);
        sum += t * t;
    }
    return sum / static_cast<double>(points.size());
}

double constraint_value(const ConicIPNS& q)
{
    return q.v1 * q.v1 + q.v2 * q.v2 - 2.0 * q.vbar_p * q.vp;
}

ConicIPNS canonicalize(const ConicIPNS& q)
{
    const auto c = q.coefficients();
    double sumsq = 0.0, maxabs = 0.0;
    for (double x : c) {
        sumsq += x * x;
        maxabs = std::max(maxabs, std::abs(x));
    }
    if (maxabs == 0.0)
        return q;

    const double kappa = constraint_value(q);
    ConicIPNS out = kappa > 1e-12 * sumsq ? q.scaled(1.0 / std::sqrt(kappa)) : q.scaled(1.0 / std::sqrt(sumsq));
    for (double x : c) {
        if (std::abs(x) > 1e-9 * maxabs) {
            if (x < 0.0)
                out = out.scaled(-1.0);
            break;
        }
    }
    return out;
}

} // namespace gacfit
