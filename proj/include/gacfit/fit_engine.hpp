#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gacfit/gac_core.hpp"

namespace gacfit {

enum class FitMethod {
    Eigen,      ///< eigendecomposition of the reduced operator
    Direct,     ///< closed form, centred modes only
    Symmetrize, ///< general fit of the mirrored dataset, centred modes only
};

/// Minimum number of distinct points a mode needs (its degrees of freedom).
int min_points(FitMode mode);
int degrees_of_freedom(FitMode mode);
bool is_admissible(FitMode mode, FitMethod method);

std::string_view to_string(FitMode mode);
std::string_view to_string(FitMethod method);

/// Block split of the reduced scatter matrix P̂ = [[P0, P1], [P1ᵀ, Pc]].
struct ScatterDecomposition {
    FitMode mode = FitMode::General;
    Eigen::MatrixXd Phat;
    Eigen::MatrixXd P0;
    Eigen::MatrixXd P1;
    Eigen::MatrixXd Pc;
    Eigen::MatrixXd Bc;
    std::size_t n_points = 0;
    /// All points on one straight line (within 1e-12 relative).
    bool collinear = false;
};

struct EigenCandidate {
    double re = 0.0;
    double im = 0.0;
    /// vᵀ·Bc·v of the unit-norm eigenvector; NaN for complex pairs.
    double kappa = 0.0;
    bool feasible = false;
};

struct FitResult {
    ConicIPNS conic;
    /// Mean squared algebraic residual over the input points.
    double objective = 0.0;
    /// Selected eigenvalue, or the implied Rayleigh value for Direct. `fit`
    /// reports it Rayleigh-refined over the scatter points; the raw value
    /// stays in `spectrum`.
    double lambda = 0.0;
    FitMode mode = FitMode::General;
    FitMethod method = FitMethod::Eigen;
    std::vector<EigenCandidate> spectrum;
    /// Points in the input and in the scatter matrix (differs for Symmetrize).
    std::size_t n_points = 0;
    std::size_t n_scatter = 0;
    /// Objective over the mirrored dataset, Symmetrize only.
    std::optional<double> extended_objective;
};

/// Throws TooFewPoints, NonFiniteInput.
ScatterDecomposition build_scatter(std::span<const Point2> points, FitMode mode);

/// Bc·(Pc − P1ᵀ·P0⁻¹·P1). Throws SingularP0.
Eigen::MatrixXd build_operator(const ScatterDecomposition& d);

/// Throws NoFeasibleEigenvalue, SingularP0.
FitResult solve_eigen(const ScatterDecomposition& d);

/// Closed-form solve of the 2×2 centred operator. Throws DegenerateDirect,
/// MethodModeMismatch, SingularP0.
FitResult solve_direct(const ScatterDecomposition& d);

/// Mirror images appended after the originals: −p for OriginCentred, then
/// also (x, −y) and (−x, y) for AxesAlignedOriginCentred.
/// Throws MethodModeMismatch for the other modes.
std::vector<Point2> symmetrize(std::span<const Point2> points, FitMode mode);

/// Full pipeline. The reported objective is always taken over `points`.
FitResult fit(std::span<const Point2> points, FitMode mode, FitMethod method = FitMethod::Eigen);

/// (1/N)·Σ(Pᵢ·Q)². Throws EmptyPointSet.
double evaluate_objective(const ConicIPNS& q, std::span<const Point2> points);

/// Scale so that vᵀ·Bc·v = 1 on (v̄⁺, v¹, v², v⁺) when positive, else unit
/// Euclidean norm; then make the first nonzero coefficient positive.
ConicIPNS canonicalize(const ConicIPNS& q);

/// vᵀ·Bc·v on (v̄⁺, v¹, v², v⁺), i.e. v¹² + v²² − 2·v̄⁺·v⁺.
double constraint_value(const ConicIPNS& q);

} // namespace gacfit
