#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "eimq/family.hpp"
#include "eimq/interval.hpp"
#include "eimq/quadrature.hpp"

namespace eimq {

template <class S>
concept EimScalar = std::same_as<S, double> || std::same_as<S, std::complex<double>>;

/// Candidates within this relative distance of the running maximum count as
/// ties and resolve to the lowest cloud/grid index, which keeps the greedy
/// selection deterministic under any evaluation order.
inline constexpr double kArgmaxTieRel = 1e3 * std::numeric_limits<double>::epsilon();

/// A pivot below kDegenerateFloor * (initial snapshot sup) means the family
/// is numerically exhausted; training stops instead of dividing by it.
inline constexpr double kDegenerateFloor = 1e3 * std::numeric_limits<double>::epsilon();

enum class StopReason { ToleranceReached, MaxTermsReached, FamilyExhausted };

std::string to_string(StopReason r);

/// Trained magic-point artifact. Immutable after training except for
/// `weights`, which quad_weights fills in during the offline phase.
///
/// Matrix layout (all row-major):
///   basis_grid    M x grid.size()   values of q_m on the training grid
///   b             M x M             B[j][m] = q_m(z*_j), unit lower triangular
///   basis_coeffs  M x M             q_m = sum_k basis_coeffs[m][k] h_{p*_k}
template <EimScalar Scalar>
struct MagicModel {
    std::string family_tag;
    std::vector<Interval> box;
    std::vector<double> grid;

    std::vector<std::size_t> magic_point_indices;
    std::vector<double> magic_points;
    std::vector<std::size_t> magic_param_indices;
    std::vector<double> magic_params; // flat M x param_dim

    std::vector<Scalar> basis_grid;
    std::vector<Scalar> b;
    std::vector<Scalar> basis_coeffs;
    std::vector<Scalar> weights; // empty until quad_weights

    std::vector<double> history; // sup-residual after each accepted basis
    std::vector<double> pivots;  // |pivot| used to normalize each basis
    double initial_sup = 0.0;    // sup |h_p| over cloud x grid

    double tolerance = 0.0;
    std::size_t max_terms = 0;

    std::size_t size() const { return magic_points.size(); }
    std::size_t grid_size() const { return grid.size(); }
    std::size_t param_dim() const { return box.size(); }
    std::span<const double> magic_param(std::size_t k) const {
        return {magic_params.data() + k * box.size(), box.size()};
    }
};

template <EimScalar Scalar>
struct TrainingReport {
    MagicModel<Scalar> model;
    std::vector<double> residual_curve; // same values as model.history
    StopReason stop_reason = StopReason::MaxTermsReached;
};

struct TrainOptions {
    double tol = 1e-12;        // <= 0 disables the tolerance stop
    std::size_t max_terms = 150;
    bool parallel = true;      // OpenMP over the parameter cloud
    std::size_t snapshot_budget = 200'000'000; // max cloud*grid entries held
};

/// Offline greedy phase. Evaluates every snapshot on the grid exactly once,
/// then per iteration selects the parameter whose residual has the largest
/// sup over the grid, places the next magic point at that residual's argmax,
/// normalizes the residual into the next basis function and applies the
/// rank-1 residual update. Scalar must match the family's value kind.
template <EimScalar Scalar>
TrainingReport<Scalar> train(const ParametricFamily& family, const ParameterCloud& cloud,
                             const DiscreteDomain& domain, const TrainOptions& opts);

/// Plain serial implementation of the same contract, kept as the reference
/// the parallel kernels are tested against (bit-identical output required).
template <EimScalar Scalar>
TrainingReport<Scalar> train_reference(const ParametricFamily& family,
                                       const ParameterCloud& cloud,
                                       const DiscreteDomain& domain, const TrainOptions& opts);

/// h_p at the magic points: the only family evaluations the online phase needs.
template <EimScalar Scalar>
std::vector<Scalar> magic_values(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                 std::span<const double> p);

/// Forward substitution with the unit-lower-triangular B: coefficients c with
/// I_M(h)(p, .) = sum_j c_j q_j, given g_j = h_p(z*_j).
template <EimScalar Scalar>
std::vector<Scalar> interpolation_coefficients(const MagicModel<Scalar>& model,
                                               std::span<const Scalar> magic_vals);

/// Magic point interpolation I_M(h)(p, z) at each query point. Grid points
/// use the stored basis values; off-grid points re-expand each q_j through
/// its snapshot combination (no grid interpolation).
template <EimScalar Scalar>
std::vector<Scalar> interpolate(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                std::span<const double> p, std::span<const double> z_query);

struct WeightQuadOptions {
    double abs_tol = 1e-13;
    std::size_t max_evals = quad::kDefaultMaxEvals;
};

/// s_j = integral of q_j over the domain, each integrated adaptively through
/// the snapshot-combination closure. The per-basis tolerance is relaxed to
/// the closure's certified noise floor (eps * sup0 / |pivot_j| * |domain|)
/// where that exceeds abs_tol; integrals that miss even the relaxed target
/// throw QuadratureNonConvergenceError.
template <EimScalar Scalar>
std::vector<Scalar> basis_integrals(const MagicModel<Scalar>& model,
                                    const ParametricFamily& family,
                                    const WeightQuadOptions& opts);

/// Quadrature weights w = (B^-T) s for the leading `terms` x `terms` block
/// (one triangular solve; B^-1 is never formed).
template <EimScalar Scalar>
std::vector<Scalar> weights_at_order(const MagicModel<Scalar>& model,
                                     std::span<const Scalar> basis_ints, std::size_t terms);

/// Full offline weight computation: w_m = integral of theta_m^M.
/// Requires abs_tol <= model.tolerance / 10 when a tolerance was set.
template <EimScalar Scalar>
std::vector<Scalar> quad_weights(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                 const WeightQuadOptions& opts);

/// Online magic point integration: sum_m h_p(z*_m) w_m. Exactly M family
/// evaluations, O(M) arithmetic.
template <EimScalar Scalar>
Scalar integrate(const MagicModel<Scalar>& model, std::span<const Scalar> weights,
                 const ParametricFamily& family, std::span<const double> p);

/// Discrete double integral over a weighted parameter measure:
/// sum_m [sum_i pw_i h_{p_i}(z*_m)] w_m.
template <EimScalar Scalar>
Scalar integrate_double(const MagicModel<Scalar>& model, std::span<const Scalar> weights,
                        const ParametricFamily& family,
                        std::span<const std::vector<double>> param_nodes,
                        std::span<const double> param_weights);

/// beta with theta_m^M = sum_j beta[m][j] h_{p*_j} (row-major M x M): the
/// parameter-interpolation view of the rule.
template <EimScalar Scalar>
std::vector<Scalar> snapshot_coefficients(const MagicModel<Scalar>& model);

/// Checks the structural invariants (triangular unit-diagonal B, bounded
/// entries, distinct magic points/parameters, basis normalization,
/// consistent dimensions). Throws Error with a description on violation.
template <EimScalar Scalar>
void validate_model(const MagicModel<Scalar>& model);

namespace detail {

inline double abs_of(double v) { return std::abs(v); }
inline double abs_of(std::complex<double> v) { return std::abs(v); }

void throw_family_value_error(std::complex<double> v, double z);

/// Converts a family evaluation to the training scalar type; checks
/// finiteness, and for real training that the imaginary part is negligible.
template <EimScalar Scalar>
inline Scalar to_scalar(std::complex<double> v, double z) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw_family_value_error(v, z);
    if constexpr (std::same_as<Scalar, double>) {
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
            throw_family_value_error(v, z);
        return v.real();
    } else {
        return v;
    }
}

} // namespace detail

} // namespace eimq
