#include <algorithm>
#include <cmath>
#include <sstream>

#include "eimq/eim.hpp"
#include "eimq/errors.hpp"

namespace eimq {

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::ToleranceReached: return "tolerance reached";
        case StopReason::MaxTermsReached: return "max_M reached";
        case StopReason::FamilyExhausted: return "family exhausted";
    }
    return "unknown";
}

namespace detail {

void throw_family_value_error(std::complex<double> v, double z) {
    std::ostringstream msg;
    msg << "family evaluation (" << v.real() << ", " << v.imag() << "i) at z = " << z
        << " is not a valid sample (non-finite, or non-real for a real-valued family)";
    throw FamilyValueError(msg.str());
}

} // namespace detail

namespace {

template <EimScalar Scalar>
void require_nonempty(const MagicModel<Scalar>& model) {
    if (model.size() == 0) throw std::invalid_argument("model has no basis functions");
}

/// c solves B c = g for the leading terms x terms block (unit diagonal).
template <EimScalar Scalar>
std::vector<Scalar> forward_solve(const MagicModel<Scalar>& model, std::span<const Scalar> g,
                                  std::size_t terms) {
    const std::size_t stride = model.size();
    std::vector<Scalar> c(terms);
    for (std::size_t j = 0; j < terms; ++j) {
        Scalar acc = g[j];
        const Scalar* row = model.b.data() + j * stride;
        for (std::size_t k = 0; k < j; ++k) acc -= row[k] * c[k];
        c[j] = acc;
    }
    return c;
}

} // namespace

template <EimScalar Scalar>
std::vector<Scalar> magic_values(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                 std::span<const double> p) {
    require_nonempty(model);
    if (!model.box.empty() && p.size() != model.box.size())
        throw std::invalid_argument("parameter vector has wrong dimension");
    std::vector<Scalar> g(model.size());
    for (std::size_t k = 0; k < model.size(); ++k)
        g[k] = detail::to_scalar<Scalar>(family.eval(p, model.magic_points[k]),
                                         model.magic_points[k]);
    return g;
}

template <EimScalar Scalar>
std::vector<Scalar> interpolation_coefficients(const MagicModel<Scalar>& model,
                                               std::span<const Scalar> magic_vals) {
    require_nonempty(model);
    if (magic_vals.size() != model.size())
        throw std::invalid_argument("magic value vector has wrong length");
    return forward_solve(model, magic_vals, model.size());
}

template <EimScalar Scalar>
std::vector<Scalar> interpolate(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                std::span<const double> p, std::span<const double> z_query) {
    require_nonempty(model);
    for (double z : z_query)
        if (!family.domain.contains(z))
            throw std::invalid_argument("interpolation query outside the family domain");

    const std::size_t M = model.size();
    const std::vector<Scalar> g = magic_values(model, family, p);
    const std::vector<Scalar> c = forward_solve(model, std::span<const Scalar>(g), M);

    // parameter-interpolation form for off-grid points:
    // I_M(h)(p, .) = sum_k a_k h_{p*_k} with a = basis_coeffs^T c
    std::vector<Scalar> a(M, Scalar{});
    for (std::size_t j = 0; j < M; ++j)
        for (std::size_t k = 0; k <= j; ++k) a[k] += c[j] * model.basis_coeffs[j * M + k];

    std::vector<Scalar> out(z_query.size());
    std::vector<Scalar> snaps(M);
    for (std::size_t qi = 0; qi < z_query.size(); ++qi) {
        const double z = z_query[qi];
        const auto it = std::lower_bound(model.grid.begin(), model.grid.end(), z);
        if (it != model.grid.end() && *it == z) {
            const std::size_t col = static_cast<std::size_t>(it - model.grid.begin());
            Scalar acc{};
            for (std::size_t j = 0; j < M; ++j)
                acc += c[j] * model.basis_grid[j * model.grid_size() + col];
            out[qi] = acc;
        } else {
            for (std::size_t k = 0; k < M; ++k)
                snaps[k] = detail::to_scalar<Scalar>(family.eval(model.magic_param(k), z), z);
            Scalar acc{};
            for (std::size_t k = 0; k < M; ++k) acc += a[k] * snaps[k];
            out[qi] = acc;
        }
    }
    return out;
}

template <EimScalar Scalar>
std::vector<Scalar> basis_integrals(const MagicModel<Scalar>& model,
                                    const ParametricFamily& family,
                                    const WeightQuadOptions& opts) {
    require_nonempty(model);
    const std::size_t M = model.size();
    const double len = model.grid.back() - model.grid.front();
    const double a = model.grid.front();
    const double b = model.grid.back();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    std::vector<Scalar> s(M);
    std::vector<Scalar> snaps(M);
    for (std::size_t j = 0; j < M; ++j) {
        // The closure cancels O(1) snapshots down to a function that was
        // O(pivot_j) before normalization, so its values carry an absolute
        // noise of about eps*sup0/|pivot_j|; no quadrature can certify the
        // integral beyond that floor times the interval length.
        const double noise_floor = 4.0 * eps * model.initial_sup / model.pivots[j] * len;
        const double tol_j = std::max(opts.abs_tol, noise_floor);

        auto closure = [&](double z) -> Scalar {
            Scalar acc{};
            for (std::size_t k = 0; k <= j; ++k) {
                snaps[k] = detail::to_scalar<Scalar>(family.eval(model.magic_param(k), z), z);
                acc += model.basis_coeffs[j * M + k] * snaps[k];
            }
            return acc;
        };

        quad::QuadResult res;
        if constexpr (std::same_as<Scalar, double>) {
            res = quad::integrate_adaptive(closure, a, b, tol_j, 0.0, opts.max_evals);
            s[j] = res.real_value();
        } else {
            res = quad::integrate_complex(closure, a, b, tol_j, 0.0, opts.max_evals);
            s[j] = res.value;
        }
        if (!res.converged) {
            std::ostringstream msg;
            msg << "basis integral " << j << " did not converge: estimate "
                << res.abs_error_estimate << " > tol " << tol_j << " after "
                << res.evaluations << " evaluations";
            throw QuadratureNonConvergenceError(msg.str());
        }
    }
    return s;
}

template <EimScalar Scalar>
std::vector<Scalar> weights_at_order(const MagicModel<Scalar>& model,
                                     std::span<const Scalar> basis_ints, std::size_t terms) {
    require_nonempty(model);
    if (terms == 0 || terms > model.size() || basis_ints.size() < terms)
        throw std::invalid_argument("invalid truncation order for weights");
    const std::size_t stride = model.size();
    std::vector<Scalar> w(terms);
    for (std::size_t j = terms; j-- > 0;) {
        Scalar acc = basis_ints[j];
        for (std::size_t i = j + 1; i < terms; ++i) acc -= model.b[i * stride + j] * w[i];
        w[j] = acc;
    }
    return w;
}

template <EimScalar Scalar>
std::vector<Scalar> quad_weights(const MagicModel<Scalar>& model, const ParametricFamily& family,
                                 const WeightQuadOptions& opts) {
    if (model.tolerance > 0.0 && opts.abs_tol > model.tolerance / 10.0)
        throw std::invalid_argument("weight quadrature tolerance must be <= training tol / 10");
    const std::vector<Scalar> s = basis_integrals(model, family, opts);
    return weights_at_order(model, std::span<const Scalar>(s), model.size());
}

template <EimScalar Scalar>
Scalar integrate(const MagicModel<Scalar>& model, std::span<const Scalar> weights,
                 const ParametricFamily& family, std::span<const double> p) {
    require_nonempty(model);
    if (weights.size() != model.size())
        throw std::invalid_argument("weight vector length does not match the model");
    const std::vector<Scalar> g = magic_values(model, family, p);
    Scalar acc{};
    for (std::size_t k = 0; k < g.size(); ++k) acc += g[k] * weights[k];
    return acc;
}

template <EimScalar Scalar>
Scalar integrate_double(const MagicModel<Scalar>& model, std::span<const Scalar> weights,
                        const ParametricFamily& family,
                        std::span<const std::vector<double>> param_nodes,
                        std::span<const double> param_weights) {
    require_nonempty(model);
    if (param_nodes.size() != param_weights.size())
        throw std::invalid_argument("parameter nodes and weights differ in length");
    if (weights.size() != model.size())
        throw std::invalid_argument("weight vector length does not match the model");
    std::vector<Scalar> inner(model.size(), Scalar{});
    for (std::size_t i = 0; i < param_nodes.size(); ++i) {
        const std::vector<Scalar> g = magic_values(model, family, param_nodes[i]);
        for (std::size_t k = 0; k < g.size(); ++k) inner[k] += param_weights[i] * g[k];
    }
    Scalar acc{};
    for (std::size_t k = 0; k < inner.size(); ++k) acc += inner[k] * weights[k];
    return acc;
}

template <EimScalar Scalar>
std::vector<Scalar> snapshot_coefficients(const MagicModel<Scalar>& model) {
    require_nonempty(model);
    const std::size_t M = model.size();
    std::vector<Scalar> beta(M * M, Scalar{});
    std::vector<Scalar> e(M);
    for (std::size_t mcol = 0; mcol < M; ++mcol) {
        std::fill(e.begin(), e.end(), Scalar{});
        e[mcol] = Scalar(1);
        const std::vector<Scalar> x = forward_solve(model, std::span<const Scalar>(e), M);
        for (std::size_t j = mcol; j < M; ++j)
            for (std::size_t k = 0; k <= j; ++k)
                beta[mcol * M + k] += x[j] * model.basis_coeffs[j * M + k];
    }
    return beta;
}

template <EimScalar Scalar>
void validate_model(const MagicModel<Scalar>& model) {
    const std::size_t M = model.size();
    auto fail = [](const std::string& what) { throw Error("model invariant violated: " + what); };

    if (model.magic_point_indices.size() != M || model.magic_param_indices.size() != M ||
        model.history.size() != M || model.pivots.size() != M)
        fail("inconsistent magic list lengths");
    if (model.b.size() != M * M || model.basis_coeffs.size() != M * M ||
        model.basis_grid.size() != M * model.grid_size())
        fail("inconsistent matrix dimensions");
    if (!model.box.empty() && model.magic_params.size() != M * model.box.size())
        fail("inconsistent magic parameter storage");

    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t k = 0; k < M; ++k) {
            const double mag = detail::abs_of(model.b[j * M + k]);
            if (k > j && mag > 1e-12) fail("B has an off-pattern upper entry");
            if (k == j && detail::abs_of(model.b[j * M + k] - Scalar(1)) > 1e-12)
                fail("B diagonal entry differs from 1");
            if (mag > 1.0 + 1e-10) fail("|B| entry exceeds 1");
        }
    }

    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i + 1; j < M; ++j) {
            if (model.magic_point_indices[i] == model.magic_point_indices[j])
                fail("magic points not pairwise distinct");
            if (model.magic_param_indices[i] == model.magic_param_indices[j])
                fail("magic parameters not pairwise distinct");
        }

    for (std::size_t j = 0; j < M; ++j) {
        const Scalar* row = model.basis_grid.data() + j * model.grid_size();
        const std::size_t at = model.magic_point_indices[j];
        if (detail::abs_of(row[at] - Scalar(1)) != 0.0)
            fail("basis function is not exactly 1 at its magic point");
        for (std::size_t col = 0; col < model.grid_size(); ++col)
            if (detail::abs_of(row[col]) > 1.0 + 1e-10)
                fail("basis function exceeds unit sup norm");
    }
}

#define EIMQ_INSTANTIATE(S)                                                                   \
    template std::vector<S> magic_values<S>(const MagicModel<S>&, const ParametricFamily&,    \
                                            std::span<const double>);                         \
    template std::vector<S> interpolation_coefficients<S>(const MagicModel<S>&,               \
                                                          std::span<const S>);                \
    template std::vector<S> interpolate<S>(const MagicModel<S>&, const ParametricFamily&,     \
                                           std::span<const double>, std::span<const double>); \
    template std::vector<S> basis_integrals<S>(const MagicModel<S>&, const ParametricFamily&, \
                                               const WeightQuadOptions&);                     \
    template std::vector<S> weights_at_order<S>(const MagicModel<S>&, std::span<const S>,     \
                                                std::size_t);                                 \
    template std::vector<S> quad_weights<S>(const MagicModel<S>&, const ParametricFamily&,    \
                                            const WeightQuadOptions&);                        \
    template S integrate<S>(const MagicModel<S>&, std::span<const S>, const ParametricFamily&,\
                            std::span<const double>);                                         \
    template S integrate_double<S>(const MagicModel<S>&, std::span<const S>,                  \
                                   const ParametricFamily&,                                   \
                                   std::span<const std::vector<double>>,                      \
                                   std::span<const double>);                                  \
    template std::vector<S> snapshot_coefficients<S>(const MagicModel<S>&);                   \
    template void validate_model<S>(const MagicModel<S>&);

EIMQ_INSTANTIATE(double)
EIMQ_INSTANTIATE(std::complex<double>)

#undef EIMQ_INSTANTIATE

} // namespace eimq
