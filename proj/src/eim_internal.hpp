#pragma once

// Shared greedy driver for the two trainers. The data-parallel kernels
// (snapshot fill, rank-1 residual update) are supplied as a policy:
// OmpKernels in eim_train.cpp, SerialKernels in eim_reference.cpp.

#include <algorithm>
#include <vector>

#include "eimq/eim.hpp"
#include "eimq/errors.hpp"

namespace eimq::detail {

struct Selection {
    double value = 0.0; // sup over cloud x grid
    std::size_t row = 0;
    std::size_t col = 0;
};

/// Deterministic argmax: the row with the largest sup (ties resolve to the
/// lowest cloud index), then the first grid index within the tie band of
/// that row's maximum.
template <EimScalar Scalar>
Selection select_argmax(const std::vector<double>& row_sup, const Scalar* R, std::size_t m) {
    double vmax = 0.0;
    for (double v : row_sup) vmax = std::max(vmax, v);
    const double row_thr = vmax * (1.0 - kArgmaxTieRel);
    std::size_t row = 0;
    for (std::size_t i = 0; i < row_sup.size(); ++i) {
        if (row_sup[i] >= row_thr) {
            row = i;
            break;
        }
    }
    const Scalar* r = R + row * m;
    const double col_thr = row_sup[row] * (1.0 - kArgmaxTieRel);
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (abs_of(r[j]) >= col_thr) {
            col = j;
            break;
        }
    }
    return {vmax, row, col};
}

template <EimScalar Scalar>
void check_train_inputs(const ParametricFamily& family, const ParameterCloud& cloud,
                        const DiscreteDomain& domain, const TrainOptions& opts) {
    if (!family.eval) throw ConfigError("family has no evaluator");
    if (family.param_dim != static_cast<int>(cloud.dim()))
        throw ConfigError("cloud dimension does not match the family");
    if (cloud.size() == 0) throw ConfigError("parameter cloud is empty");
    if (opts.max_terms == 0) throw ConfigError("max_terms must be positive");
    if (domain.points().front() < family.domain.lo || domain.points().back() > family.domain.hi)
        throw ConfigError("discrete domain exceeds the family domain");
    const bool want_complex = std::same_as<Scalar, std::complex<double>>;
    if (want_complex != (family.kind == ValueKind::Complex))
        throw ConfigError("training scalar type does not match the family value kind");
    if (cloud.size() * domain.count() > opts.snapshot_budget)
        throw ConfigError("snapshot matrix of " + std::to_string(cloud.size() * domain.count()) +
                          " entries exceeds the budget of " +
                          std::to_string(opts.snapshot_budget));
}

template <EimScalar Scalar, class Kernels>
TrainingReport<Scalar> train_with_kernels(const ParametricFamily& family,
                                          const ParameterCloud& cloud,
                                          const DiscreteDomain& domain,
                                          const TrainOptions& opts) {
    check_train_inputs<Scalar>(family, cloud, domain, opts);
    const std::size_t n = cloud.size();
    const std::size_t m = domain.count();

    std::vector<Scalar> R(n * m); // snapshots, updated in place into residuals
    std::vector<double> row_sup(n);
    Kernels::fill_snapshots(family, cloud, domain, opts, R.data(), row_sup.data());

    Selection sel = select_argmax(row_sup, R.data(), m);
    const double sup0 = sel.value;
    if (sup0 == 0.0)
        throw AllSnapshotsZeroError("every snapshot is identically zero on the grid");
    const double degenerate = kDegenerateFloor * sup0;

    std::vector<std::vector<Scalar>> basis_rows;  // q_m on the grid
    std::vector<std::vector<Scalar>> gamma_rows;  // q_m over snapshots
    std::vector<std::vector<Scalar>> b_rows;      // B_{m,0..m}
    std::vector<std::vector<Scalar>> pivot_cols;  // residual column at each z*_m
    std::vector<std::size_t> point_idx, param_idx;
    std::vector<double> point_val, params_flat, pivots, history;

    StopReason reason = StopReason::MaxTermsReached;
    for (;;) {
        const std::size_t terms = basis_rows.size();
        if (terms == opts.max_terms) {
            reason = StopReason::MaxTermsReached;
            break;
        }
        if (sel.value <= degenerate) {
            reason = StopReason::FamilyExhausted;
            break;
        }

        const Scalar piv = R[sel.row * m + sel.col];
        std::vector<Scalar> q(m);
        const Scalar* src = R.data() + sel.row * m;
        for (std::size_t j = 0; j < m; ++j) q[j] = src[j] / piv;
        q[sel.col] = Scalar(1); // keep the unit normalization exact

        // q_new = (h_{p*} - sum_j colval_j q_j) / piv expressed over snapshots;
        // colval_j is the residual value this row had at z*_j when basis j
        // was accepted (the pivot column recorded below).
        std::vector<Scalar> gm(terms + 1);
        gm[terms] = Scalar(1) / piv;
        for (std::size_t k = 0; k < terms; ++k) {
            Scalar acc{};
            for (std::size_t j = k; j < terms; ++j)
                acc += pivot_cols[j][sel.row] * gamma_rows[j][k];
            gm[k] = -acc / piv;
        }

        std::vector<Scalar> brow(terms + 1);
        for (std::size_t j = 0; j < terms; ++j) brow[j] = basis_rows[j][sel.col];
        brow[terms] = Scalar(1);

        point_idx.push_back(sel.col);
        point_val.push_back(domain[sel.col]);
        param_idx.push_back(sel.row);
        auto p = cloud.sample(sel.row);
        params_flat.insert(params_flat.end(), p.begin(), p.end());
        pivots.push_back(abs_of(piv));

        std::vector<Scalar> col(n);
        Kernels::update_rows(R.data(), n, m, sel.col, q.data(), col.data(), row_sup.data(),
                             opts);
        pivot_cols.push_back(std::move(col));
        basis_rows.push_back(std::move(q));
        gamma_rows.push_back(std::move(gm));
        b_rows.push_back(std::move(brow));

        sel = select_argmax(row_sup, R.data(), m);
        history.push_back(sel.value);
        if (opts.tol > 0.0 && sel.value <= opts.tol) {
            reason = StopReason::ToleranceReached;
            break;
        }
    }

    const std::size_t M = basis_rows.size();
    TrainingReport<Scalar> report;
    MagicModel<Scalar>& model = report.model;
    model.family_tag = family.tag;
    model.box.assign(cloud.box().begin(), cloud.box().end());
    model.grid = domain.points();
    model.magic_point_indices = std::move(point_idx);
    model.magic_points = std::move(point_val);
    model.magic_param_indices = std::move(param_idx);
    model.magic_params = std::move(params_flat);
    model.history = history;
    model.pivots = std::move(pivots);
    model.initial_sup = sup0;
    model.tolerance = opts.tol;
    model.max_terms = opts.max_terms;

    model.basis_grid.assign(M * m, Scalar{});
    model.b.assign(M * M, Scalar{});
    model.basis_coeffs.assign(M * M, Scalar{});
    for (std::size_t i = 0; i < M; ++i) {
        std::copy(basis_rows[i].begin(), basis_rows[i].end(), model.basis_grid.begin() + i * m);
        std::copy(b_rows[i].begin(), b_rows[i].end(), model.b.begin() + i * M);
        std::copy(gamma_rows[i].begin(), gamma_rows[i].end(),
                  model.basis_coeffs.begin() + i * M);
    }

    report.residual_curve = std::move(history);
    report.stop_reason = reason;
    return report;
}

} // namespace eimq::detail
