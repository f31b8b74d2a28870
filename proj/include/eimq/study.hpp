#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eimq/analysis.hpp"
#include "eimq/eim.hpp"

namespace eimq::study {

/// One out-of-sample test point at the final order M.
struct SampleRow {
    std::vector<double> param;
    std::complex<double> oracle{};
    std::complex<double> approx{};
    double abs_error = 0.0;
    /// reported only where |oracle| exceeds the relative floor
    std::optional<double> rel_error;
};

struct StudyResult {
    std::vector<double> per_m_linf;  // out-of-sample sup error for m = 1..M
    std::vector<SampleRow> rows;
    std::vector<std::size_t> best;   // indices of the smallest absolute errors
    std::vector<std::size_t> worst;  // indices of the largest absolute errors
};

struct StudyOptions {
    std::size_t n_test = 1000;
    std::uint64_t test_seed = 1234;
    std::optional<std::uint64_t> train_seed; // enforced distinct when known
    double quad_tol = 1e-13;
    std::size_t max_evals = quad::kDefaultMaxEvals;
    double rel_floor = 1e-3; // oracle magnitude below which relative errors are noise
    std::size_t extremes = 10;
};

/// Draws fresh samples from the trained box, compares magic point
/// integration at every truncation order against the direct adaptive
/// quadrature oracle, and collects the per-sample errors at the final order.
template <EimScalar Scalar>
StudyResult run_study(const MagicModel<Scalar>& model, const ParametricFamily& family,
                      const StudyOptions& opts);

std::vector<std::string> param_names(const std::string& family_tag, std::size_t dim);

// --- CSV artifacts (atomic writes, '.' decimal separator, header row) ---

void write_residual_csv(const std::filesystem::path& path, const std::vector<double>& history);

void write_decay_csv(const std::filesystem::path& path, const std::vector<double>& per_m_linf);

void write_samples_csv(const std::filesystem::path& path, const std::string& family_tag,
                       const StudyResult& result);

/// Magic parameters plus the best/worst test points (error-cloud scatter).
template <EimScalar Scalar>
void write_scatter_csv(const std::filesystem::path& path, const MagicModel<Scalar>& model,
                       const StudyResult& result);

/// Bound curve rows, optionally aligned with a measured residual history.
void write_bounds_csv(const std::filesystem::path& path,
                      const std::vector<analysis::BoundPoint>& bounds,
                      const std::vector<double>& measured);

} // namespace eimq::study
