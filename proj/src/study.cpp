#include "eimq/study.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eimq/errors.hpp"
#include "eimq/text.hpp"

namespace eimq::study {

namespace {

std::string csv_complex_columns(const std::string& stem) {
    return stem + "_re," + stem + "_im";
}

void write_lines(const std::filesystem::path& path, const std::string& header,
                 const std::vector<std::string>& lines) {
    std::ostringstream out;
    out << header << "\n";
    for (const std::string& line : lines) out << line << "\n";
    text::atomic_write(path, out.str());
}

} // namespace

template <EimScalar Scalar>
StudyResult run_study(const MagicModel<Scalar>& model, const ParametricFamily& family,
                      const StudyOptions& opts) {
    if (model.size() == 0) throw std::invalid_argument("study needs a trained model");
    if (model.weights.size() != model.size())
        throw ConfigError("study needs a model with computed weights");
    if (opts.train_seed && *opts.train_seed == opts.test_seed)
        throw ConfigError("test seed must differ from the training seed");

    StudyResult result;
    if (opts.n_test == 0) return result;

    const std::size_t M = model.size();
    const ParameterCloud fresh =
        ParameterCloud::sample_uniform(model.box, opts.n_test, opts.test_seed);

    // truncated weights w^(m) share the basis integrals s_j
    const std::vector<Scalar> s =
        basis_integrals(model, family, {opts.quad_tol, opts.max_evals});
    std::vector<std::vector<Scalar>> weight_table(M);
    for (std::size_t m = 1; m <= M; ++m)
        weight_table[m - 1] = weights_at_order(model, std::span<const Scalar>(s), m);

    result.per_m_linf.assign(M, 0.0);
    result.rows.resize(opts.n_test);

    const Interval dom{model.grid.front(), model.grid.back()};
    for (std::size_t i = 0; i < opts.n_test; ++i) {
        const auto p = fresh.sample(i);
        std::complex<double> oracle;
        quad::QuadResult qres;
        if constexpr (std::same_as<Scalar, double>) {
            qres = quad::integrate_adaptive(
                [&](double z) {
                    return detail::to_scalar<double>(family.eval(p, z), z);
                },
                dom.lo, dom.hi, opts.quad_tol, 0.0, opts.max_evals);
        } else {
            qres = quad::integrate_complex([&](double z) { return family.eval(p, z); }, dom.lo,
                                           dom.hi, opts.quad_tol, 0.0, opts.max_evals);
        }
        if (!qres.converged)
            throw QuadratureNonConvergenceError("study oracle integral did not converge");
        oracle = qres.value;

        const std::vector<Scalar> g = magic_values(model, family, p);
        std::complex<double> approx_final;
        for (std::size_t m = 1; m <= M; ++m) {
            const std::vector<Scalar>& w = weight_table[m - 1];
            Scalar acc{};
            for (std::size_t k = 0; k < m; ++k) acc += g[k] * w[k];
            const std::complex<double> value(acc);
            const double err = std::abs(value - oracle);
            if (err > result.per_m_linf[m - 1]) result.per_m_linf[m - 1] = err;
            if (m == M) approx_final = value;
        }

        SampleRow& row = result.rows[i];
        row.param.assign(p.begin(), p.end());
        row.oracle = oracle;
        row.approx = approx_final;
        row.abs_error = std::abs(approx_final - oracle);
        if (std::abs(oracle) > opts.rel_floor)
            row.rel_error = row.abs_error / std::abs(oracle);
    }

    std::vector<std::size_t> order(result.rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.rows[a].abs_error < result.rows[b].abs_error;
    });
    const std::size_t take = std::min(opts.extremes, order.size());
    result.best.assign(order.begin(), order.begin() + take);
    result.worst.assign(order.end() - take, order.end());
    std::reverse(result.worst.begin(), result.worst.end());
    return result;
}

std::vector<std::string> param_names(const std::string& family_tag, std::size_t dim) {
    if (family_tag == "cgmy" && dim == 5) return {"c", "g", "m", "y", "x"};
    if (family_tag == "stft-gauss" && dim == 3) return {"b", "sigma", "z"};
    if (family_tag == "exp-test" && dim == 1) return {"p"};
    std::vector<std::string> names(dim);
    for (std::size_t d = 0; d < dim; ++d) names[d] = "p" + std::to_string(d);
    return names;
}

void write_residual_csv(const std::filesystem::path& path, const std::vector<double>& history) {
    std::vector<std::string> lines;
    lines.reserve(history.size());
    for (std::size_t m = 0; m < history.size(); ++m)
        lines.push_back(std::to_string(m + 1) + "," + text::fmt_double(history[m]));
    write_lines(path, "m,sup_residual", lines);
}

void write_decay_csv(const std::filesystem::path& path, const std::vector<double>& per_m_linf) {
    std::vector<std::string> lines;
    lines.reserve(per_m_linf.size());
    for (std::size_t m = 0; m < per_m_linf.size(); ++m)
        lines.push_back(std::to_string(m + 1) + "," + text::fmt_double(per_m_linf[m]));
    write_lines(path, "m,linf_error", lines);
}

void write_samples_csv(const std::filesystem::path& path, const std::string& family_tag,
                       const StudyResult& result) {
    const std::size_t dim = result.rows.empty() ? 0 : result.rows.front().param.size();
    const std::vector<std::string> names = param_names(family_tag, dim);
    std::string header = "index";
    for (const std::string& n : names) header += "," + n;
    header += "," + csv_complex_columns("oracle") + "," + csv_complex_columns("approx") +
              ",abs_error,rel_error";

    std::vector<std::string> lines;
    lines.reserve(result.rows.size());
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SampleRow& row = result.rows[i];
        std::string line = std::to_string(i);
        for (double v : row.param) line += "," + text::fmt_double(v);
        line += "," + text::fmt_double(row.oracle.real()) + "," +
                text::fmt_double(row.oracle.imag());
        line += "," + text::fmt_double(row.approx.real()) + "," +
                text::fmt_double(row.approx.imag());
        line += "," + text::fmt_double(row.abs_error);
        line += ",";
        if (row.rel_error) line += text::fmt_double(*row.rel_error);
        lines.push_back(std::move(line));
    }
    write_lines(path, header, lines);
}

template <EimScalar Scalar>
void write_scatter_csv(const std::filesystem::path& path, const MagicModel<Scalar>& model,
                       const StudyResult& result) {
    const std::size_t dim = model.param_dim();
    const std::vector<std::string> names = param_names(model.family_tag, dim);
    std::string header = "kind,index";
    for (const std::string& n : names) header += "," + n;
    header += ",abs_error";

    std::vector<std::string> lines;
    for (std::size_t k = 0; k < model.size(); ++k) {
        std::string line = "magic," + std::to_string(k);
        for (double v : model.magic_param(k)) line += "," + text::fmt_double(v);
        line += ",";
        lines.push_back(std::move(line));
    }
    auto emit = [&](const char* kind, const std::vector<std::size_t>& idx) {
        for (std::size_t i : idx) {
            const SampleRow& row = result.rows[i];
            std::string line = std::string(kind) + "," + std::to_string(i);
            for (double v : row.param) line += "," + text::fmt_double(v);
            line += "," + text::fmt_double(row.abs_error);
            lines.push_back(std::move(line));
        }
    };
    emit("best", result.best);
    emit("worst", result.worst);
    write_lines(path, header, lines);
}

void write_bounds_csv(const std::filesystem::path& path,
                      const std::vector<analysis::BoundPoint>& bounds,
                      const std::vector<double>& measured) {
    std::vector<std::string> lines;
    lines.reserve(bounds.size());
    for (const analysis::BoundPoint& b : bounds) {
        std::string line = std::to_string(b.m) + ",";
        if (b.m >= 1 && b.m <= measured.size()) line += text::fmt_double(measured[b.m - 1]);
        line += "," + text::fmt_double(b.interpolation) + "," + text::fmt_double(b.integration);
        lines.push_back(std::move(line));
    }
    write_lines(path, "m,measured_residual,interpolation_bound,integration_bound", lines);
}

template StudyResult run_study<double>(const MagicModel<double>&, const ParametricFamily&,
                                       const StudyOptions&);
template StudyResult run_study<std::complex<double>>(const MagicModel<std::complex<double>>&,
                                                     const ParametricFamily&,
                                                     const StudyOptions&);
template void write_scatter_csv<double>(const std::filesystem::path&, const MagicModel<double>&,
                                        const StudyResult&);
template void write_scatter_csv<std::complex<double>>(const std::filesystem::path&,
                                                      const MagicModel<std::complex<double>>&,
                                                      const StudyResult&);

} // namespace eimq::study
