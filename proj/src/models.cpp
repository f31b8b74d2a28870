#include "eimq/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eimq/errors.hpp"
#include "eimq/quadrature.hpp"

namespace eimq::models {

namespace {
constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's standard set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double gamma_positive(double x) {
    // valid for x > 0.5
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}
} // namespace

double sin_pi(double x) {
    double r = std::remainder(x, 2.0); // exact; r in [-1, 1], x - r even
    double sign = 1.0;
    if (r < 0.0) {
        r = -r;
        sign = -1.0;
    }
    if (r > 0.5) r = 1.0 - r; // exact for r in (0.5, 1]
    return sign * std::sin(kPi * r);
}

double gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream msg;
        msg << "gamma pole at x = " << x;
        throw PoleError(msg.str());
    }
    if (x < 0.5) return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
    return gamma_positive(x);
}

CgmyParams::CgmyParams(double c_, double g_, double m_, double y_)
    : c(c_), g(g_), m(m_), y(y_) {
    if (!(c > 0.0) || !(g > 0.0) || !(m > 0.0))
        throw std::invalid_argument("cgmy: C, G, M must be positive");
    if (!(y > 1.0) || !(y < 2.0))
        throw std::invalid_argument("cgmy: Y must lie in (1, 2)");
}

std::complex<double> cgmy_cf(const CgmyParams& q, double z) {
    const double gam = gamma_real(-q.y);
    auto pw = [&](std::complex<double> w) { return std::pow(w, q.y); };
    const std::complex<double> expo =
        q.c * gam *
        (pw({q.m, -z}) - pw({q.m, 0.0}) + pw({q.g, z}) - pw({q.g, 0.0}));
    return std::exp(expo);
}

double cgmy_integrand(const CgmyParams& q, double x, double z) {
    const std::complex<double> phase{std::cos(z * x), -std::sin(z * x)};
    return (phase * cgmy_cf(q, z)).real() / kPi;
}

double cgmy_density_oracle(const CgmyParams& q, double x, double abs_tol, double omega_upper,
                           std::size_t max_evals) {
    auto f = [&](double z) { return cgmy_integrand(q, x, z); };
    quad::QuadResult res = quad::integrate_adaptive(f, 0.0, omega_upper, abs_tol, 0.0, max_evals);
    if (!res.converged) {
        std::ostringstream msg;
        msg << "density oracle did not converge (estimate " << res.abs_error_estimate
            << " > tol " << abs_tol << " after " << res.evaluations << " evaluations)";
        throw QuadratureNonConvergenceError(msg.str());
    }
    return res.real_value();
}

ParametricFamily cgmy_family(const CgmyFamilySpec& spec) {
    if (!(spec.omega.lo < spec.omega.hi))
        throw ConfigError("cgmy: omega must have positive length");
    if (!(spec.box[0].lo > 0.0) || !(spec.box[1].lo > 0.0) || !(spec.box[2].lo > 0.0))
        throw ConfigError("cgmy: box must keep C, G, M positive");
    if (!(spec.box[3].lo > 1.0) || !(spec.box[3].hi < 2.0))
        throw ConfigError("cgmy: box must keep Y inside (1, 2)");

    ParametricFamily fam;
    fam.tag = "cgmy";
    fam.param_dim = 5;
    fam.domain = spec.omega;
    fam.kind = ValueKind::Real;
    fam.eval = [](std::span<const double> p, double z) -> std::complex<double> {
        const CgmyParams q(p[0], p[1], p[2], p[3]);
        return {cgmy_integrand(q, p[4], z), 0.0};
    };
    return fam;
}

double gauss_window(double sigma, double t) {
    return std::exp(-t * t / (2.0 * sigma * sigma)) /
           std::sqrt(2.0 * kPi * sigma * sigma);
}

std::complex<double> stft_integrand(const StftFamilySpec& spec, double b, double sigma,
                                    double z, double t) {
    if (!(sigma > 0.0)) throw std::invalid_argument("stft: sigma must be positive");
    const std::complex<double> phase{std::cos(z * t), -std::sin(z * t)};
    return spec.signal(t) * gauss_window(sigma, t - b) * phase;
}

Interval stft_window(const StftFamilySpec& spec) {
    const double reach = spec.window_halfwidths * spec.sigma_range.hi;
    return {spec.shift_range.lo - reach, spec.shift_range.hi + reach};
}

ParametricFamily stft_family(const StftFamilySpec& spec) {
    if (!(spec.sigma_range.lo > 0.0))
        throw ConfigError("stft: sigma range must be positive");
    if (!spec.signal) throw ConfigError("stft: signal handle required");

    ParametricFamily fam;
    fam.tag = "stft-gauss";
    fam.param_dim = 3;
    fam.domain = stft_window(spec);
    fam.kind = ValueKind::Complex;
    fam.eval = [spec](std::span<const double> p, double t) {
        return stft_integrand(spec, p[0], p[1], p[2], t);
    };
    return fam;
}

ParametricFamily exp_test_family(Interval p_range, Interval omega) {
    (void)p_range; // the box travels with the preset; the evaluator is global
    ParametricFamily fam;
    fam.tag = "exp-test";
    fam.param_dim = 1;
    fam.domain = omega;
    fam.kind = ValueKind::Real;
    fam.eval = [](std::span<const double> p, double z) -> std::complex<double> {
        return {std::exp(p[0] * z), 0.0};
    };
    return fam;
}

FamilyPreset make_preset(const std::string& id, const std::vector<Interval>& box_override,
                         std::optional<Interval> omega_override) {
    auto pick_box = [&](std::vector<Interval> def) {
        if (box_override.empty()) return def;
        if (box_override.size() != def.size())
            throw ConfigError("family '" + id + "' expects a box of dimension " +
                              std::to_string(def.size()));
        return box_override;
    };

    if (id == "cgmy") {
        CgmyFamilySpec spec;
        std::vector<Interval> box = pick_box(
            {spec.box[0], spec.box[1], spec.box[2], spec.box[3], spec.box[4]});
        for (std::size_t i = 0; i < 5; ++i) spec.box[i] = box[i];
        if (omega_override) spec.omega = *omega_override;
        return {cgmy_family(spec), std::move(box)};
    }
    if (id == "stft-gauss") {
        StftFamilySpec spec;
        spec.signal = [](double t) { return std::cos(2.0 * kPi * t); };
        std::vector<Interval> box =
            pick_box({spec.shift_range, spec.sigma_range, spec.freq_range});
        spec.shift_range = box[0];
        spec.sigma_range = box[1];
        spec.freq_range = box[2];
        ParametricFamily fam = stft_family(spec);
        if (omega_override) fam.domain = *omega_override;
        return {std::move(fam), std::move(box)};
    }
    if (id == "exp-test") {
        std::vector<Interval> box = pick_box({Interval{0.0, 1.0}});
        Interval omega = omega_override.value_or(Interval{-1.0, 1.0});
        return {exp_test_family(box[0], omega), std::move(box)};
    }
    throw ConfigError("unknown family id '" + id + "' (known: cgmy, stft-gauss, exp-test)");
}

std::vector<std::string> preset_ids() { return {"cgmy", "stft-gauss", "exp-test"}; }

} // namespace eimq::models
