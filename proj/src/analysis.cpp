#include "eimq/analysis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eimq/errors.hpp"

namespace eimq::analysis {

BernsteinEllipse::BernsteinEllipse(Interval iv, double rho_) : interval(iv), rho(rho_) {
    if (!(rho > 1.0)) throw std::invalid_argument("bernstein ellipse requires rho > 1");
    if (!(interval.lo < interval.hi))
        throw std::invalid_argument("bernstein ellipse requires lo < hi");
}

double semiminor(double rho) { return 0.5 * (rho - 1.0 / rho); }
double semimajor(double rho) { return 0.5 * (rho + 1.0 / rho); }

std::complex<double> ellipse_map(const BernsteinEllipse& e, std::complex<double> x) {
    const double lo = e.interval.lo;
    const double hi = e.interval.hi;
    return {hi + 0.5 * (lo - hi) * (1.0 - x.real()), 0.5 * (hi - lo) * x.imag()};
}

double rho_from_eta(double eta, double interval_length) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (!(interval_length > 0.0)) throw std::invalid_argument("interval length must be positive");
    const double t = 2.0 * eta / interval_length;
    return t + std::sqrt(t * t + 1.0);
}

BoundSpec::BoundSpec(double rho_, double c_, double measure_mass_)
    : rho(rho_), c(c_), measure_mass(measure_mass_) {
    if (!(rho > 4.0)) {
        std::ostringstream msg;
        msg << "bound requires rho > 4, got rho = " << rho;
        throw RhoTooSmallError(msg.str());
    }
    if (c < 0.0) throw std::invalid_argument("bound constant must be nonnegative");
    if (!(measure_mass > 0.0)) throw std::invalid_argument("measure mass must be positive");
}

namespace {
double bound_prefactor(double rho) {
    return rho / (4.0 * std::numbers::pi * (rho - 1.0));
}
} // namespace

BoundSpec fourier_bound_constant(double eta, double family_moment, Interval x_range,
                                 Interval omega) {
    if (!(family_moment >= 0.0))
        throw std::invalid_argument("family moment must be nonnegative");
    const double rho = rho_from_eta(eta, omega.length());
    if (!(rho > 4.0)) {
        std::ostringstream msg;
        msg << "rho(eta) = " << rho << " <= 4: the convergence hypothesis fails for eta = "
            << eta << " on |omega| = " << omega.length();
        throw RhoTooSmallError(msg.str());
    }
    const double reach = std::max(-x_range.lo, x_range.hi);
    const double c = bound_prefactor(rho) * std::exp(eta * reach) * family_moment;
    return BoundSpec(rho, c, omega.length());
}

BoundSpec small_domain_bound_constant(double eta, Interval x_range, Interval omega,
                                      double fhat_sup) {
    if (!(fhat_sup >= 0.0)) throw std::invalid_argument("fhat_sup must be nonnegative");
    const double rho = rho_from_eta(eta, x_range.length());
    if (!(rho > 4.0)) {
        std::ostringstream msg;
        msg << "rho(eta) = " << rho << " <= 4: the convergence hypothesis fails for eta = "
            << eta << " on |X| = " << x_range.length();
        throw RhoTooSmallError(msg.str());
    }
    const double reach = std::max(-omega.lo, omega.hi);
    const double c = bound_prefactor(rho) * std::exp(eta * reach) * fhat_sup;
    return BoundSpec(rho, c, omega.length());
}

double explicit_bound_constant(double rho, double f1_sup, double f2_sup) {
    if (!(rho > 1.0)) throw std::invalid_argument("bound constant requires rho > 1");
    return rho / (2.0 * (rho - 1.0)) * f1_sup * f2_sup;
}

std::vector<BoundPoint> bound_curve(const BoundSpec& spec, std::size_t m_max) {
    if (m_max == 0) throw std::invalid_argument("m_max must be positive");
    std::vector<BoundPoint> out(m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
        const double interp =
            spec.c * static_cast<double>(m) * std::pow(spec.rho / 4.0, -static_cast<double>(m));
        out[m - 1] = {m, interp, spec.measure_mass * interp};
    }
    return out;
}

} // namespace eimq::analysis
