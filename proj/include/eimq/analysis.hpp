#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "eimq/interval.hpp"

namespace eimq::analysis {

/// Image of the Bernstein ellipse B([-1,1], rho) under the affine map onto
/// [interval.lo, interval.hi].
struct BernsteinEllipse {
    Interval interval;
    double rho = 0.0; // > 1

    BernsteinEllipse(Interval iv, double rho_);
};

/// Semiminor / semimajor axis lengths of B([-1,1], rho).
double semiminor(double rho);
double semimajor(double rho);

/// The affine transplant tau_{[lo,hi]}(x) = hi + (lo-hi)/2 (1 - Re x)
/// + i (hi-lo)/2 Im x.
std::complex<double> ellipse_map(const BernsteinEllipse& e, std::complex<double> x);

/// Largest ellipse parameter such that B(interval, rho) stays inside the
/// analyticity strip of half-width eta:
/// rho(eta) = 2 eta / L + sqrt((2 eta / L)^2 + 1). Monotone increasing in eta.
double rho_from_eta(double eta, double interval_length);

/// Inputs of the a priori error curves C M (rho/4)^{-M}.
struct BoundSpec {
    double rho = 0.0;          // > 4 (convergence hypothesis)
    double c = 0.0;            // > 0
    double measure_mass = 0.0; // mu(Omega), |Omega| for Lebesgue

    BoundSpec(double rho_, double c_, double measure_mass_);
};

/// Exponential-moment criterion for parametric Fourier transforms:
/// C(eta) = rho/(4 pi (rho-1)) e^{eta max(-X_lo, X_hi)} * family_moment with
/// rho = rho_from_eta(eta, |omega|). family_moment is the caller-supplied
/// sup over the family of the eta-exponential moment of f_q. Throws
/// RhoTooSmallError when rho(eta) <= 4.
///
/// (The source result also assumes eta > sqrt(15/8) |omega|, which is
/// stricter than rho(eta) > 4; only the rho gate is enforced here.)
BoundSpec fourier_bound_constant(double eta, double family_moment, Interval x_range,
                                 Interval omega);

/// Small-domain variant (singleton parameter family): the ellipse lives in
/// the x variable, C(eta) = rho/(4 pi (rho-1)) e^{eta max(-omega_lo,
/// omega_hi)} * fhat_sup with rho = rho_from_eta(eta, |x_range|).
BoundSpec small_domain_bound_constant(double eta, Interval x_range, Interval omega,
                                      double fhat_sup);

/// Explicit constant of the exponential error bound for a factored family
/// h = f1 f2: C = rho/(2(rho-1)) sup|f1| max|f2| with sup taken over the
/// analyticity ellipse.
double explicit_bound_constant(double rho, double f1_sup, double f2_sup);

struct BoundPoint {
    std::size_t m = 0;
    double interpolation = 0.0; // C M (rho/4)^{-M}
    double integration = 0.0;   // measure_mass * interpolation
};

std::vector<BoundPoint> bound_curve(const BoundSpec& spec, std::size_t m_max);

} // namespace eimq::analysis
