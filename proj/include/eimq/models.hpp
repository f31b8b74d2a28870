#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eimq/family.hpp"
#include "eimq/interval.hpp"

namespace eimq::models {

/// sin(pi*x) with argument reduction done on x itself, so the result keeps
/// full relative accuracy near integer x (plain std::sin(pi*x) loses ~3
/// digits there, which would leak into the reflection formula).
double sin_pi(double x);

/// Real gamma function: Lanczos (g = 7, 9 coefficients) for x > 0.5 and the
/// reflection formula for x <= 0.5. Relative accuracy ~1e-14 on the ranges
/// the integrand families use. Throws PoleError at non-positive integers.
double gamma_real(double x);

/// Parameters of the CGMY / tempered stable distribution.
struct CgmyParams {
    double c;
    double g;
    double m;
    double y;

    CgmyParams(double c_, double g_, double m_, double y_);
};

/// Characteristic function phi_q(z) = exp(C Gamma(-Y) ((M-iz)^Y - M^Y
/// + (G+iz)^Y - G^Y)); principal-branch powers (both bases have positive
/// real part, so the branch is continuous in z). M^Y and G^Y go through the
/// same complex-pow path as the z-dependent terms so that phi_q(0) == 1
/// without rounding residue.
std::complex<double> cgmy_cf(const CgmyParams& q, double z);

/// Half-line Fourier-inversion integrand (1/pi) Re(e^{-izx} phi_q(z)); the
/// real-valued family behind the density case study.
double cgmy_integrand(const CgmyParams& q, double x, double z);

/// Reference density value f_q(x) by direct adaptive quadrature of
/// cgmy_integrand over [0, omega_upper]. Throws QuadratureNonConvergenceError
/// if the requested tolerance cannot be certified.
double cgmy_density_oracle(const CgmyParams& q, double x, double abs_tol,
                           double omega_upper = 75.0,
                           std::size_t max_evals = 100000);

/// Family box for (C, G, M, Y, x); Y may be degenerate (fixed value).
struct CgmyFamilySpec {
    std::array<Interval, 5> box{Interval{1.0, 5.0}, Interval{1.0, 8.0}, Interval{1.0, 8.0},
                                Interval{1.1, 1.1}, Interval{-1.0, 1.0}};
    Interval omega{0.0, 75.0};
};

ParametricFamily cgmy_family(const CgmyFamilySpec& spec);

/// Short-time Fourier transform integrand family with a Gauss window,
/// parameters (b, sigma, z), integration variable t.
struct StftFamilySpec {
    std::function<double(double)> signal;
    Interval shift_range{-0.5, 0.5};
    Interval sigma_range{0.25, 1.0};
    Interval freq_range{-4.0, 4.0};
    double window_halfwidths = 8.0; // truncation at b +/- this many sigmas
};

double gauss_window(double sigma, double t);

std::complex<double> stft_integrand(const StftFamilySpec& spec, double b, double sigma,
                                    double z, double t);

/// The common t-window covering b +/- window_halfwidths*sigma over the
/// whole (b, sigma) box.
Interval stft_window(const StftFamilySpec& spec);

ParametricFamily stft_family(const StftFamilySpec& spec);

/// h_p(z) = exp(p z): entire in z, used to validate the a priori bounds.
ParametricFamily exp_test_family(Interval p_range, Interval omega);

/// A built-in family plus its default training box (CLI-facing).
struct FamilyPreset {
    ParametricFamily family;
    std::vector<Interval> box;
};

/// Families addressable by id: "cgmy", "stft-gauss", "exp-test".
/// Optional overrides replace the default box / integration interval.
FamilyPreset make_preset(const std::string& id,
                         const std::vector<Interval>& box_override = {},
                         std::optional<Interval> omega_override = std::nullopt);

std::vector<std::string> preset_ids();

} // namespace eimq::models
