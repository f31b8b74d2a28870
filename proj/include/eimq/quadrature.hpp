#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace eimq::quad {

/// Outcome of one adaptive integration. `converged == false` means the
/// evaluation budget ran out first; the best value and its estimate are
/// still returned (callers decide whether that is an error).
struct QuadResult {
    std::complex<double> value;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;

    double real_value() const { return value.real(); }
};

inline constexpr std::size_t kDefaultMaxEvals = 100000;

/// Globally adaptive integration of a real integrand over [a, b] with a
/// 7-point Gauss / 15-point Kronrod pair per panel. The panel with the
/// largest |K15 - G7| estimate is bisected until the summed estimates fall
/// below max(abs_tol, rel_tol*|value|) or max_evals is reached. The value is
/// the Kronrod sum over all panels.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol = 0.0,
                              std::size_t max_evals = kDefaultMaxEvals);

/// Same scheme for a complex integrand: real and imaginary parts share the
/// panel refinement and a combined (complex-modulus) error estimate.
QuadResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                             double b, double abs_tol, double rel_tol = 0.0,
                             std::size_t max_evals = kDefaultMaxEvals);

namespace detail {

/// Single G7/K15 panel application, exposed for the rule-exactness tests.
template <class T>
struct PanelValues {
    T gauss;
    T kronrod;
};

PanelValues<double> g7k15_panel(const std::function<double(double)>& f, double a, double b);
PanelValues<std::complex<double>> g7k15_panel(const std::function<std::complex<double>(double)>& f,
                                              double a, double b);

} // namespace detail

} // namespace eimq::quad
