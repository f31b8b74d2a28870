#include "eimq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "eimq/errors.hpp"

namespace eimq::quad {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre on [-1,1].
// Abscissae/weights from QUADPACK dqk15.f (33 significant digits).
// Odd-index abscissae are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

bool finite(double v) { return std::isfinite(v); }
bool finite(std::complex<double> v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class T, class F>
detail::PanelValues<T> panel_rule(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    auto sample = [&](double x) {
        T v = f(x);
        if (!finite(v)) {
            std::ostringstream msg;
            msg << "integrand returned a non-finite value at z = " << x;
            throw NonFiniteSampleError(msg.str());
        }
        return v;
    };

    T fc = sample(c);
    T kronrod = kWgk[7] * fc;
    T gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        T s = sample(c - dx) + sample(c + dx);
        kronrod += kWgk[i] * s;
        if (i % 2 == 1) gauss += kWg[(i - 1) / 2] * s;
    }
    return {gauss * h, kronrod * h};
}

template <class T>
struct Panel {
    double a, b;
    T value;     // Kronrod sum
    double err;  // |K15 - G7|
    bool splittable;
};

template <class T>
struct WorstFirst {
    bool operator()(const Panel<T>& x, const Panel<T>& y) const {
        // unsplittable panels sink to the bottom of the heap
        if (x.splittable != y.splittable) return !x.splittable;
        return x.err < y.err;
    }
};

template <class T, class F>
QuadResult run_adaptive(const F& f, double a, double b, double abs_tol, double rel_tol,
                        std::size_t max_evals) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
        throw std::invalid_argument("integrate: needs a positive tolerance");

    std::size_t evals = 0;
    auto make_panel = [&](double lo, double hi) {
        auto pv = panel_rule<T>(f, lo, hi);
        evals += 15;
        const double mid = 0.5 * (lo + hi);
        return Panel<T>{lo, hi, pv.kronrod, std::abs(pv.kronrod - pv.gauss),
                        mid > lo && mid < hi};
    };

    std::priority_queue<Panel<T>, std::vector<Panel<T>>, WorstFirst<T>> heap;
    Panel<T> first = make_panel(a, b);
    T total = first.value;
    double total_err = first.err;
    heap.push(first);

    auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

    while (total_err > target()) {
        const Panel<T>& worst = heap.top();
        if (!worst.splittable) break;           // cannot refine further
        if (evals + 30 > max_evals) break;      // budget exhausted
        Panel<T> parent = worst;
        heap.pop();
        const double mid = 0.5 * (parent.a + parent.b);
        Panel<T> left = make_panel(parent.a, mid);
        Panel<T> right = make_panel(mid, parent.b);
        total += left.value + right.value - parent.value;
        total_err += left.err + right.err - parent.err;
        heap.push(left);
        heap.push(right);
    }

    // Recompute the sums from the final panel set; the running updates above
    // accumulate cancellation drift over many splits.
    std::vector<Panel<T>> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
    total = T{};
    total_err = 0.0;
    for (const Panel<T>& p : panels) {
        total += p.value;
        total_err += p.err;
    }

    QuadResult res;
    res.value = total;
    res.abs_error_estimate = total_err;
    res.evaluations = evals;
    res.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    return res;
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, std::size_t max_evals) {
    return run_adaptive<double>(f, a, b, abs_tol, rel_tol, max_evals);
}

QuadResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                             double b, double abs_tol, double rel_tol, std::size_t max_evals) {
    return run_adaptive<std::complex<double>>(f, a, b, abs_tol, rel_tol, max_evals);
}

namespace detail {

PanelValues<double> g7k15_panel(const std::function<double(double)>& f, double a, double b) {
    return panel_rule<double>(f, a, b);
}

PanelValues<std::complex<double>> g7k15_panel(const std::function<std::complex<double>(double)>& f,
                                              double a, double b) {
    return panel_rule<std::complex<double>>(f, a, b);
}

} // namespace detail

} // namespace eimq::quad
