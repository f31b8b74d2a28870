#include "eim_internal.hpp"

namespace eimq {

namespace {

// Plain serial kernels, kept as the reference the OpenMP path is checked
// against. Per-element arithmetic must stay identical to OmpKernels.
struct SerialKernels {
    template <EimScalar Scalar>
    static void fill_snapshots(const ParametricFamily& family, const ParameterCloud& cloud,
                               const DiscreteDomain& domain, const TrainOptions&, Scalar* R,
                               double* row_sup) {
        const std::size_t n = cloud.size();
        const std::size_t m = domain.count();
        const std::vector<double>& z = domain.points();
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = cloud.sample(i);
            Scalar* row = R + i * m;
            double sup = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                row[j] = detail::to_scalar<Scalar>(family.eval(p, z[j]), z[j]);
                const double a = detail::abs_of(row[j]);
                if (a > sup) sup = a;
            }
            row_sup[i] = sup;
        }
    }

    template <EimScalar Scalar>
    static void update_rows(Scalar* R, std::size_t n, std::size_t m, std::size_t zidx,
                            const Scalar* q, Scalar* col, double* row_sup,
                            const TrainOptions&) {
        for (std::size_t i = 0; i < n; ++i) {
            Scalar* row = R + i * m;
            const Scalar v = row[zidx];
            col[i] = v;
            double sup = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                row[j] -= v * q[j];
                const double a = detail::abs_of(row[j]);
                if (a > sup) sup = a;
            }
            row_sup[i] = sup;
        }
    }
};

} // namespace

template <EimScalar Scalar>
TrainingReport<Scalar> train_reference(const ParametricFamily& family,
                                       const ParameterCloud& cloud,
                                       const DiscreteDomain& domain, const TrainOptions& opts) {
    return detail::train_with_kernels<Scalar, SerialKernels>(family, cloud, domain, opts);
}

template TrainingReport<double> train_reference<double>(const ParametricFamily&,
                                                        const ParameterCloud&,
                                                        const DiscreteDomain&,
                                                        const TrainOptions&);
template TrainingReport<std::complex<double>>
train_reference<std::complex<double>>(const ParametricFamily&, const ParameterCloud&,
                                      const DiscreteDomain&, const TrainOptions&);

} // namespace eimq
