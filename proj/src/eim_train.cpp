#include <atomic>
#include <cstdint>
#include <exception>

#include "eim_internal.hpp"

namespace eimq {

namespace {

// OpenMP kernels: rows of the snapshot/residual matrix are independent, and
// the per-row arithmetic is written exactly like the serial reference, so
// results are bit-identical for any thread count.
struct OmpKernels {
    template <EimScalar Scalar>
    static void fill_snapshots(const ParametricFamily& family, const ParameterCloud& cloud,
                               const DiscreteDomain& domain, const TrainOptions& opts,
                               Scalar* R, double* row_sup) {
        const auto n = static_cast<std::int64_t>(cloud.size());
        const std::size_t m = domain.count();
        const std::vector<double>& z = domain.points();
        std::exception_ptr eptr = nullptr;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static) if (opts.parallel)
        for (std::int64_t i = 0; i < n; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const auto p = cloud.sample(static_cast<std::size_t>(i));
                Scalar* row = R + static_cast<std::size_t>(i) * m;
                double sup = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    row[j] = detail::to_scalar<Scalar>(family.eval(p, z[j]), z[j]);
                    const double a = detail::abs_of(row[j]);
                    if (a > sup) sup = a;
                }
                row_sup[i] = sup;
            } catch (...) {
#pragma omp critical(eimq_fill_error)
                {
                    if (!eptr) eptr = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (eptr) std::rethrow_exception(eptr);
    }

    template <EimScalar Scalar>
    static void update_rows(Scalar* R, std::size_t n_, std::size_t m, std::size_t zidx,
                            const Scalar* q, Scalar* col, double* row_sup,
                            const TrainOptions& opts) {
        const auto n = static_cast<std::int64_t>(n_);
#pragma omp parallel for schedule(static) if (opts.parallel)
        for (std::int64_t i = 0; i < n; ++i) {
            Scalar* row = R + static_cast<std::size_t>(i) * m;
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
TrainingReport<Scalar> train(const ParametricFamily& family, const ParameterCloud& cloud,
                             const DiscreteDomain& domain, const TrainOptions& opts) {
    return detail::train_with_kernels<Scalar, OmpKernels>(family, cloud, domain, opts);
}

template TrainingReport<double> train<double>(const ParametricFamily&, const ParameterCloud&,
                                              const DiscreteDomain&, const TrainOptions&);
template TrainingReport<std::complex<double>>
train<std::complex<double>>(const ParametricFamily&, const ParameterCloud&,
                            const DiscreteDomain&, const TrainOptions&);

} // namespace eimq
