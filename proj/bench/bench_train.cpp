// Times the offline phase with the OpenMP kernels against the serial
// reference implementation, and checks that both produce identical models.
//
// Usage: bench_train [cloud_size] [grid_size] [tol] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eimq/eim.hpp"
#include "eimq/models.hpp"

using namespace eimq;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, seconds(t0, t1));
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t cloud_size = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
    const std::size_t grid_size = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1000;
    const double tol = argc > 3 ? std::strtod(argv[3], nullptr) : 1e-12;
    const int repeats = argc > 4 ? std::atoi(argv[4]) : 3;

    const auto preset = models::make_preset("cgmy");
    const auto cloud = ParameterCloud::sample_uniform(preset.box, cloud_size, 7);
    const auto domain = DiscreteDomain::uniform(preset.family.domain, grid_size);

    TrainOptions parallel{.tol = tol, .max_terms = 150, .parallel = true};
    TrainOptions serial_kernels = parallel;
    serial_kernels.parallel = false;

    std::cout << "cgmy offline phase, cloud " << cloud_size << " x grid " << grid_size
              << ", tol " << tol << ", best of " << repeats << "\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp\n";
#endif

    TrainingReport<double> rp, rs, rr;
    const double tp =
        best_of(repeats, [&] { rp = train<double>(preset.family, cloud, domain, parallel); });
    const double ts = best_of(
        repeats, [&] { rs = train<double>(preset.family, cloud, domain, serial_kernels); });
    const double tr = best_of(
        repeats, [&] { rr = train_reference<double>(preset.family, cloud, domain, parallel); });

    const bool identical = rp.model.b == rs.model.b && rp.model.b == rr.model.b &&
                           rp.model.basis_grid == rs.model.basis_grid &&
                           rp.model.basis_grid == rr.model.basis_grid &&
                           rp.model.magic_point_indices == rr.model.magic_point_indices;

    std::cout << "M = " << rp.model.size() << "\n"
              << "train (openmp kernels):   " << tp << " s\n"
              << "train (kernels, 1 path):  " << ts << " s\n"
              << "train_reference (serial): " << tr << " s\n"
              << "speedup vs reference:     " << tr / tp << "x\n"
              << "models bit-identical:     " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}
