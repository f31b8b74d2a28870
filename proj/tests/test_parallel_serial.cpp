#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eimq/eim.hpp"
#include "eimq/models.hpp"
#include "test_support.hpp"

using namespace eimq;

namespace {

template <EimScalar S>
void expect_bit_identical(const TrainingReport<S>& a, const TrainingReport<S>& b) {
    CHECK(a.stop_reason == b.stop_reason);
    REQUIRE(a.model.size() == b.model.size());
    CHECK(a.model.magic_point_indices == b.model.magic_point_indices);
    CHECK(a.model.magic_param_indices == b.model.magic_param_indices);
    CHECK(a.model.magic_points == b.model.magic_points);
    CHECK(a.model.magic_params == b.model.magic_params);
    CHECK(a.model.basis_grid == b.model.basis_grid);
    CHECK(a.model.b == b.model.b);
    CHECK(a.model.basis_coeffs == b.model.basis_coeffs);
    CHECK(a.model.history == b.model.history);
    CHECK(a.model.pivots == b.model.pivots);
    CHECK(a.model.initial_sup == b.model.initial_sup);
    CHECK(a.residual_curve == b.residual_curve);
}

} // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit (real)") {
    const auto preset = models::make_preset("cgmy");
    const auto cloud = ParameterCloud::sample_uniform(preset.box, 250, 7);
    const auto domain = DiscreteDomain::uniform(preset.family.domain, 300);
    TrainOptions par{.tol = 1e-10, .max_terms = 50, .parallel = true};
    TrainOptions seq = par;
    seq.parallel = false;

    const auto a = train<double>(preset.family, cloud, domain, par);
    const auto b = train<double>(preset.family, cloud, domain, seq);
    const auto c = train_reference<double>(preset.family, cloud, domain, par);
    expect_bit_identical(a, b);
    expect_bit_identical(a, c);
}

TEST_CASE("parallel kernels match the serial reference bit for bit (complex)") {
    const auto fam = testsupport::osc_family({0.0, 2.0});
    const auto cloud = ParameterCloud::sample_uniform({Interval{0.5, 6.0}}, 80, 3);
    const auto domain = DiscreteDomain::uniform(fam.domain, 160);
    TrainOptions opts{.tol = 1e-11, .max_terms = 30};

    const auto a = train<std::complex<double>>(fam, cloud, domain, opts);
    const auto b = train_reference<std::complex<double>>(fam, cloud, domain, opts);
    expect_bit_identical(a, b);
}

TEST_CASE("trained models are safe for concurrent read-only use") {
    const auto preset = models::make_preset("exp-test");
    const auto cloud = ParameterCloud::sample_uniform(preset.box, 30, 2);
    const auto domain = DiscreteDomain::uniform(preset.family.domain, 80);
    auto report = train<double>(preset.family, cloud, domain, {.tol = 1e-11, .max_terms = 20});
    auto model = report.model;
    model.weights = quad_weights(model, preset.family, {.abs_tol = 1e-12});

    const int n = 64;
    std::vector<double> parallel_vals(n), serial_vals(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const double p[1] = {static_cast<double>(i) / (n - 1)};
        parallel_vals[i] =
            integrate(model, std::span<const double>(model.weights), preset.family, p);
    }
    for (int i = 0; i < n; ++i) {
        const double p[1] = {static_cast<double>(i) / (n - 1)};
        serial_vals[i] =
            integrate(model, std::span<const double>(model.weights), preset.family, p);
    }
    CHECK(parallel_vals == serial_vals);
}

TEST_CASE("reference trainer matches on the exp family and rank-1 edge cases") {
    const auto preset = models::make_preset("exp-test");
    const auto cloud = ParameterCloud::sample_uniform(preset.box, 50, 11);
    const auto domain = DiscreteDomain::chebyshev(preset.family.domain, 200);
    TrainOptions opts{.tol = 1e-13, .max_terms = 40};
    expect_bit_identical(train<double>(preset.family, cloud, domain, opts),
                         train_reference<double>(preset.family, cloud, domain, opts));

    const auto sinfam = testsupport::sin_family();
    ParameterCloud tiny({Interval{1.0, 3.0}}, {1.0, 2.0, 3.0}, 0);
    const auto dom2 = DiscreteDomain::uniform(sinfam.domain, 100);
    TrainOptions opts2{.tol = 1e-12, .max_terms = 4};
    expect_bit_identical(train<double>(sinfam, tiny, dom2, opts2),
                         train_reference<double>(sinfam, tiny, dom2, opts2));
}
