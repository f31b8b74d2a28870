#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eimq/eim.hpp"
#include "eimq/errors.hpp"
#include "eimq/models.hpp"
#include "eimq/quadrature.hpp"
#include "test_support.hpp"

using namespace eimq;
using std::numbers::pi;

namespace {

/// Small CGMY setup shared by the online tests: full Table-1 box, reduced
/// cloud/grid so the whole suite stays fast (the acceptance suite runs the
/// full-size configuration).
struct SmallCgmy {
    models::FamilyPreset preset = models::make_preset("cgmy");
    ParameterCloud cloud = ParameterCloud::sample_uniform(preset.box, 400, 42);
    DiscreteDomain domain = DiscreteDomain::uniform(preset.family.domain, 400);
    TrainingReport<double> report =
        train<double>(preset.family, cloud, domain, {.tol = 1e-11, .max_terms = 60});
};

const SmallCgmy& small_cgmy() {
    static SmallCgmy s;
    return s;
}

} // namespace

TEST_CASE("small cgmy model converged") {
    const auto& s = small_cgmy();
    CHECK(s.report.stop_reason == StopReason::ToleranceReached);
    CHECK(s.report.model.size() >= 10);
    validate_model(s.report.model);
}

TEST_CASE("interpolation identity at the magic points") {
    const auto& s = small_cgmy();
    const auto& model = s.report.model;
    const auto fresh = ParameterCloud::sample_uniform(model.box, 100, 4242);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        const auto p = fresh.sample(i);
        const auto vals = interpolate(model, s.preset.family, p,
                                      std::span<const double>(model.magic_points));
        const auto direct = magic_values(model, s.preset.family, p);
        for (std::size_t k = 0; k < model.size(); ++k) {
            const double scale = std::max(1.0, std::abs(direct[k]));
            CHECK(std::abs(vals[k] - direct[k]) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("snapshot reproduction on the training grid") {
    const auto& s = small_cgmy();
    const auto& model = s.report.model;
    for (std::size_t j = 0; j < model.size(); ++j) {
        const auto p = model.magic_param(j);
        const auto vals =
            interpolate(model, s.preset.family, p, std::span<const double>(model.grid));
        double sup = 0.0, err = 0.0;
        for (std::size_t col = 0; col < model.grid.size(); ++col) {
            const double direct =
                models::cgmy_integrand(models::CgmyParams(p[0], p[1], p[2], p[3]), p[4],
                                       model.grid[col]);
            sup = std::max(sup, std::abs(direct));
            err = std::max(err, std::abs(vals[col] - direct));
        }
        CHECK(err <= 1e-10 * sup);
    }
}

TEST_CASE("off-grid interpolation matches direct evaluation") {
    const auto& s = small_cgmy();
    const auto& model = s.report.model;
    const double p[5] = {3.0, 4.0, 4.0, 1.1, 0.0};
    std::vector<double> zq(500);
    for (std::size_t i = 0; i < zq.size(); ++i)
        zq[i] = 75.0 * (static_cast<double>(i) + 0.5) / 500.0;
    const auto vals = interpolate(model, s.preset.family, p, zq);
    double worst = 0.0;
    for (std::size_t i = 0; i < zq.size(); ++i) {
        const double direct =
            models::cgmy_integrand(models::CgmyParams(3.0, 4.0, 4.0, 1.1), 0.0, zq[i]);
        worst = std::max(worst, std::abs(vals[i] - direct));
    }
    // trained to 1e-11; allow three orders for off-grid/closure noise
    CHECK(worst <= 1e-8);
}

TEST_CASE("interpolation rejects out-of-domain queries and empty models") {
    const auto& s = small_cgmy();
    const double p[5] = {3.0, 4.0, 4.0, 1.1, 0.0};
    const double bad[1] = {80.0};
    CHECK_THROWS_AS(
        interpolate(s.report.model, s.preset.family, p, std::span<const double>(bad, 1)),
        std::invalid_argument);
}

TEST_CASE("constant family weight equals the interval length") {
    const auto fam = testsupport::const_family({0.0, 2.0});
    ParameterCloud cloud({Interval{1.0, 5.0}}, {1.0, 5.0}, 0);
    const auto domain = DiscreteDomain::uniform(fam.domain, 32);
    const auto report = train<double>(fam, cloud, domain, {.tol = 1e-13, .max_terms = 4});
    REQUIRE(report.model.size() == 1);
    const auto w = quad_weights(report.model, fam, {.abs_tol = 1e-14});
    CHECK(std::abs(w[0] - 2.0) <= 1e-13);
    const double p[1] = {5.0};
    CHECK(std::abs(integrate(report.model, std::span<const double>(w), fam, p) - 10.0) <=
          1e-12);
}

TEST_CASE("rank-1 sine weight has the closed form 2 / sin(z*)") {
    const auto fam = testsupport::sin_family();
    ParameterCloud cloud({Interval{1.0, 3.0}}, {1.0, 2.0, 3.0}, 0);
    const auto domain = DiscreteDomain::uniform(fam.domain, 101); // contains pi/2 exactly
    const auto report = train<double>(fam, cloud, domain, {.tol = 1e-12, .max_terms = 4});
    REQUIRE(report.model.size() == 1);
    const auto w = quad_weights(report.model, fam, {.abs_tol = 1e-13});
    CHECK(std::abs(w[0] - 2.0) <= 1e-12); // z* = pi/2, sin(z*) = 1
}

TEST_CASE("exp family integration against the closed antiderivative") {
    const auto preset = models::make_preset("exp-test");
    const auto cloud = ParameterCloud::sample_uniform(preset.box, 50, 11);
    const auto domain = DiscreteDomain::chebyshev(preset.family.domain, 200);
    const double tol = 1e-12;
    const auto report = train<double>(preset.family, cloud, domain, {.tol = tol, .max_terms = 30});
    auto model = report.model;
    model.weights = quad_weights(model, preset.family, {.abs_tol = tol / 10.0});

    const double p[1] = {0.5};
    const double got =
        integrate(model, std::span<const double>(model.weights), preset.family, p);
    const double want = (std::exp(0.5) - std::exp(-0.5)) / 0.5;
    CHECK(std::abs(got - want) <= 10.0 * tol);
}

TEST_CASE("weight tolerance precondition") {
    const auto& s = small_cgmy();
    CHECK_THROWS_AS(quad_weights(s.report.model, s.preset.family, {.abs_tol = 1e-3}),
                    std::invalid_argument);
}

TEST_CASE("weight integration failure surfaces as non-convergence") {
    const auto& s = small_cgmy();
    WeightQuadOptions opts{.abs_tol = 1e-12, .max_evals = 30};
    CHECK_THROWS_AS(quad_weights(s.report.model, s.preset.family, opts),
                    QuadratureNonConvergenceError);
}

TEST_CASE("cgmy magic integration matches the adaptive oracle on fresh parameters") {
    const auto& s = small_cgmy();
    auto model = s.report.model;
    model.weights = quad_weights(model, s.preset.family, {.abs_tol = 1e-12});
    const auto fresh = ParameterCloud::sample_uniform(model.box, 100, 31337);
    double worst = 0.0;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        const auto p = fresh.sample(i);
        const double got =
            integrate(model, std::span<const double>(model.weights), s.preset.family, p);
        const double want = models::cgmy_density_oracle(
            models::CgmyParams(p[0], p[1], p[2], p[3]), p[4], 1e-13);
        worst = std::max(worst, std::abs(got - want));
    }
    CHECK(worst <= 1e-7); // reduced-size model; full-size acceptance demands 1e-9
}

TEST_CASE("rule at a trained magic parameter matches the oracle to quadrature accuracy") {
    const auto& s = small_cgmy();
    auto model = s.report.model;
    const double quad_tol = 1e-12;
    model.weights = quad_weights(model, s.preset.family, {.abs_tol = quad_tol});
    for (std::size_t j : {std::size_t{0}, model.size() / 2, model.size() - 1}) {
        const auto p = model.magic_param(j);
        const double rule =
            integrate(model, std::span<const double>(model.weights), s.preset.family, p);
        const double oracle = models::cgmy_density_oracle(
            models::CgmyParams(p[0], p[1], p[2], p[3]), p[4], quad_tol);
        CHECK(std::abs(rule - oracle) <= 10.0 * quad_tol);
    }
}

TEST_CASE("quadrature consistency: rule equals direct integration of the interpolant") {
    const auto& s = small_cgmy();
    auto model = s.report.model;
    const double quad_tol = 1e-12;
    model.weights = quad_weights(model, s.preset.family, {.abs_tol = quad_tol});
    const auto fresh = ParameterCloud::sample_uniform(model.box, 20, 777);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        const auto p = fresh.sample(i);
        const double rule =
            integrate(model, std::span<const double>(model.weights), s.preset.family, p);
        // integrate the interpolant I_M(h)(p, .) directly
        const auto g = magic_values(model, s.preset.family, p);
        const auto c = interpolation_coefficients(model, std::span<const double>(g));
        const std::size_t M = model.size();
        std::vector<double> a(M, 0.0);
        for (std::size_t j = 0; j < M; ++j)
            for (std::size_t k = 0; k <= j; ++k) a[k] += c[j] * model.basis_coeffs[j * M + k];
        auto interp = [&](double z) {
            double acc = 0.0;
            for (std::size_t k = 0; k < M; ++k) {
                const auto mp = model.magic_param(k);
                acc += a[k] * models::cgmy_integrand(
                                  models::CgmyParams(mp[0], mp[1], mp[2], mp[3]), mp[4], z);
            }
            return acc;
        };
        auto direct = quad::integrate_adaptive(interp, model.grid.front(), model.grid.back(),
                                               quad_tol, 0.0, 200000);
        CHECK(direct.converged);
        CHECK(std::abs(rule - direct.real_value()) <= 10.0 * quad_tol);
    }
}

TEST_CASE("snapshot coefficient reconstruction") {
    SUBCASE("single basis function") {
        const auto fam = testsupport::const_family({0.0, 2.0});
        ParameterCloud cloud({Interval{1.0, 5.0}}, {2.0}, 0);
        const auto domain = DiscreteDomain::uniform(fam.domain, 16);
        const auto report = train<double>(fam, cloud, domain, {.tol = 1e-13, .max_terms = 2});
        REQUIRE(report.model.size() == 1);
        const auto beta = snapshot_coefficients(report.model);
        CHECK(std::abs(beta[0] - 1.0 / 2.0) <= 1e-15); // 1 / h_{p*}(z*) with h = 2
    }

    SUBCASE("rank-2 polynomial family") {
        const auto fam = testsupport::poly_family(2, {-1.0, 1.0});
        const auto cloud =
            ParameterCloud::sample_uniform({Interval{-1.0, 1.0}, Interval{-1.0, 1.0}}, 20, 13);
        const auto domain = DiscreteDomain::uniform(fam.domain, 40);
        const auto report = train<double>(fam, cloud, domain, {.tol = 0.0, .max_terms = 8});
        REQUIRE(report.model.size() == 2);
        const auto& model = report.model;
        const auto beta = snapshot_coefficients(model);

        // theta_m = sum_j (B^{-1})_{jm} q_j on the grid, vs sum_j beta[m][j] h_{p*_j}
        const std::size_t M = model.size();
        for (std::size_t m = 0; m < M; ++m) {
            for (std::size_t col = 0; col < model.grid.size(); ++col) {
                // theta via B^{-1}: solve B x = e_m, theta = sum x_j q_j
                std::vector<double> x(M, 0.0);
                for (std::size_t j = 0; j < M; ++j) {
                    double acc = (j == m) ? 1.0 : 0.0;
                    for (std::size_t k = 0; k < j; ++k) acc -= model.b[j * M + k] * x[k];
                    x[j] = acc;
                }
                double theta = 0.0;
                for (std::size_t j = 0; j < M; ++j)
                    theta += x[j] * model.basis_grid[j * model.grid.size() + col];
                double recon = 0.0;
                for (std::size_t j = 0; j < M; ++j) {
                    const auto p = model.magic_param(j);
                    recon += beta[m * M + j] * fam.eval(p, model.grid[col]).real();
                }
                CHECK(std::abs(theta - recon) <= 1e-12);
            }
        }
    }

    SUBCASE("cgmy model grid reconstruction") {
        // the beta coefficients grow like 1/pivot, so re-evaluating the
        // snapshots puts an eps/pivot cancellation floor under the pointwise
        // identity; a moderately trained model keeps that floor below 1e-9
        const auto preset = models::make_preset("cgmy");
        const auto cloud = ParameterCloud::sample_uniform(preset.box, 300, 42);
        const auto domain = DiscreteDomain::uniform(preset.family.domain, 300);
        const auto report =
            train<double>(preset.family, cloud, domain, {.tol = 1e-5, .max_terms = 40});
        const auto& model = report.model;
        const std::size_t M = model.size();
        const auto beta = snapshot_coefficients(model);
        double worst = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            std::vector<double> x(M, 0.0);
            for (std::size_t j = 0; j < M; ++j) {
                double acc = (j == m) ? 1.0 : 0.0;
                for (std::size_t k = 0; k < j; ++k) acc -= model.b[j * M + k] * x[k];
                x[j] = acc;
            }
            for (std::size_t col = 0; col < model.grid.size(); col += 13) {
                double theta = 0.0;
                for (std::size_t j = 0; j < M; ++j)
                    theta += x[j] * model.basis_grid[j * model.grid.size() + col];
                double recon = 0.0;
                for (std::size_t j = 0; j < M; ++j) {
                    const auto p = model.magic_param(j);
                    recon += beta[m * M + j] *
                             models::cgmy_integrand(models::CgmyParams(p[0], p[1], p[2], p[3]),
                                                    p[4], model.grid[col]);
                }
                worst = std::max(worst, std::abs(theta - recon));
            }
        }
        CHECK(worst <= 1e-9);
    }

    SUBCASE("cgmy tight model: scaled consistency and the integration view") {
        const auto& s = small_cgmy();
        auto model = s.report.model;
        const std::size_t M = model.size();
        const auto beta = snapshot_coefficients(model);
        model.weights = quad_weights(model, s.preset.family, {.abs_tol = 1e-12});

        // pointwise identity, scaled by the cancellation mass of each row
        double worst_scaled = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            std::vector<double> x(M, 0.0);
            for (std::size_t j = 0; j < M; ++j) {
                double acc = (j == m) ? 1.0 : 0.0;
                for (std::size_t k = 0; k < j; ++k) acc -= model.b[j * M + k] * x[k];
                x[j] = acc;
            }
            for (std::size_t col = 0; col < model.grid.size(); col += 29) {
                double theta = 0.0;
                for (std::size_t j = 0; j < M; ++j)
                    theta += x[j] * model.basis_grid[j * model.grid.size() + col];
                double recon = 0.0, mass = 1.0;
                for (std::size_t j = 0; j < M; ++j) {
                    const auto p = model.magic_param(j);
                    const double hj = models::cgmy_integrand(
                        models::CgmyParams(p[0], p[1], p[2], p[3]), p[4], model.grid[col]);
                    recon += beta[m * M + j] * hj;
                    mass += std::abs(beta[m * M + j] * hj);
                }
                worst_scaled = std::max(worst_scaled, std::abs(theta - recon) / mass);
            }
        }
        CHECK(worst_scaled <= 1e-12);

        // parameter-interpolation view of the integral: snapshot-integral
        // errors (<= ~10 * oracle tol each) enter scaled by the beta row
        // mass, so the honest comparison bound is the propagated one (an
        // algebra bug would blow it by many orders)
        const double oracle_tol = 1e-13;
        std::vector<double> snapshot_ints(M);
        for (std::size_t j = 0; j < M; ++j) {
            const auto p = model.magic_param(j);
            snapshot_ints[j] = models::cgmy_density_oracle(
                models::CgmyParams(p[0], p[1], p[2], p[3]), p[4], oracle_tol);
        }
        const auto fresh = ParameterCloud::sample_uniform(model.box, 20, 999);
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            const auto p = fresh.sample(i);
            const double rule =
                integrate(model, std::span<const double>(model.weights), s.preset.family, p);
            const auto g = magic_values(model, s.preset.family, p);
            double via_beta = 0.0, propagated = 0.0;
            for (std::size_t m = 0; m < M; ++m) {
                double wsum = 0.0, mass = 0.0;
                for (std::size_t j = 0; j < M; ++j) {
                    wsum += beta[m * M + j] * snapshot_ints[j];
                    mass += std::abs(beta[m * M + j]);
                }
                via_beta += g[m] * wsum;
                propagated += std::abs(g[m]) * mass;
            }
            const double bound = 20.0 * oracle_tol * propagated + 1e-11;
            CHECK(std::abs(rule - via_beta) <= bound);
        }
    }
}

TEST_CASE("double integral over a discrete parameter measure") {
    const auto fam = testsupport::sin_family();
    ParameterCloud cloud({Interval{1.0, 3.0}}, {1.0, 2.0, 3.0}, 0);
    const auto domain = DiscreteDomain::uniform(fam.domain, 101);
    const auto report = train<double>(fam, cloud, domain, {.tol = 1e-12, .max_terms = 4});
    auto model = report.model;
    model.weights = quad_weights(model, fam, {.abs_tol = 1e-13});
    const std::span<const double> w(model.weights);

    SUBCASE("single node with weight 1 degenerates to integrate()") {
        const std::vector<std::vector<double>> nodes{{2.5}};
        const std::vector<double> pw{1.0};
        const double via_double = integrate_double(model, w, fam, nodes, pw);
        const double direct = integrate(model, w, fam, nodes[0]);
        CHECK(via_double == doctest::Approx(direct).epsilon(1e-15));
    }

    SUBCASE("two equal-weight nodes average the single integrals (linear family)") {
        const std::vector<std::vector<double>> nodes{{1.2}, {2.8}};
        const std::vector<double> pw{0.5, 0.5};
        const double via_double = integrate_double(model, w, fam, nodes, pw);
        const double avg = 0.5 * (integrate(model, w, fam, nodes[0]) +
                                  integrate(model, w, fam, nodes[1]));
        CHECK(std::abs(via_double - avg) <= 1e-14);
    }

    SUBCASE("mismatched node/weight lengths are rejected") {
        const std::vector<std::vector<double>> nodes{{1.2}};
        const std::vector<double> pw{0.5, 0.5};
        CHECK_THROWS_AS(integrate_double(model, w, fam, nodes, pw), std::invalid_argument);
    }
}

TEST_CASE("cgmy double integral against a nested adaptive oracle") {
    const auto& s = small_cgmy();
    auto model = s.report.model;
    model.weights = quad_weights(model, s.preset.family, {.abs_tol = 1e-12});

    // 20-node midpoint grid over C in [1, 5], other coordinates fixed
    const std::size_t nodes_n = 20;
    std::vector<std::vector<double>> nodes;
    std::vector<double> pw(nodes_n, 4.0 / nodes_n);
    for (std::size_t i = 0; i < nodes_n; ++i) {
        const double c = 1.0 + 4.0 * (static_cast<double>(i) + 0.5) / nodes_n;
        nodes.push_back({c, 4.0, 4.0, 1.1, 0.25});
    }
    const double got = integrate_double(model, std::span<const double>(model.weights),
                                        s.preset.family, nodes, pw);

    double want = 0.0; // same discrete measure, oracle inner integrals
    for (std::size_t i = 0; i < nodes_n; ++i)
        want += pw[i] * models::cgmy_density_oracle(
                            models::CgmyParams(nodes[i][0], 4.0, 4.0, 1.1), 0.25, 1e-13);
    CHECK(std::abs(got - want) <= 1e-7);
}
