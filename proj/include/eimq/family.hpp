#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eimq/interval.hpp"

namespace eimq {

enum class ValueKind { Real, Complex };

/// A parametric integrand family (p, z) -> h_p(z). This is the only view the
/// training and integration operators have of a problem. Evaluators must be
/// pure: deterministic, finite on the declared box x domain, and free of
/// shared mutable state (snapshots may be evaluated from several threads).
struct ParametricFamily {
    std::string tag;
    int param_dim = 0;
    Interval domain;
    ValueKind kind = ValueKind::Real;
    std::function<std::complex<double>(std::span<const double>, double)> eval;
};

/// Discretization of the integration domain: strictly increasing points
/// inside the family domain; magic points are selected from this set.
class DiscreteDomain {
public:
    DiscreteDomain() = default;
    explicit DiscreteDomain(std::vector<double> points);

    static DiscreteDomain uniform(Interval domain, std::size_t count);
    /// Chebyshev-Gauss-Lobatto points (endpoints included), ascending.
    static DiscreteDomain chebyshev(Interval domain, std::size_t count);

    const std::vector<double>& points() const { return points_; }
    std::size_t count() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    Interval hull() const { return {points_.front(), points_.back()}; }

private:
    std::vector<double> points_;
};

/// Discrete parameter cloud P^disc: seeded uniform samples from a box.
class ParameterCloud {
public:
    ParameterCloud() = default;
    ParameterCloud(std::vector<Interval> box, std::vector<double> samples,
                   std::uint64_t seed);

    /// Draws `count` samples uniformly from `box` with a fully specified
    /// generator (mt19937_64 + 53-bit mantissa mapping), so clouds are
    /// bit-identical across platforms for a given seed.
    static ParameterCloud sample_uniform(const std::vector<Interval>& box,
                                         std::size_t count, std::uint64_t seed);

    std::size_t size() const { return box_.empty() ? 0 : data_.size() / box_.size(); }
    std::size_t dim() const { return box_.size(); }
    std::span<const double> sample(std::size_t i) const {
        return {data_.data() + i * box_.size(), box_.size()};
    }
    const std::vector<Interval>& box() const { return box_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<double>& raw() const { return data_; }

private:
    std::vector<Interval> box_;
    std::vector<double> data_; // row-major size() x dim()
    std::uint64_t seed_ = 0;
};

/// Uniform double in [0,1) from the high 53 bits of one engine draw.
/// std::uniform_real_distribution is implementation-defined; this is not.
double uniform01(std::uint64_t engine_draw);

bool inside_box(std::span<const Interval> box, std::span<const double> p);

} // namespace eimq
