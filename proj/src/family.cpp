#include "eimq/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "eimq/errors.hpp"

namespace eimq {

DiscreteDomain::DiscreteDomain(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        throw ConfigError("discrete domain needs at least 2 points");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i] > points_[i - 1]))
            throw ConfigError("discrete domain points must be strictly increasing");
}

DiscreteDomain DiscreteDomain::uniform(Interval domain, std::size_t count) {
    if (count < 2) throw ConfigError("grid size must be >= 2");
    if (!(domain.lo < domain.hi)) throw ConfigError("domain must have positive length");
    std::vector<double> pts(count);
    const double h = domain.length() / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        pts[i] = domain.lo + static_cast<double>(i) * h;
    pts.back() = domain.hi;
    return DiscreteDomain(std::move(pts));
}

DiscreteDomain DiscreteDomain::chebyshev(Interval domain, std::size_t count) {
    if (count < 2) throw ConfigError("grid size must be >= 2");
    if (!(domain.lo < domain.hi)) throw ConfigError("domain must have positive length");
    std::vector<double> pts(count);
    const double mid = domain.midpoint();
    const double half = 0.5 * domain.length();
    for (std::size_t i = 0; i < count; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(count - 1 - i) /
                             static_cast<double>(count - 1);
        pts[i] = mid + half * std::cos(theta);
    }
    pts.front() = domain.lo;
    pts.back() = domain.hi;
    return DiscreteDomain(std::move(pts));
}

double uniform01(std::uint64_t draw) {
    return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

bool inside_box(std::span<const Interval> box, std::span<const double> p) {
    if (box.size() != p.size()) return false;
    for (std::size_t d = 0; d < box.size(); ++d)
        if (!box[d].contains(p[d])) return false;
    return true;
}

ParameterCloud::ParameterCloud(std::vector<Interval> box, std::vector<double> samples,
                               std::uint64_t seed)
    : box_(std::move(box)), data_(std::move(samples)), seed_(seed) {
    if (box_.empty()) throw ConfigError("parameter box must not be empty");
    if (data_.size() % box_.size() != 0)
        throw ConfigError("sample data size is not a multiple of the box dimension");
    const std::size_t n = data_.size() / box_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!inside_box(box_, sample(i)))
            throw ConfigError("cloud sample outside the parameter box");
}

ParameterCloud ParameterCloud::sample_uniform(const std::vector<Interval>& box,
                                              std::size_t count, std::uint64_t seed) {
    if (box.empty()) throw ConfigError("parameter box must not be empty");
    if (count == 0) throw ConfigError("cloud size must be positive");
    for (const Interval& iv : box)
        if (!(iv.lo <= iv.hi)) throw ConfigError("box interval with lo > hi");

    std::mt19937_64 eng(seed);
    std::vector<double> data(count * box.size());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t d = 0; d < box.size(); ++d)
            data[i * box.size() + d] = box[d].lo + uniform01(eng()) * box[d].length();

    ParameterCloud cloud(std::vector<Interval>(box), std::move(data), seed);

    // pairwise distinctness: sort row views lexicographically, compare neighbours
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    const std::size_t dim = box.size();
    const double* raw = cloud.data_.data();
    auto row_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(raw + a * dim, raw + (a + 1) * dim,
                                            raw + b * dim, raw + (b + 1) * dim);
    };
    std::sort(order.begin(), order.end(), row_less);
    for (std::size_t i = 1; i < count; ++i)
        if (std::equal(raw + order[i - 1] * dim, raw + order[i - 1] * dim + dim,
                       raw + order[i] * dim))
            throw ConfigError("duplicate sample in parameter cloud (degenerate box or seed)");
    return cloud;
}

} // namespace eimq
