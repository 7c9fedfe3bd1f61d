#include "summatoria/empirical.hpp"

#include "summatoria/compensated_sum.hpp"
#include "summatoria/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace summatoria {

namespace {

void check_prefix(const ArithmeticSequence& f, std::uint64_t n)
{
    if (n < 1)
        throw ArgumentError("n must be positive");
    if (n > f.bound())
        throw BoundError("n = " + std::to_string(n) + " exceeds the domain of sequence '" + f.name() + "'");
}

} // namespace

double empirical_mean(const ArithmeticSequence& f, std::uint64_t n)
{
    check_prefix(f, n);
    if (f.integer_valued()) {
        std::int64_t sum = 0;
        f.for_each_chunk(1, n, [&](std::uint64_t, std::span<const double> v) {
            for (const double x : v)
                sum += static_cast<std::int64_t>(x);
        });
        return static_cast<double>(sum) / static_cast<double>(n);
    }
    CompensatedSum sum;
    f.for_each_chunk(1, n, [&](std::uint64_t, std::span<const double> v) {
        for (const double x : v)
            sum.add(x);
    });
    return sum.value() / static_cast<double>(n);
}

Moments empirical_moments(const ArithmeticSequence& f, std::uint64_t n)
{
    check_prefix(f, n);
    const auto dn = static_cast<double>(n);
    Moments m;
    if (f.integer_valued()) {
        std::int64_t s1 = 0;
        std::int64_t s2 = 0;
        f.for_each_chunk(1, n, [&](std::uint64_t, std::span<const double> v) {
            for (const double x : v) {
                const auto i = static_cast<std::int64_t>(x);
                s1 += i;
                s2 += i * i;
            }
        });
        m.mean = static_cast<double>(s1) / dn;
        m.variance = static_cast<double>(s2) / dn - m.mean * m.mean;
    } else {
        // Shifting by f(1) leaves the variance unchanged and avoids
        // cancellation when the mean dominates the spread.
        const double shift = f.at(1);
        CompensatedSum s1;
        CompensatedSum s2;
        f.for_each_chunk(1, n, [&](std::uint64_t, std::span<const double> v) {
            for (const double x : v) {
                const double d = x - shift;
                s1.add(d);
                s2.add(d * d);
            }
        });
        const double centered = s1.value() / dn;
        m.mean = centered + shift;
        m.variance = s2.value() / dn - centered * centered;
    }
    m.variance = std::max(0.0, m.variance);
    return m;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values) : sample_(std::move(values))
{
    if (sample_.empty())
        throw ArgumentError("empirical distribution needs a nonempty sample");
    for (const double x : sample_)
        if (!std::isfinite(x))
            throw ArgumentError("empirical distribution sample contains a non-finite value");
    std::sort(sample_.begin(), sample_.end());

    const auto n = static_cast<double>(sample_.size());
    CompensatedSum sum;
    for (const double x : sample_)
        sum.add(x);
    mean_ = sum.value() / n;
    CompensatedSum sq;
    for (const double x : sample_)
        sq.add((x - mean_) * (x - mean_));
    variance_ = sq.value() / n;
}

double EmpiricalDistribution::cdf(double x) const
{
    const auto it = std::upper_bound(sample_.begin(), sample_.end(), x);
    return static_cast<double>(it - sample_.begin()) / static_cast<double>(sample_.size());
}

double EmpiricalDistribution::cdf_left(double x) const
{
    const auto it = std::lower_bound(sample_.begin(), sample_.end(), x);
    return static_cast<double>(it - sample_.begin()) / static_cast<double>(sample_.size());
}

EmpiricalDistribution empirical_cdf(std::vector<double> values)
{
    return EmpiricalDistribution(std::move(values));
}

double standard_normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double ks_distance(const EmpiricalDistribution& dist, Reference reference, Standardize standardize)
{
    const auto sample = dist.sample();
    const std::size_t n = sample.size();
    const bool rescale = reference == Reference::standard_normal && standardize == Standardize::self;
    double center = 0.0;
    double sd = 1.0;
    if (rescale) {
        center = dist.mean();
        sd = std::sqrt(dist.variance());
        if (!(sd > 0.0))
            throw DegenerateSampleError("zero-variance sample cannot be standardized for a normal reference");
    }
    auto reference_cdf = [&](double x) {
        if (reference == Reference::uniform01)
            return std::clamp(x, 0.0, 1.0);
        return standard_normal_cdf((x - center) / sd);
    };

    double d = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sample[j] == sample[i])
            ++j;
        const double f = reference_cdf(sample[i]);
        const double below = static_cast<double>(i) / static_cast<double>(n);
        const double at = static_cast<double>(j) / static_cast<double>(n);
        d = std::max({d, std::abs(at - f), std::abs(below - f)});
        i = j;
    }
    return d;
}

double independence_estimator(const ArithmeticSequence& f, std::uint64_t n, std::uint64_t h)
{
    if (n < 1)
        throw ArgumentError("n must be positive");
    if (h < 1)
        throw ArgumentError("lag h must be positive");
    if (n + h > f.bound())
        throw BoundError("n + h = " + std::to_string(n + h) + " exceeds the domain of sequence '" + f.name() + "'");

    const double shift = f.at(1);
    // ring[k mod h] holds f(k) - shift until f(k + h) arrives.
    std::vector<double> ring(h, 0.0);
    CompensatedSum products;
    CompensatedSum lead;
    CompensatedSum lagged;
    f.for_each_chunk(1, n + h, [&](std::uint64_t first, std::span<const double> v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::uint64_t k = first + i;
            const double g = v[i] - shift;
            double& slot = ring[k % h];
            if (k > h) {
                products.add(slot * g);
                lagged.add(g);
            }
            if (k <= n)
                lead.add(g);
            slot = g;
        }
    });
    const auto dn = static_cast<double>(n);
    return products.value() / dn - (lead.value() / dn) * (lagged.value() / dn);
}

std::vector<double> calibration_sample(CalibrationLaw law, std::size_t size, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<double> out;
    out.reserve(size);
    if (law == CalibrationLaw::uniform01) {
        while (out.size() < size)
            out.push_back(unit());
        return out;
    }
    while (out.size() < size) {
        const double u1 = 1.0 - unit(); // (0, 1]
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        out.push_back(r * std::cos(theta));
        if (out.size() < size)
            out.push_back(r * std::sin(theta));
    }
    return out;
}

} // namespace summatoria
