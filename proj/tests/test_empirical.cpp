#include <doctest.h>

#include "summatoria/empirical.hpp"
#include "summatoria/errors.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace summatoria;

TEST_CASE("empirical means and moments")
{
    const auto mu = ArithmeticSequence::mobius(SieveConfig{});
    const auto lambda = ArithmeticSequence::liouville(SieveConfig{});
    CHECK(empirical_mean(mu, 10) == -0.1);
    CHECK(empirical_mean(lambda, 10) == 0.0);
    CHECK(empirical_mean(constant_sequence(1.0), 12345) == 1.0);

    const auto m = empirical_moments(mu, 10);
    CHECK(m.mean == -0.1);
    CHECK(m.variance == doctest::Approx(0.69).epsilon(1e-15));
    CHECK(empirical_moments(lambda, 10).variance == 1.0);
    CHECK(empirical_moments(constant_sequence(3.7), 1000).variance == 0.0);
    CHECK_THROWS_AS(empirical_mean(constant_sequence(1.0, 10), 11), BoundError);
}

TEST_CASE("property: n * mean equals the exact summatory value")
{
    const auto mu = ArithmeticSequence::mobius(SieveConfig{});
    oracle::Gen gen(17);
    for (int i = 0; i < 30; ++i) {
        const auto n = gen.integer(1, 200'000);
        const auto trace = summatory_trace(mu, n, std::vector<std::uint64_t>{n});
        // The mean is the correctly rounded quotient of the exact integer sum,
        // so multiplying back recovers S(n) up to one rounding.
        const auto s = static_cast<double>(trace.integer_values()[0]);
        const double mean = empirical_mean(mu, n);
        CHECK(mean == s / static_cast<double>(n));
        CHECK(std::round(mean * static_cast<double>(n)) == s);
    }
}

TEST_CASE("property: variance is shift invariant and scales by c^2")
{
    oracle::Gen gen(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(gen.integer(2, 500));
        for (auto& x : v)
            x = gen.real(-5.0, 5.0);
        const double shift = gen.real(-1e3, 1e3);
        const double scale = gen.real(0.1, 10.0);
        std::vector<double> shifted = v;
        std::vector<double> scaled = v;
        for (std::size_t i = 0; i < v.size(); ++i) {
            shifted[i] += shift;
            scaled[i] *= scale;
        }
        const auto base = empirical_moments(ArithmeticSequence::synthesized("v", v), v.size()).variance;
        const auto s = empirical_moments(ArithmeticSequence::synthesized("s", shifted), v.size()).variance;
        const auto c = empirical_moments(ArithmeticSequence::synthesized("c", scaled), v.size()).variance;
        CHECK(std::abs(s - base) <= 1e-10 * base);
        CHECK(std::abs(c - scale * scale * base) <= 1e-10 * scale * scale * base);
        CHECK(EmpiricalDistribution(v).variance() == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("empirical CDF")
{
    CHECK(empirical_cdf({3, 1, 2}).cdf(1.5) == doctest::Approx(1.0 / 3.0));
    const auto one = empirical_cdf({5});
    CHECK(one.cdf(4.9) == 0.0);
    CHECK(one.cdf(5.0) == 1.0);
    CHECK(one.cdf_left(5.0) == 0.0);
    CHECK(empirical_cdf({1, 1, 2, 2}).cdf(1.0) == 0.5);
    CHECK_THROWS_AS(empirical_cdf({}), ArgumentError);
    CHECK_THROWS_AS(empirical_cdf({1.0, NAN}), ArgumentError);
}

TEST_CASE("property: the empirical CDF is a valid distribution function")
{
    oracle::Gen gen(29);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(gen.integer(1, 200));
        for (auto& x : v)
            x = std::round(gen.real(-10.0, 10.0));
        const auto d = empirical_cdf(v);
        CHECK(std::is_sorted(d.sample().begin(), d.sample().end()));
        CHECK(d.cdf(d.sample().front() - 1.0) == 0.0);
        CHECK(d.cdf(d.sample().back()) == 1.0);
        double prev = 0.0;
        for (double x = -12.0; x <= 12.0; x += 0.25) {
            CHECK(d.cdf(x) >= prev);
            CHECK(d.cdf_left(x) <= d.cdf(x));
            prev = d.cdf(x);
        }
    }
}

TEST_CASE("standard normal CDF against an independent quantile function")
{
    for (double p : {1e-9, 0.001, 0.1, 0.3, 0.5, 0.77, 0.99, 1.0 - 1e-9}) {
        const double z = oracle::normal_quantile(p);
        CHECK(std::abs(standard_normal_cdf(z) - p) <= 1e-10);
    }
}

TEST_CASE("KS distance on constructed samples")
{
    // Quantile grid: F_hat straddles Phi by exactly 1/(2n) at every point.
    const std::size_t n = 100;
    std::vector<double> grid;
    for (std::size_t i = 1; i <= n; ++i)
        grid.push_back(oracle::normal_quantile((static_cast<double>(i) - 0.5) / static_cast<double>(n)));
    const EmpiricalDistribution g(grid);
    const double d = ks_distance(g, Reference::standard_normal, Standardize::none);
    CHECK(d <= 0.5 / static_cast<double>(n) + 1e-6);
    CHECK(d >= 0.5 / static_cast<double>(n) - 1e-6);
    // Self-standardization stretches the grid (its population sd is 0.977),
    // which moves D off the 1/(2n) construction.
    CHECK(ks_distance(g, Reference::standard_normal) == doctest::Approx(0.0065446).epsilon(1e-4));

    CHECK(ks_distance(EmpiricalDistribution({0.5}), Reference::uniform01) == 0.5);
    CHECK_THROWS_AS(ks_distance(EmpiricalDistribution({2.0, 2.0}), Reference::standard_normal),
                    DegenerateSampleError);
}

TEST_CASE("KS distance against the uniform law on an unstandardized grid")
{
    const std::size_t n = 1000;
    std::vector<double> grid;
    for (std::size_t i = 1; i <= n; ++i)
        grid.push_back((static_cast<double>(i) - 0.5) / static_cast<double>(n));
    CHECK(ks_distance(EmpiricalDistribution(grid), Reference::uniform01) == doctest::Approx(0.5 / n).epsilon(1e-9));
}

TEST_CASE("property: KS distance is invariant under increasing affine maps")
{
    oracle::Gen gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> v(gen.integer(3, 400));
        for (auto& x : v)
            x = gen.real(-3.0, 3.0) * gen.real(0.0, 2.0);
        const double a = gen.real(0.01, 100.0);
        const double b = gen.real(-50.0, 50.0);
        std::vector<double> w = v;
        for (auto& x : w)
            x = a * x + b;
        const double d1 = ks_distance(EmpiricalDistribution(v), Reference::standard_normal);
        const double d2 = ks_distance(EmpiricalDistribution(w), Reference::standard_normal);
        CHECK(std::abs(d1 - d2) < 1e-12);
    }
}

TEST_CASE("seeded calibration samples")
{
    const std::size_t n = 10'000;
    const double critical = kKsCritical1Percent / std::sqrt(static_cast<double>(n));
    const auto normal = calibration_sample(CalibrationLaw::standard_normal, n, 20190118);
    const auto uniform = calibration_sample(CalibrationLaw::uniform01, n, 20190118);
    CHECK(normal == calibration_sample(CalibrationLaw::standard_normal, n, 20190118));
    CHECK(normal != calibration_sample(CalibrationLaw::standard_normal, n, 1));
    CHECK(ks_distance(EmpiricalDistribution(normal), Reference::standard_normal) <= critical);
    CHECK(ks_distance(EmpiricalDistribution(uniform), Reference::standard_normal) > critical);
    CHECK(ks_distance(EmpiricalDistribution(uniform), Reference::uniform01) <= critical);
    CHECK(std::all_of(uniform.begin(), uniform.end(), [](double u) { return u >= 0.0 && u < 1.0; }));
}

TEST_CASE("independence estimator")
{
    CHECK(independence_estimator(constant_sequence(0.1), 777, 3) == 0.0);
    CHECK(independence_estimator(constant_sequence(-4.0), 10, 1) == 0.0);
    CHECK(independence_estimator(alternating_sequence(), 1000, 1) == -1.0);
    CHECK(independence_estimator(alternating_sequence(), 1000, 2) == 1.0);

    const auto mu = ArithmeticSequence::mobius(SieveConfig{});
    const auto values = mu.materialize(1, 10'010);
    for (std::uint64_t h : {1, 2, 5, 10}) {
        const double rho = independence_estimator(mu, 10'000, h);
        CHECK(std::abs(rho - oracle::lag_covariance(values, 10'000, h)) <= 1e-12);
    }
    CHECK_THROWS_AS(independence_estimator(constant_sequence(1.0, 100), 99, 2), BoundError);
}

TEST_CASE("property: independence estimator matches the double-pass oracle")
{
    oracle::Gen gen(37);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = gen.integer(1, 3000);
        const std::size_t h = gen.integer(1, 12);
        std::vector<double> v(n + h);
        for (auto& x : v)
            x = gen.real(-2.0, 2.0) + 100.0;
        const double rho = independence_estimator(ArithmeticSequence::synthesized("v", v), n, h);
        CHECK(std::abs(rho - oracle::lag_covariance(v, n, h)) <= 1e-12);
    }
}
