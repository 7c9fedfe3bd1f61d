#pragma once

#include "summatoria/sequence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace summatoria {

// Statistics of an arithmetic function restricted to {1..n} under the
// uniform measure P_n(A) = |A| / n.

/// M[f, n] = (f(1) + ... + f(n)) / n. Exact integer sum for integer-valued f.
double empirical_mean(const ArithmeticSequence& f, std::uint64_t n);

struct Moments {
    double mean = 0.0;
    double variance = 0.0; // population convention, divide by n
};

Moments empirical_moments(const ArithmeticSequence& f, std::uint64_t n);

// Sorted sample with right-continuous empirical CDF.
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(std::vector<double> values);

    std::span<const double> sample() const noexcept { return sample_; }
    std::size_t size() const noexcept { return sample_.size(); }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return variance_; }

    // (count of sample <= x) / n
    double cdf(double x) const;
    // (count of sample < x) / n
    double cdf_left(double x) const;

private:
    std::vector<double> sample_;
    double mean_ = 0.0;
    double variance_ = 0.0;
};

EmpiricalDistribution empirical_cdf(std::vector<double> values);

enum class Reference { standard_normal, uniform01 };

// Phi(z) = erfc(-z / sqrt 2) / 2 using the C library erfc, whose error is a
// few ulp; far below the 1e-10 needed here.
double standard_normal_cdf(double z);

enum class Standardize { self, none };

/// Kolmogorov-Smirnov distance sup |F_hat - F| evaluated at both one-sided
/// limits of every sample point. Against standard_normal the sample is first
/// standardized by its own mean and population standard deviation unless
/// Standardize::none is passed; the uniform reference never rescales.
/// Throws DegenerateSampleError for a zero-variance sample being standardized.
double ks_distance(const EmpiricalDistribution& dist, Reference reference, Standardize standardize = Standardize::self);

/// rho(n, h) = (1/n) sum f(k) f(k+h) - [(1/n) sum f(k)] [(1/n) sum f(k+h)], k = 1..n.
/// Computed in one pass on values shifted by f(1); rho is shift invariant and
/// the shift makes a constant f give exactly 0.
double independence_estimator(const ArithmeticSequence& f, std::uint64_t n, std::uint64_t h);

enum class CalibrationLaw { standard_normal, uniform01 };

// Portable seeded draws: mt19937_64 with 53-bit uniforms and Box-Muller
// normals. Standard library distributions are implementation-defined.
std::vector<double> calibration_sample(CalibrationLaw law, std::size_t size, std::uint64_t seed);

// One-percent critical coefficient of the KS statistic: reject when
// D > 1.63 / sqrt(n).
inline constexpr double kKsCritical1Percent = 1.63;

} // namespace summatoria
