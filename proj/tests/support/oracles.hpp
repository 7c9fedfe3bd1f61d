#pragma once

// Reference computations that share no code with the library. Slow by design.

#include <boost/math/distributions/normal.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace oracle {

// (prime, exponent) pairs by plain trial division.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline int mu(std::uint64_t n)
{
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

inline int lambda(std::uint64_t n)
{
    int omega = 0;
    for (const auto& [p, e] : factorize(n))
        omega += e;
    return omega % 2 == 0 ? 1 : -1;
}

inline std::int64_t mertens(std::uint64_t n)
{
    std::int64_t s = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        s += mu(k);
    return s;
}

// sum_{k<=n} mu(k)/k in exact rational arithmetic.
inline double weighted_mobius(std::uint64_t n)
{
    boost::multiprecision::cpp_rational s = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (const int m = mu(k); m != 0)
            s += boost::multiprecision::cpp_rational(m, static_cast<long long>(k));
    return static_cast<double>(s);
}

// H_n - ln n in 50-digit arithmetic.
inline double harmonic_gap(std::uint64_t n)
{
    using big = boost::multiprecision::cpp_bin_float_50;
    big s = 0;
    for (std::uint64_t k = n; k >= 1; --k)
        s += big(1) / big(k);
    return static_cast<double>(s - log(big(n)));
}

// Two passes: means first, then the centred lag products.
inline double lag_covariance(std::span<const double> f, std::size_t n, std::size_t h)
{
    long double lead = 0;
    long double lagged = 0;
    for (std::size_t k = 0; k < n; ++k) {
        lead += f[k];
        lagged += f[k + h];
    }
    lead /= n;
    lagged /= n;
    long double acc = 0;
    for (std::size_t k = 0; k < n; ++k)
        acc += (f[k] - lead) * (f[k + h] - lagged);
    return static_cast<double>(acc / n);
}

inline double normal_quantile(double p)
{
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

// Small seeded generator for hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
