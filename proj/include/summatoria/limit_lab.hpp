#pragma once

#include "summatoria/arith_core.hpp"
#include "summatoria/sequence.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace summatoria {

enum class RemainderClass { decaying, bounded, growing, inconclusive };

std::string_view to_string(RemainderClass c) noexcept;

struct ClassifierParams {
    double slope_threshold = 0.1;
    // |r| at or below this counts as an exact zero and is left out of the fit.
    double floor = 1e-13;
};

// A sampled remainder r(n_j) labelled o(1) (decaying), O(1) (bounded) or
// growing from its log-log slope and a first/last quartile comparison.
struct RemainderFit {
    std::vector<std::uint64_t> checkpoints;
    std::vector<double> remainders;
    RemainderClass cls = RemainderClass::inconclusive;
    double loglog_slope = 0.0;
    double slope_stderr = 0.0;
    std::vector<std::string> notes;
};

// Rules, in order:
//  - any non-finite remainder: inconclusive;
//  - every remainder in the trailing half at or below the floor: decaying
//    (the remainder is identically zero there);
//  - more than half the checkpoints at or below the floor: inconclusive;
//  - slope < -threshold and max|r| over the last quartile below the first
//    quartile's: decaying;
//  - |slope| <= threshold: bounded;
//  - slope > threshold: growing;
//  - otherwise inconclusive.
RemainderFit classify_remainders(std::span<const std::uint64_t> checkpoints, std::span<const double> remainders,
                                 const ClassifierParams& params = {});

struct Mu0Estimate {
    double value = 0.0;     // S(n_m) / n_m
    double stability = 0.0; // value - S(n_{m-1}) / n_{m-1}
};

/// Needs at least 4 checkpoints.
Mu0Estimate estimate_mu0(const SummatoryTrace& trace);

/// r(n_j) = S(n_j) - n_j * mu0. The mean-rate condition M[f_n] = mu0 + o(1/n)
/// holds iff r = o(1). Consecutive checkpoint ratios below 1.5 add a note.
RemainderFit mean_rate_fit(const SummatoryTrace& trace, double mu0, const ClassifierParams& params = {});

// A summand given on the reals so that its integral from 1 can be taken.
struct ElementaryFunction {
    std::string name;
    std::function<double(double)> value;
    // Optional. When empty the integral is computed by adaptive quadrature.
    std::function<double(double)> antiderivative;
};

ElementaryFunction harmonic_summand();
ElementaryFunction inverse_square_summand();
ElementaryFunction constant_summand(double c);

/// r(n_j) = sum_{k <= n_j} f(k) - integral_1^{n_j} f(t) dt. Bounded
/// elementary summands leave an O(1) gap here.
/// Throws NumericError when quadrature cannot reach 1e-10 absolute error.
RemainderFit euler_maclaurin_gap(const ElementaryFunction& f, std::uint64_t N,
                                 std::span<const std::uint64_t> checkpoints, const ClassifierParams& params = {});

struct KsPoint {
    std::uint64_t n = 0;
    double distance = 0.0; // NaN when {S(k)} has zero variance
};

struct LimitVerdict {
    std::string function;
    std::uint64_t N = 0;
    std::vector<std::uint64_t> checkpoints;
    double mu0_hat = 0.0;
    RemainderFit mean_rate;
    RemainderFit asymptotic_form;
    std::vector<KsPoint> ks_trace;
    bool conditions_met = false;
    std::vector<std::string> notes;
};

/// Case S(n) -> 0: mu0 is forced to 0 and conditions_met is true iff S(n_j)
/// itself classifies as decaying. bound_B is the declared |f| bound; a trace
/// whose increments exceed it is noted.
LimitVerdict assertion4_check(const SummatoryTrace& trace, double bound_B, const ClassifierParams& params = {});

// At most this many partial sums enter each KS evaluation; longer prefixes
// are subsampled by a uniform stride.
inline constexpr std::size_t kKsSampleLimit = 1'000'000;

/// KS distance to the standard normal of the self-standardized partial sums
/// {S(k): k <= n_j} at each checkpoint. Zero-variance checkpoints give NaN
/// and, when notes is given, a note.
std::vector<KsPoint> partial_sum_ks_trace(const ArithmeticSequence& f, std::uint64_t N,
                                          std::span<const std::uint64_t> checkpoints,
                                          std::vector<std::string>* notes = nullptr);

/// Trace, mu0 estimate, remainder fits, and KS distances of the
/// self-standardized partial sums {S(k): k <= n_j}. conditions_met requires
/// both fits to be decaying; the KS trace never gates it.
LimitVerdict full_verdict(const ArithmeticSequence& f, std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                          const ClassifierParams& params = {});

// {function, N, checkpoints[], mu0_hat, mean_rate:{class,slope,stderr},
//  asymptotic_form:{class,slope,stderr}, ks_trace:[{n,D}], conditions_met, notes}
nlohmann::json verdict_to_json(const LimitVerdict& verdict);

// {function, N, checkpoints[], remainders[], class, slope, stderr, notes}
nlohmann::json remainder_fit_to_json(const RemainderFit& fit, std::string_view function, std::uint64_t N);

} // namespace summatoria
