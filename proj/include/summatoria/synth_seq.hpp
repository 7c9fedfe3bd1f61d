#pragma once

#include "summatoria/sequence.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace summatoria {

// Shape g(n) of the perturbation; eps_i(n) = weight_i * g(n).
//   none:  g = 0
//   log:   g = 1 / ((n+1) ln(n+1))
//   log2:  g = 1 / ((n+1) ln^2(n+1))
//   custom: user formula
enum class PerturbationKind { none, log, log2, custom };

std::string_view to_string(PerturbationKind kind) noexcept;

// Values a_1..a_l taken with probabilities p_in = p_i0 + eps_i(n), where the
// perturbation weights sum to zero and n * eps_i(n) -> 0.
//
// Below n_min() the raw probabilities leave [0, 1]; there they are clamped
// and renormalized. n_min() is found by scanning n = 1..10^4.
class TwoPointSchedule {
public:
    // Weights default to (+1, -1, 0, ..., 0).
    TwoPointSchedule(std::vector<double> values, std::vector<double> base_probs, PerturbationKind kind,
                     std::vector<double> weights = {});

    static TwoPointSchedule custom(std::vector<double> values, std::vector<double> base_probs,
                                   std::function<double(std::uint64_t)> shape, std::vector<double> weights = {});

    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> base_probs() const noexcept { return base_probs_; }
    std::span<const double> weights() const noexcept { return weights_; }
    PerturbationKind kind() const noexcept { return kind_; }
    std::uint64_t n_min() const noexcept { return n_min_; }
    std::size_t arity() const noexcept { return values_.size(); }

    double shape(std::uint64_t n) const;
    // p_in after clamping, i.e. the probabilities the schedule actually uses.
    double probability(std::size_t i, std::uint64_t n) const;
    double base_mean() const noexcept { return base_mean_; }
    // sum_i a_i * weight_i, so that M[f_n] = base_mean + g(n) * weighted_spread for n >= n_min.
    double weighted_spread() const noexcept { return weighted_spread_; }

    // |eps_i(n)| * n non-increasing within 10% slack at n = 100 * 2^j up to 10^8.
    bool decay_contract_holds() const;

private:
    void validate();
    std::vector<double> raw_probabilities(std::uint64_t n) const;

    std::vector<double> values_;
    std::vector<double> base_probs_;
    std::vector<double> weights_;
    PerturbationKind kind_;
    std::function<double(std::uint64_t)> custom_shape_;
    std::uint64_t n_min_ = 1;
    double base_mean_ = 0.0;
    double weighted_spread_ = 0.0;
};

/// a = (+1, -1), p0 = (1/2, 1/2), eps_1 = 1/((n+1) ln(n+1)) = -eps_2.
TwoPointSchedule paper_log_example();
/// a = (1, 0), p0 = (1/2, 1/2), eps_1 = 1/((n+1) ln^2(n+1)) = -eps_2.
TwoPointSchedule paper_log2_example();
/// a = (+1, -1), p0 = (1/2, 1/2), no perturbation.
TwoPointSchedule fair_coin();

/// M[f_n] = sum_i a_i p_in.
double schedule_mean(const TwoPointSchedule& s, std::uint64_t n);
/// S(n) = n * M[f_n].
double schedule_summatory(const TwoPointSchedule& s, std::uint64_t n);

/// Deterministic two-valued realization f(1..N). Step n emits a_1 iff the
/// running count of a_1 plus one is within 1/2 of the target n * p_1n, i.e.
/// the value whose running count lags its target most wins and ties go to a_1.
/// Throws UnsupportedArityError unless the schedule has exactly two values.
ArithmeticSequence realize_greedy(const TwoPointSchedule& s, std::uint64_t N);

// {values[], base_probs[], perturbation: {kind, n_min}}; "weights" is added
// only when they differ from (+1, -1, 0, ...).
nlohmann::json schedule_to_json(const TwoPointSchedule& s);
TwoPointSchedule schedule_from_json(const nlohmann::json& j);

} // namespace summatoria
