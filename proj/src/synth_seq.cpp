#include "summatoria/synth_seq.hpp"

#include "summatoria/errors.hpp"

#include <algorithm>
#include <cmath>

namespace summatoria {

namespace {

constexpr std::uint64_t kValidityScan = 10'000;

std::vector<double> default_weights(std::size_t l)
{
    std::vector<double> w(l, 0.0);
    if (l >= 2) {
        w[0] = 1.0;
        w[1] = -1.0;
    }
    return w;
}

} // namespace

std::string_view to_string(PerturbationKind kind) noexcept
{
    switch (kind) {
    case PerturbationKind::none:
        return "none";
    case PerturbationKind::log:
        return "log";
    case PerturbationKind::log2:
        return "log2";
    case PerturbationKind::custom:
        return "custom";
    }
    return "custom";
}

TwoPointSchedule::TwoPointSchedule(std::vector<double> values, std::vector<double> base_probs, PerturbationKind kind,
                                   std::vector<double> weights)
    : values_(std::move(values)), base_probs_(std::move(base_probs)), weights_(std::move(weights)), kind_(kind)
{
    if (kind_ == PerturbationKind::custom)
        throw ArgumentError("custom perturbations need a shape; use TwoPointSchedule::custom");
    validate();
}

TwoPointSchedule TwoPointSchedule::custom(std::vector<double> values, std::vector<double> base_probs,
                                          std::function<double(std::uint64_t)> shape, std::vector<double> weights)
{
    if (!shape)
        throw ArgumentError("custom perturbation shape is empty");
    TwoPointSchedule s(std::move(values), std::move(base_probs), PerturbationKind::none, std::move(weights));
    s.kind_ = PerturbationKind::custom;
    s.custom_shape_ = std::move(shape);
    s.validate();
    if (!s.decay_contract_holds())
        throw ArgumentError("custom perturbation violates the decay contract n * |eps(n)| -> 0");
    return s;
}

void TwoPointSchedule::validate()
{
    const std::size_t l = values_.size();
    if (l < 2)
        throw ArgumentError("a schedule needs at least two values");
    if (base_probs_.size() != l)
        throw ArgumentError("schedule has " + std::to_string(l) + " values but " +
                            std::to_string(base_probs_.size()) + " base probabilities");
    if (weights_.empty())
        weights_ = default_weights(l);
    if (weights_.size() != l)
        throw ArgumentError("perturbation weights must match the number of values");
    for (std::size_t i = 0; i < l; ++i) {
        if (!std::isfinite(values_[i]) || !std::isfinite(weights_[i]))
            throw ArgumentError("schedule values and weights must be finite");
        for (std::size_t j = 0; j < i; ++j)
            if (values_[i] == values_[j])
                throw ArgumentError("schedule values must be distinct");
        if (!(base_probs_[i] >= 0.0 && base_probs_[i] <= 1.0))
            throw ArgumentError("base probability " + std::to_string(i + 1) + " outside [0, 1]");
    }
    double total = 0.0;
    double weight_total = 0.0;
    base_mean_ = 0.0;
    weighted_spread_ = 0.0;
    for (std::size_t i = 0; i < l; ++i) {
        total += base_probs_[i];
        weight_total += weights_[i];
        base_mean_ += values_[i] * base_probs_[i];
        weighted_spread_ += values_[i] * weights_[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ArgumentError("base probabilities sum to " + std::to_string(total) + ", not 1");
    if (std::abs(weight_total) > 1e-12)
        throw ArgumentError("perturbation weights must sum to zero");

    n_min_ = 1;
    for (std::uint64_t n = 1; n <= kValidityScan; ++n) {
        const auto p = raw_probabilities(n);
        const bool valid = std::all_of(p.begin(), p.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
        if (!valid)
            n_min_ = n + 1;
    }
}

double TwoPointSchedule::shape(std::uint64_t n) const
{
    if (n < 1)
        throw ArgumentError("schedule index must be positive");
    const double x = static_cast<double>(n) + 1.0;
    switch (kind_) {
    case PerturbationKind::none:
        return 0.0;
    case PerturbationKind::log:
        return 1.0 / (x * std::log(x));
    case PerturbationKind::log2: {
        const double lg = std::log(x);
        return 1.0 / (x * lg * lg);
    }
    case PerturbationKind::custom:
        return custom_shape_(n);
    }
    return 0.0;
}

std::vector<double> TwoPointSchedule::raw_probabilities(std::uint64_t n) const
{
    const double g = shape(n);
    std::vector<double> p(values_.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = base_probs_[i] + weights_[i] * g;
    return p;
}

double TwoPointSchedule::probability(std::size_t i, std::uint64_t n) const
{
    if (i >= values_.size())
        throw ArgumentError("probability index out of range");
    if (n >= n_min_)
        return base_probs_[i] + weights_[i] * shape(n);
    auto p = raw_probabilities(n);
    double total = 0.0;
    for (double& x : p) {
        x = std::clamp(x, 0.0, 1.0);
        total += x;
    }
    return p[i] / total;
}

bool TwoPointSchedule::decay_contract_holds() const
{
    double prev = -1.0;
    for (std::uint64_t n = 100; n <= 100'000'000; n *= 2) {
        const double scaled = std::abs(shape(n)) * static_cast<double>(n);
        if (!std::isfinite(scaled))
            return false;
        if (prev >= 0.0 && scaled > 1.1 * prev)
            return false;
        prev = scaled;
    }
    return true;
}

TwoPointSchedule paper_log_example()
{
    return TwoPointSchedule({1.0, -1.0}, {0.5, 0.5}, PerturbationKind::log);
}

TwoPointSchedule paper_log2_example()
{
    return TwoPointSchedule({1.0, 0.0}, {0.5, 0.5}, PerturbationKind::log2);
}

TwoPointSchedule fair_coin()
{
    return TwoPointSchedule({1.0, -1.0}, {0.5, 0.5}, PerturbationKind::none);
}

double schedule_mean(const TwoPointSchedule& s, std::uint64_t n)
{
    if (n < 1)
        throw ArgumentError("schedule index must be positive");
    // Split form keeps the o(1/n) correction from cancelling against the base.
    if (n >= s.n_min())
        return s.base_mean() + s.shape(n) * s.weighted_spread();
    double mean = 0.0;
    for (std::size_t i = 0; i < s.arity(); ++i)
        mean += s.values()[i] * s.probability(i, n);
    return mean;
}

double schedule_summatory(const TwoPointSchedule& s, std::uint64_t n)
{
    return static_cast<double>(n) * schedule_mean(s, n);
}

ArithmeticSequence realize_greedy(const TwoPointSchedule& s, std::uint64_t N)
{
    if (s.arity() != 2)
        throw UnsupportedArityError("greedy realization supports exactly two values, schedule has " +
                                    std::to_string(s.arity()));
    if (N < 1)
        throw ArgumentError("realization length must be positive");
    const double a1 = s.values()[0];
    const double a2 = s.values()[1];
    std::vector<double> f(N);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double target = static_cast<double>(n) * s.probability(0, n);
        if (static_cast<double>(count) + 0.5 <= target) {
            f[n - 1] = a1;
            ++count;
        } else {
            f[n - 1] = a2;
        }
    }
    std::string name = "synth:" + std::string(to_string(s.kind()));
    return ArithmeticSequence::synthesized(std::move(name), std::move(f));
}

nlohmann::json schedule_to_json(const TwoPointSchedule& s)
{
    if (s.kind() == PerturbationKind::custom)
        throw ArgumentError("custom perturbations cannot be serialized");
    nlohmann::json j;
    j["values"] = std::vector<double>(s.values().begin(), s.values().end());
    j["base_probs"] = std::vector<double>(s.base_probs().begin(), s.base_probs().end());
    j["perturbation"] = {{"kind", std::string(to_string(s.kind()))}, {"n_min", s.n_min()}};
    const auto defaults = default_weights(s.arity());
    if (!std::equal(defaults.begin(), defaults.end(), s.weights().begin()))
        j["weights"] = std::vector<double>(s.weights().begin(), s.weights().end());
    return j;
}

TwoPointSchedule schedule_from_json(const nlohmann::json& j)
{
    try {
        auto values = j.at("values").get<std::vector<double>>();
        auto probs = j.at("base_probs").get<std::vector<double>>();
        const auto kind_name = j.at("perturbation").at("kind").get<std::string>();
        PerturbationKind kind = PerturbationKind::none;
        if (kind_name == "log")
            kind = PerturbationKind::log;
        else if (kind_name == "log2")
            kind = PerturbationKind::log2;
        else if (kind_name != "none")
            throw ArgumentError("unknown perturbation kind '" + kind_name + "'");
        std::vector<double> weights;
        if (j.contains("weights"))
            weights = j.at("weights").get<std::vector<double>>();
        return TwoPointSchedule(std::move(values), std::move(probs), kind, std::move(weights));
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed schedule JSON: ") + e.what());
    }
}

} // namespace summatoria
