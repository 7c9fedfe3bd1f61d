#pragma once

#include "summatoria/arith_core.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace summatoria {

enum class SequenceKind { sieve_mobius, sieve_liouville, sieve_mobius_over_k, closed_form, synthesized };

// A bounded real-valued function on 1..bound(). Evaluation is pure: the same
// k always yields the same value. Copies share the underlying storage.
class ArithmeticSequence {
public:
    using Formula = std::function<double(std::uint64_t)>;
    using ChunkVisitor = std::function<void(std::uint64_t first_k, std::span<const double> values)>;

    static ArithmeticSequence mobius(SieveConfig config = SieveConfig::from_environment());
    static ArithmeticSequence liouville(SieveConfig config = SieveConfig::from_environment());
    static ArithmeticSequence mobius_over_k(SieveConfig config = SieveConfig::from_environment());

    // |formula(k)| <= magnitude_bound is checked on a sample of indices.
    static ArithmeticSequence closed_form(std::string name, Formula formula, double magnitude_bound,
                                          std::uint64_t bound = kDefaultGlobalBound, bool integer_valued = false);

    // f(k) = values[k - 1]; bound = values.size().
    static ArithmeticSequence synthesized(std::string name, std::vector<double> values);

    SequenceKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    std::uint64_t bound() const noexcept { return bound_; }
    double magnitude_bound() const noexcept { return magnitude_bound_; }
    bool integer_valued() const noexcept { return integer_valued_; }
    const SieveConfig& sieve_config() const noexcept { return sieve_config_; }

    double at(std::uint64_t k) const;

    // Delivers f(first..last) as consecutive chunks in increasing k.
    void for_each_chunk(std::uint64_t first, std::uint64_t last, const ChunkVisitor& visit) const;

    std::vector<double> materialize(std::uint64_t first, std::uint64_t last) const;

    // Synthesized storage, empty for other kinds.
    std::span<const double> stored_values() const noexcept;

private:
    ArithmeticSequence() = default;
    void check_index(std::uint64_t k) const;

    SequenceKind kind_ = SequenceKind::closed_form;
    std::string name_;
    std::uint64_t bound_ = 0;
    double magnitude_bound_ = 0.0;
    bool integer_valued_ = false;
    SieveConfig sieve_config_;
    Formula formula_;
    std::shared_ptr<const std::vector<double>> stored_;
};

ArithmeticSequence constant_sequence(double c, std::uint64_t bound = kDefaultGlobalBound);
ArithmeticSequence harmonic_sequence(std::uint64_t bound = kDefaultGlobalBound);
ArithmeticSequence inverse_square_sequence(std::uint64_t bound = kDefaultGlobalBound);
// (-1)^k
ArithmeticSequence alternating_sequence(std::uint64_t bound = kDefaultGlobalBound);

/// Summatory trace of f at the checkpoints. Integer-valued sequences are
/// accumulated exactly, everything else with compensated summation.
SummatoryTrace summatory_trace(const ArithmeticSequence& f, std::uint64_t N,
                               std::span<const std::uint64_t> checkpoints);

// "k,f" CSV with a header row, values printed with 17 significant digits.
void write_sequence_csv(std::ostream& os, const ArithmeticSequence& f, std::uint64_t N);
ArithmeticSequence read_sequence_csv(std::istream& is, std::string name);

} // namespace summatoria
