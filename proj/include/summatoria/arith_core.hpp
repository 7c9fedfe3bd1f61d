#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace summatoria {

// Trial-division oracles are a test fixture; above this bound only the
// sieve path exists.
inline constexpr std::uint64_t kOracleBound = 10'000'000;
inline constexpr std::uint64_t kDefaultGlobalBound = 1'000'000'000;
inline constexpr std::size_t kDefaultBlockSize = std::size_t{1} << 20;

struct SieveConfig {
    std::uint64_t global_bound = kDefaultGlobalBound;
    std::size_t block_size = kDefaultBlockSize;
    unsigned threads = 1;

    // Defaults, with block_size taken from SUMMATORIA_BLOCK_SIZE when set.
    static SieveConfig from_environment();
};

/// Möbius function by trial division. Throws BoundError outside [1, kOracleBound].
int mobius_oracle(std::uint64_t n);

/// Liouville function (-1)^Omega(n) by trial division, Omega counted with
/// multiplicity. Throws BoundError outside [1, kOracleBound].
int liouville_oracle(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n) noexcept;

/// All primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// mu and lambda over the closed range [lo, hi].
class SieveBlock {
public:
    SieveBlock(std::uint64_t lo, std::uint64_t hi, std::vector<std::int8_t> mu,
               std::vector<std::int8_t> lambda);

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }
    std::size_t size() const noexcept { return mu_.size(); }

    std::span<const std::int8_t> mu() const noexcept { return mu_; }
    std::span<const std::int8_t> lambda() const noexcept { return lambda_; }

    int mu_at(std::uint64_t k) const { return mu_.at(k - lo_); }
    int lambda_at(std::uint64_t k) const { return lambda_.at(k - lo_); }

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int8_t> lambda_;
};

// Segmented sieve over [1, limit]. Keeps the base primes up to sqrt(limit)
// so repeated block requests do not re-sieve them.
class MobiusSieve {
public:
    explicit MobiusSieve(std::uint64_t limit, SieveConfig config = SieveConfig::from_environment());

    std::uint64_t limit() const noexcept { return limit_; }
    const SieveConfig& config() const noexcept { return config_; }

    SieveBlock block(std::uint64_t lo, std::uint64_t hi) const;

    // Visits [lo, hi] in consecutive blocks of config().block_size entries,
    // strictly in increasing order. Up to config().threads blocks are sieved
    // concurrently; delivery order does not depend on the thread count.
    void stream(std::uint64_t lo, std::uint64_t hi,
                const std::function<void(const SieveBlock&)>& visit) const;

private:
    std::uint64_t limit_;
    SieveConfig config_;
    std::vector<std::uint32_t> primes_;
};

/// One block, sieved with the primes <= sqrt(hi).
SieveBlock sieve_block(std::uint64_t lo, std::uint64_t hi,
                       const SieveConfig& config = SieveConfig::from_environment());

enum class AccumulationKind { exact_integer, compensated_float };

class SummatoryTrace {
public:
    static SummatoryTrace exact(std::vector<std::uint64_t> checkpoints, std::vector<std::int64_t> values);
    static SummatoryTrace compensated(std::vector<std::uint64_t> checkpoints, std::vector<double> values);

    AccumulationKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return checkpoints_.size(); }
    std::span<const std::uint64_t> checkpoints() const noexcept { return checkpoints_; }
    std::span<const double> values() const noexcept { return values_; }
    // Empty unless kind() == exact_integer.
    std::span<const std::int64_t> integer_values() const noexcept { return integer_values_; }

private:
    SummatoryTrace() = default;

    AccumulationKind kind_ = AccumulationKind::exact_integer;
    std::vector<std::uint64_t> checkpoints_;
    std::vector<double> values_;
    std::vector<std::int64_t> integer_values_;
};

// Throws ArgumentError unless checkpoints is nonempty, strictly increasing,
// and within [1, N].
void validate_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t N);

// round(start * ratio^j) for j = 0, 1, ... while <= N, deduplicated.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t start, double ratio, std::uint64_t N);

SummatoryTrace mertens_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                             const SieveConfig& config = SieveConfig::from_environment());
SummatoryTrace liouville_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                               const SieveConfig& config = SieveConfig::from_environment());
/// Sum of mu(k)/k with compensated accumulation in increasing k.
SummatoryTrace weighted_mobius_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                                     const SieveConfig& config = SieveConfig::from_environment());

// CSV with header "n,S". Integers print without exponent, floats with 17
// significant digits.
void write_trace_csv(std::ostream& os, const SummatoryTrace& trace);

} // namespace summatoria
