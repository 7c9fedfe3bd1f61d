#include "summatoria/arith_core.hpp"

#include "summatoria/compensated_sum.hpp"
#include "summatoria/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <ostream>
#include <string>

namespace summatoria {

SieveConfig SieveConfig::from_environment()
{
    SieveConfig config;
    if (const char* env = std::getenv("SUMMATORIA_BLOCK_SIZE"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long size = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || size == 0)
            throw ArgumentError("SUMMATORIA_BLOCK_SIZE must be a positive integer, got '" + std::string(env) + "'");
        config.block_size = static_cast<std::size_t>(size);
    }
    return config;
}

namespace {

void check_oracle_bound(std::uint64_t n)
{
    if (n == 0 || n > kOracleBound)
        throw BoundError("oracle argument " + std::to_string(n) + " outside [1, " +
                         std::to_string(kOracleBound) + "]");
}

} // namespace

int mobius_oracle(std::uint64_t n)
{
    check_oracle_bound(n);
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

int liouville_oracle(std::uint64_t n)
{
    check_oracle_bound(n);
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            sign = -sign;
        }
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

std::uint64_t isqrt(std::uint64_t n) noexcept
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

SieveBlock::SieveBlock(std::uint64_t lo, std::uint64_t hi, std::vector<std::int8_t> mu,
                       std::vector<std::int8_t> lambda)
    : lo_(lo), hi_(hi), mu_(std::move(mu)), lambda_(std::move(lambda))
{
    if (lo < 1 || lo > hi || mu_.size() != hi - lo + 1 || lambda_.size() != mu_.size())
        throw RangeError("inconsistent sieve block [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

namespace {

void check_block_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    if (lo < 1 || lo > hi)
        throw RangeError("invalid sieve range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (hi > config.global_bound)
        throw RangeError("sieve range end " + std::to_string(hi) + " exceeds global bound " +
                         std::to_string(config.global_bound));
    if (hi - lo + 1 > config.block_size)
        throw CapacityError("sieve block of " + std::to_string(hi - lo + 1) +
                            " entries exceeds block size limit " + std::to_string(config.block_size));
}

// For every k in [lo, hi]: divide out each prime p <= sqrt(hi) with
// multiplicity, tracking the product of the removed prime powers. A leftover
// cofactor k / product > 1 is a single prime above sqrt(hi).
SieveBlock sieve_with(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> primes)
{
    const std::size_t len = hi - lo + 1;
    std::vector<std::int8_t> mu(len, 1);
    std::vector<std::int8_t> lambda(len, 1);
    std::vector<std::uint64_t> product(len, 1);

    for (const std::uint64_t p : primes) {
        if (p * p > hi)
            break;
        for (std::uint64_t k = (lo + p - 1) / p * p; k <= hi; k += p) {
            const std::size_t i = k - lo;
            product[i] *= p;
            mu[i] = static_cast<std::int8_t>(-mu[i]);
            lambda[i] = static_cast<std::int8_t>(-lambda[i]);
        }
        const std::uint64_t square = p * p;
        for (std::uint64_t k = (lo + square - 1) / square * square; k <= hi; k += square)
            mu[k - lo] = 0;
        for (std::uint64_t power = square; power <= hi; power *= p) {
            for (std::uint64_t k = (lo + power - 1) / power * power; k <= hi; k += power) {
                const std::size_t i = k - lo;
                product[i] *= p;
                lambda[i] = static_cast<std::int8_t>(-lambda[i]);
            }
            if (power > hi / p)
                break;
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        if (product[i] != lo + i) {
            mu[i] = static_cast<std::int8_t>(-mu[i]);
            lambda[i] = static_cast<std::int8_t>(-lambda[i]);
        }
    }
    return SieveBlock(lo, hi, std::move(mu), std::move(lambda));
}

} // namespace

MobiusSieve::MobiusSieve(std::uint64_t limit, SieveConfig config)
    : limit_(limit), config_(config)
{
    if (limit < 1 || limit > config.global_bound)
        throw RangeError("sieve limit " + std::to_string(limit) + " outside [1, " +
                         std::to_string(config.global_bound) + "]");
    if (config_.block_size == 0)
        throw ArgumentError("block size must be positive");
    if (config_.threads == 0)
        config_.threads = 1;
    primes_ = primes_up_to(isqrt(limit));
}

SieveBlock MobiusSieve::block(std::uint64_t lo, std::uint64_t hi) const
{
    check_block_range(lo, hi, config_);
    if (hi > limit_)
        throw RangeError("sieve range end " + std::to_string(hi) + " exceeds sieve limit " +
                         std::to_string(limit_));
    return sieve_with(lo, hi, primes_);
}

void MobiusSieve::stream(std::uint64_t lo, std::uint64_t hi,
                         const std::function<void(const SieveBlock&)>& visit) const
{
    if (lo < 1 || lo > hi)
        throw RangeError("invalid sieve range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    const std::uint64_t step = config_.block_size;
    std::uint64_t next = lo;
    while (next <= hi) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
        for (unsigned t = 0; t < config_.threads && next <= hi; ++t) {
            const std::uint64_t end = std::min(hi, next + step - 1);
            batch.emplace_back(next, end);
            next = end + 1;
        }
        if (batch.size() == 1) {
            visit(block(batch.front().first, batch.front().second));
            continue;
        }
        std::vector<std::future<SieveBlock>> pending;
        pending.reserve(batch.size());
        for (const auto& [a, b] : batch)
            pending.push_back(std::async(std::launch::async, [this, a = a, b = b] { return block(a, b); }));
        for (auto& f : pending)
            visit(f.get());
    }
}

SieveBlock sieve_block(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    check_block_range(lo, hi, config);
    const auto primes = primes_up_to(isqrt(hi));
    return sieve_with(lo, hi, primes);
}

SummatoryTrace SummatoryTrace::exact(std::vector<std::uint64_t> checkpoints, std::vector<std::int64_t> values)
{
    if (checkpoints.size() != values.size())
        throw ArgumentError("trace checkpoints and values differ in length");
    SummatoryTrace t;
    t.kind_ = AccumulationKind::exact_integer;
    t.checkpoints_ = std::move(checkpoints);
    t.values_.assign(values.begin(), values.end());
    t.integer_values_ = std::move(values);
    return t;
}

SummatoryTrace SummatoryTrace::compensated(std::vector<std::uint64_t> checkpoints, std::vector<double> values)
{
    if (checkpoints.size() != values.size())
        throw ArgumentError("trace checkpoints and values differ in length");
    SummatoryTrace t;
    t.kind_ = AccumulationKind::compensated_float;
    t.checkpoints_ = std::move(checkpoints);
    t.values_ = std::move(values);
    return t;
}

void validate_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t N)
{
    if (checkpoints.empty())
        throw ArgumentError("checkpoint list is empty");
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
        if (checkpoints[j] < 1)
            throw ArgumentError("checkpoint " + std::to_string(j) + " is not positive");
        if (j > 0 && checkpoints[j] <= checkpoints[j - 1])
            throw ArgumentError("checkpoints not strictly increasing at position " + std::to_string(j) + " (" +
                                std::to_string(checkpoints[j - 1]) + ", " + std::to_string(checkpoints[j]) + ")");
        if (checkpoints[j] > N)
            throw ArgumentError("checkpoint " + std::to_string(checkpoints[j]) + " exceeds N = " + std::to_string(N));
    }
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t start, double ratio, std::uint64_t N)
{
    if (start < 1)
        throw ArgumentError("geometric schedule start must be positive");
    if (!(ratio > 1.0) || !std::isfinite(ratio))
        throw ArgumentError("geometric schedule ratio must exceed 1");
    if (start > N)
        throw ArgumentError("geometric schedule start " + std::to_string(start) + " exceeds N = " + std::to_string(N));
    std::vector<std::uint64_t> out;
    const double limit = static_cast<double>(N) * (1.0 + 1e-12);
    for (int j = 0;; ++j) {
        const double v = static_cast<double>(start) * std::pow(ratio, j);
        if (v > limit)
            break;
        const auto n = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::llround(v)), N);
        if (out.empty() || n > out.back())
            out.push_back(n);
    }
    return out;
}

namespace {

template <class Accumulator, class Step>
void run_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints, const SieveConfig& config,
               Accumulator& acc, Step step)
{
    validate_checkpoints(checkpoints, N);
    const std::uint64_t last = checkpoints.back();
    MobiusSieve sieve(last, config);
    std::size_t j = 0;
    sieve.stream(1, last, [&](const SieveBlock& b) {
        const auto mu = b.mu();
        const auto lambda = b.lambda();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t k = b.lo() + i;
            step(acc, k, mu[i], lambda[i]);
            if (k == checkpoints[j]) {
                acc.record();
                ++j;
            }
        }
    });
}

struct IntegerAccumulator {
    std::int64_t sum = 0;
    std::vector<std::int64_t> values;
    void record() { values.push_back(sum); }
};

struct FloatAccumulator {
    CompensatedSum sum;
    std::vector<double> values;
    void record() { values.push_back(sum.value()); }
};

} // namespace

SummatoryTrace mertens_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints, const SieveConfig& config)
{
    IntegerAccumulator acc;
    run_trace(N, checkpoints, config, acc,
              [](IntegerAccumulator& a, std::uint64_t, std::int8_t mu, std::int8_t) { a.sum += mu; });
    return SummatoryTrace::exact({checkpoints.begin(), checkpoints.end()}, std::move(acc.values));
}

SummatoryTrace liouville_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                               const SieveConfig& config)
{
    IntegerAccumulator acc;
    run_trace(N, checkpoints, config, acc,
              [](IntegerAccumulator& a, std::uint64_t, std::int8_t, std::int8_t lambda) { a.sum += lambda; });
    return SummatoryTrace::exact({checkpoints.begin(), checkpoints.end()}, std::move(acc.values));
}

SummatoryTrace weighted_mobius_trace(std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                                     const SieveConfig& config)
{
    FloatAccumulator acc;
    run_trace(N, checkpoints, config, acc, [](FloatAccumulator& a, std::uint64_t k, std::int8_t mu, std::int8_t) {
        if (mu != 0)
            a.sum.add(static_cast<double>(mu) / static_cast<double>(k));
    });
    return SummatoryTrace::compensated({checkpoints.begin(), checkpoints.end()}, std::move(acc.values));
}

void write_trace_csv(std::ostream& os, const SummatoryTrace& trace)
{
    os << "n,S\n";
    if (trace.kind() == AccumulationKind::exact_integer) {
        for (std::size_t j = 0; j < trace.size(); ++j)
            os << trace.checkpoints()[j] << ',' << trace.integer_values()[j] << '\n';
        return;
    }
    const auto old_precision = os.precision(17);
    const auto old_flags = os.flags();
    os.unsetf(std::ios::floatfield);
    for (std::size_t j = 0; j < trace.size(); ++j)
        os << trace.checkpoints()[j] << ',' << trace.values()[j] << '\n';
    os.precision(old_precision);
    os.flags(old_flags);
}

} // namespace summatoria
