#include "summatoria/sequence.hpp"

#include "summatoria/compensated_sum.hpp"
#include "summatoria/errors.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace summatoria {

namespace {

constexpr std::uint64_t kMagnitudeProbeDense = 1000;

bool is_integral(double v)
{
    return std::isfinite(v) && std::abs(v) < 9.0e15 && v == std::trunc(v);
}

} // namespace

ArithmeticSequence ArithmeticSequence::mobius(SieveConfig config)
{
    ArithmeticSequence f;
    f.kind_ = SequenceKind::sieve_mobius;
    f.name_ = "mu";
    f.bound_ = config.global_bound;
    f.magnitude_bound_ = 1.0;
    f.integer_valued_ = true;
    f.sieve_config_ = config;
    return f;
}

ArithmeticSequence ArithmeticSequence::liouville(SieveConfig config)
{
    ArithmeticSequence f = mobius(config);
    f.kind_ = SequenceKind::sieve_liouville;
    f.name_ = "lambda";
    return f;
}

ArithmeticSequence ArithmeticSequence::mobius_over_k(SieveConfig config)
{
    ArithmeticSequence f = mobius(config);
    f.kind_ = SequenceKind::sieve_mobius_over_k;
    f.name_ = "mu-over-k";
    f.integer_valued_ = false;
    return f;
}

ArithmeticSequence ArithmeticSequence::closed_form(std::string name, Formula formula, double magnitude_bound,
                                                   std::uint64_t bound, bool integer_valued)
{
    if (!formula)
        throw ArgumentError("closed-form sequence '" + name + "' has no formula");
    if (bound < 1)
        throw ArgumentError("closed-form sequence '" + name + "' has empty domain");
    if (!(magnitude_bound >= 0.0))
        throw ArgumentError("magnitude bound must be non-negative");

    auto probe = [&](std::uint64_t k) {
        const double v = formula(k);
        if (!std::isfinite(v) || std::abs(v) > magnitude_bound)
            throw ArgumentError("sequence '" + name + "' violates its magnitude bound at k = " + std::to_string(k));
        if (integer_valued && !is_integral(v))
            throw ArgumentError("sequence '" + name + "' declared integer-valued but f(" + std::to_string(k) +
                                ") is not an integer");
    };
    for (std::uint64_t k = 1; k <= std::min(bound, kMagnitudeProbeDense); ++k)
        probe(k);
    for (std::uint64_t k = 2 * kMagnitudeProbeDense; k <= bound && k > kMagnitudeProbeDense; k *= 2)
        probe(k);
    probe(bound);

    ArithmeticSequence f;
    f.kind_ = SequenceKind::closed_form;
    f.name_ = std::move(name);
    f.bound_ = bound;
    f.magnitude_bound_ = magnitude_bound;
    f.integer_valued_ = integer_valued;
    f.formula_ = std::move(formula);
    return f;
}

ArithmeticSequence ArithmeticSequence::synthesized(std::string name, std::vector<double> values)
{
    if (values.empty())
        throw ArgumentError("synthesized sequence '" + name + "' is empty");
    double magnitude = 0.0;
    bool integral = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw ArgumentError("synthesized sequence '" + name + "' has a non-finite value at k = " +
                                std::to_string(i + 1));
        magnitude = std::max(magnitude, std::abs(values[i]));
        integral = integral && is_integral(values[i]);
    }
    ArithmeticSequence f;
    f.kind_ = SequenceKind::synthesized;
    f.name_ = std::move(name);
    f.bound_ = values.size();
    f.magnitude_bound_ = magnitude;
    f.integer_valued_ = integral;
    f.stored_ = std::make_shared<const std::vector<double>>(std::move(values));
    return f;
}

void ArithmeticSequence::check_index(std::uint64_t k) const
{
    if (k < 1 || k > bound_)
        throw BoundError("index " + std::to_string(k) + " outside the domain [1, " + std::to_string(bound_) +
                         "] of sequence '" + name_ + "'");
}

double ArithmeticSequence::at(std::uint64_t k) const
{
    check_index(k);
    switch (kind_) {
    case SequenceKind::closed_form:
        return formula_(k);
    case SequenceKind::synthesized:
        return (*stored_)[k - 1];
    default:
        break;
    }
    const SieveBlock b = sieve_block(k, k, sieve_config_);
    switch (kind_) {
    case SequenceKind::sieve_mobius:
        return b.mu()[0];
    case SequenceKind::sieve_liouville:
        return b.lambda()[0];
    default:
        return static_cast<double>(b.mu()[0]) / static_cast<double>(k);
    }
}

void ArithmeticSequence::for_each_chunk(std::uint64_t first, std::uint64_t last, const ChunkVisitor& visit) const
{
    if (first > last)
        throw RangeError("empty index range [" + std::to_string(first) + ", " + std::to_string(last) + "]");
    check_index(first);
    check_index(last);

    switch (kind_) {
    case SequenceKind::synthesized:
        visit(first, std::span<const double>(*stored_).subspan(first - 1, last - first + 1));
        return;
    case SequenceKind::closed_form: {
        const std::uint64_t step = std::max<std::uint64_t>(1, sieve_config_.block_size);
        std::vector<double> buf;
        for (std::uint64_t lo = first; lo <= last;) {
            const std::uint64_t hi = std::min(last, lo + step - 1);
            buf.resize(hi - lo + 1);
            for (std::uint64_t k = lo; k <= hi; ++k)
                buf[k - lo] = formula_(k);
            visit(lo, buf);
            lo = hi + 1;
        }
        return;
    }
    default:
        break;
    }

    const MobiusSieve sieve(last, sieve_config_);
    std::vector<double> buf;
    sieve.stream(first, last, [&](const SieveBlock& b) {
        buf.resize(b.size());
        const auto mu = b.mu();
        const auto lambda = b.lambda();
        for (std::size_t i = 0; i < b.size(); ++i) {
            switch (kind_) {
            case SequenceKind::sieve_mobius:
                buf[i] = mu[i];
                break;
            case SequenceKind::sieve_liouville:
                buf[i] = lambda[i];
                break;
            default:
                buf[i] = static_cast<double>(mu[i]) / static_cast<double>(b.lo() + i);
                break;
            }
        }
        visit(b.lo(), buf);
    });
}

std::vector<double> ArithmeticSequence::materialize(std::uint64_t first, std::uint64_t last) const
{
    std::vector<double> out;
    out.reserve(last >= first ? last - first + 1 : 0);
    for_each_chunk(first, last, [&](std::uint64_t, std::span<const double> v) { out.insert(out.end(), v.begin(), v.end()); });
    return out;
}

std::span<const double> ArithmeticSequence::stored_values() const noexcept
{
    if (!stored_)
        return {};
    return *stored_;
}

ArithmeticSequence constant_sequence(double c, std::uint64_t bound)
{
    std::ostringstream name;
    name << "const:" << c;
    return ArithmeticSequence::closed_form(name.str(), [c](std::uint64_t) { return c; }, std::abs(c), bound,
                                           is_integral(c));
}

ArithmeticSequence harmonic_sequence(std::uint64_t bound)
{
    return ArithmeticSequence::closed_form(
        "harmonic", [](std::uint64_t k) { return 1.0 / static_cast<double>(k); }, 1.0, bound);
}

ArithmeticSequence inverse_square_sequence(std::uint64_t bound)
{
    return ArithmeticSequence::closed_form(
        "inverse-square",
        [](std::uint64_t k) {
            const auto x = static_cast<double>(k);
            return 1.0 / (x * x);
        },
        1.0, bound);
}

ArithmeticSequence alternating_sequence(std::uint64_t bound)
{
    return ArithmeticSequence::closed_form(
        "alternating", [](std::uint64_t k) { return k % 2 == 0 ? 1.0 : -1.0; }, 1.0, bound, true);
}

SummatoryTrace summatory_trace(const ArithmeticSequence& f, std::uint64_t N,
                               std::span<const std::uint64_t> checkpoints)
{
    validate_checkpoints(checkpoints, N);
    if (N > f.bound())
        throw BoundError("N = " + std::to_string(N) + " exceeds the domain of sequence '" + f.name() + "'");

    std::vector<std::uint64_t> cps(checkpoints.begin(), checkpoints.end());
    std::size_t j = 0;
    if (f.integer_valued()) {
        std::int64_t sum = 0;
        std::vector<std::int64_t> values;
        values.reserve(cps.size());
        f.for_each_chunk(1, cps.back(), [&](std::uint64_t first, std::span<const double> v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                sum += static_cast<std::int64_t>(v[i]);
                if (first + i == cps[j]) {
                    values.push_back(sum);
                    ++j;
                }
            }
        });
        return SummatoryTrace::exact(std::move(cps), std::move(values));
    }

    CompensatedSum sum;
    std::vector<double> values;
    values.reserve(cps.size());
    f.for_each_chunk(1, cps.back(), [&](std::uint64_t first, std::span<const double> v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            sum.add(v[i]);
            if (first + i == cps[j]) {
                values.push_back(sum.value());
                ++j;
            }
        }
    });
    return SummatoryTrace::compensated(std::move(cps), std::move(values));
}

void write_sequence_csv(std::ostream& os, const ArithmeticSequence& f, std::uint64_t N)
{
    const auto old_precision = os.precision(17);
    os << "k,f\n";
    f.for_each_chunk(1, N, [&](std::uint64_t first, std::span<const double> v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            os << first + i << ',' << v[i] << '\n';
    });
    os.precision(old_precision);
}

ArithmeticSequence read_sequence_csv(std::istream& is, std::string name)
{
    std::string line;
    if (!std::getline(is, line) || line != "k,f")
        throw ArgumentError("sequence CSV '" + name + "': line 1: expected header 'k,f'");
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        const std::string where = "sequence CSV '" + name + "': line " + std::to_string(line_no);
        if (comma == std::string::npos)
            throw ArgumentError(where + ": expected 'k,f'");
        std::size_t used = 0;
        unsigned long long k = 0;
        double v = 0.0;
        try {
            k = std::stoull(line.substr(0, comma), &used);
            if (used != comma)
                throw std::invalid_argument("k");
            const std::string rest = line.substr(comma + 1);
            v = std::stod(rest, &used);
            if (used != rest.size())
                throw std::invalid_argument("f");
        } catch (const std::logic_error&) {
            throw ArgumentError(where + ": malformed field");
        }
        if (k != values.size() + 1)
            throw ArgumentError(where + ": expected k = " + std::to_string(values.size() + 1));
        values.push_back(v);
    }
    return ArithmeticSequence::synthesized(std::move(name), std::move(values));
}

} // namespace summatoria
