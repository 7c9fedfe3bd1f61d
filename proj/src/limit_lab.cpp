#include "summatoria/limit_lab.hpp"

#include "summatoria/compensated_sum.hpp"
#include "summatoria/empirical.hpp"
#include "summatoria/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace summatoria {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LineFit {
    double slope = kNaN;
    double stderr_ = kNaN;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y)
{
    LineFit fit;
    const std::size_t m = x.size();
    if (m < 2)
        return fit;
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0))
        return fit;
    fit.slope = sxy / sxx;
    if (m > 2) {
        double sse = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double e = y[i] - my - fit.slope * (x[i] - mx);
            sse += e * e;
        }
        fit.stderr_ = std::sqrt(sse / static_cast<double>(m - 2) / sxx);
    }
    return fit;
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

std::string_view to_string(RemainderClass c) noexcept
{
    switch (c) {
    case RemainderClass::decaying:
        return "decaying";
    case RemainderClass::bounded:
        return "bounded";
    case RemainderClass::growing:
        return "growing";
    case RemainderClass::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

RemainderFit classify_remainders(std::span<const std::uint64_t> checkpoints, std::span<const double> remainders,
                                 const ClassifierParams& params)
{
    if (checkpoints.empty() || checkpoints.size() != remainders.size())
        throw ArgumentError("remainder fit needs equally many (and at least one) checkpoints and remainders");

    RemainderFit fit;
    fit.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    fit.remainders.assign(remainders.begin(), remainders.end());
    fit.loglog_slope = kNaN;
    fit.slope_stderr = kNaN;

    const std::size_t m = remainders.size();
    for (const double r : remainders) {
        if (!std::isfinite(r)) {
            fit.cls = RemainderClass::inconclusive;
            fit.notes.emplace_back("non-finite remainder");
            return fit;
        }
    }

    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t j = 0; j < m; ++j) {
        const double a = std::abs(remainders[j]);
        if (a > params.floor) {
            x.push_back(std::log(static_cast<double>(checkpoints[j])));
            y.push_back(std::log(a));
        }
    }
    const LineFit line = least_squares(x, y);
    fit.loglog_slope = line.slope;
    fit.slope_stderr = line.stderr_;

    const std::size_t excluded = m - x.size();
    const std::size_t half = (m + 1) / 2;
    const bool tail_vanishes =
        m >= 2 && std::all_of(remainders.end() - static_cast<std::ptrdiff_t>(half), remainders.end(),
                              [&](double r) { return std::abs(r) <= params.floor; });
    if (tail_vanishes) {
        fit.cls = RemainderClass::decaying;
        fit.notes.emplace_back("remainder vanishes at every checkpoint of the trailing half");
        return fit;
    }
    if (2 * excluded > m) {
        fit.cls = RemainderClass::inconclusive;
        fit.notes.emplace_back(std::to_string(excluded) + " of " + std::to_string(m) +
                               " remainders are zero; slope fit unreliable");
        return fit;
    }
    if (!std::isfinite(line.slope)) {
        fit.cls = RemainderClass::inconclusive;
        fit.notes.emplace_back("too few nonzero remainders for a slope fit");
        return fit;
    }

    const std::size_t q = (m + 3) / 4;
    double first_max = 0.0;
    double last_max = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
        first_max = std::max(first_max, std::abs(remainders[j]));
        last_max = std::max(last_max, std::abs(remainders[m - 1 - j]));
    }

    const double thr = params.slope_threshold;
    if (line.slope < -thr && last_max < first_max)
        fit.cls = RemainderClass::decaying;
    else if (std::abs(line.slope) <= thr)
        fit.cls = RemainderClass::bounded;
    else if (line.slope > thr)
        fit.cls = RemainderClass::growing;
    else {
        fit.cls = RemainderClass::inconclusive;
        fit.notes.emplace_back("negative slope but last-quartile max |r| does not fall below the first quartile's");
    }
    return fit;
}

Mu0Estimate estimate_mu0(const SummatoryTrace& trace)
{
    const std::size_t m = trace.size();
    if (m < 4)
        throw ArgumentError("mu0 estimation needs at least 4 checkpoints, got " + std::to_string(m));
    const auto n = trace.checkpoints();
    const auto s = trace.values();
    Mu0Estimate est;
    est.value = s[m - 1] / static_cast<double>(n[m - 1]);
    est.stability = est.value - s[m - 2] / static_cast<double>(n[m - 2]);
    return est;
}

RemainderFit mean_rate_fit(const SummatoryTrace& trace, double mu0, const ClassifierParams& params)
{
    const auto n = trace.checkpoints();
    const auto s = trace.values();
    std::vector<double> r(trace.size());
    for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = s[j] - static_cast<double>(n[j]) * mu0;

    RemainderFit fit = classify_remainders(n, r, params);
    for (std::size_t j = 1; j < n.size(); ++j) {
        const double ratio = static_cast<double>(n[j]) / static_cast<double>(n[j - 1]);
        if (ratio < 1.5) {
            fit.notes.push_back("checkpoints not geometric: ratio " + format_double(ratio) + " between " +
                                std::to_string(n[j - 1]) + " and " + std::to_string(n[j]));
            break;
        }
    }
    return fit;
}

ElementaryFunction harmonic_summand()
{
    return {"harmonic", [](double t) { return 1.0 / t; }, [](double t) { return std::log(t); }};
}

ElementaryFunction inverse_square_summand()
{
    return {"inverse-square", [](double t) { return 1.0 / (t * t); }, [](double t) { return -1.0 / t; }};
}

ElementaryFunction constant_summand(double c)
{
    return {"one", [c](double) { return c; }, [c](double t) { return c * t; }};
}

namespace {

// Integral over [a, b] split into pieces with endpoint ratio <= 2; each piece
// goes to adaptive Gauss-Kronrod.
double integrate(const std::function<double(double)>& f, double a, double b, double& error)
{
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
    CompensatedSum total;
    for (double lo = a; lo < b;) {
        const double hi = std::min(b, std::max(2.0 * lo, lo + 1.0));
        double piece_error = 0.0;
        total.add(Quadrature::integrate(f, lo, hi, 20, 1e-15, &piece_error));
        error += piece_error;
        lo = hi;
    }
    return total.value();
}

} // namespace

RemainderFit euler_maclaurin_gap(const ElementaryFunction& f, std::uint64_t N,
                                 std::span<const std::uint64_t> checkpoints, const ClassifierParams& params)
{
    if (!f.value)
        throw ArgumentError("elementary function '" + f.name + "' has no value formula");
    validate_checkpoints(checkpoints, N);

    std::vector<double> r;
    r.reserve(checkpoints.size());
    CompensatedSum sum;
    CompensatedSum integral;
    double quad_error = 0.0;
    std::uint64_t k = 0;
    double prev = 1.0;
    for (const std::uint64_t n : checkpoints) {
        while (k < n) {
            ++k;
            const double v = f.value(static_cast<double>(k));
            if (!std::isfinite(v))
                throw NumericError("summand '" + f.name + "' is not finite at k = " + std::to_string(k));
            sum.add(v);
        }
        const auto x = static_cast<double>(n);
        double area = 0.0;
        if (f.antiderivative) {
            area = f.antiderivative(x) - f.antiderivative(1.0);
        } else {
            integral.add(integrate(f.value, prev, x, quad_error));
            prev = x;
            area = integral.value();
            const double allowed = 1e-10 + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(area);
            if (!std::isfinite(area) || quad_error > allowed)
                throw NumericError("quadrature of '" + f.name + "' on [1, " + std::to_string(n) +
                                   "] failed to reach 1e-10 (estimate " + format_double(quad_error) + ")");
        }
        r.push_back(sum.value() - area);
    }
    return classify_remainders(checkpoints, r, params);
}

LimitVerdict assertion4_check(const SummatoryTrace& trace, double bound_B, const ClassifierParams& params)
{
    if (trace.size() == 0)
        throw ArgumentError("empty trace");
    LimitVerdict v;
    const auto n = trace.checkpoints();
    const auto s = trace.values();
    v.N = n.back();
    v.checkpoints.assign(n.begin(), n.end());
    v.mu0_hat = 0.0;
    v.mean_rate = mean_rate_fit(trace, 0.0, params);
    v.asymptotic_form = v.mean_rate;
    v.conditions_met = v.asymptotic_form.cls == RemainderClass::decaying;

    double prev_s = 0.0;
    std::uint64_t prev_n = 0;
    for (std::size_t j = 0; j < trace.size(); ++j) {
        const double step = std::abs(s[j] - prev_s);
        const double allowed = bound_B * static_cast<double>(n[j] - prev_n);
        if (step > allowed * (1.0 + 1e-12) + 1e-12) {
            v.notes.push_back("trace increment over (" + std::to_string(prev_n) + ", " + std::to_string(n[j]) +
                              "] exceeds the declared bound B = " + format_double(bound_B));
            break;
        }
        prev_s = s[j];
        prev_n = n[j];
    }
    for (const auto& note : v.mean_rate.notes)
        v.notes.push_back("fit: " + note);
    return v;
}

namespace {

struct PartialSumScan {
    std::vector<double> trace_values;
    std::vector<std::int64_t> trace_integers;
    std::vector<std::vector<double>> ks_samples; // one per checkpoint, or empty when shared
    std::vector<double> prefix;                  // S(1..min(last, kKsSampleLimit))
};

// One pass over f(1..last): checkpoint values, the dense prefix of partial
// sums, and strided samples for checkpoints beyond kKsSampleLimit.
PartialSumScan scan(const ArithmeticSequence& f, std::span<const std::uint64_t> cps, bool with_ks)
{
    PartialSumScan out;
    const std::uint64_t last = cps.back();
    const std::size_t m = cps.size();
    out.ks_samples.resize(m);

    std::vector<std::uint64_t> stride(m, 0);
    std::vector<std::uint64_t> next(m, std::numeric_limits<std::uint64_t>::max());
    if (with_ks) {
        out.prefix.reserve(std::min<std::uint64_t>(last, kKsSampleLimit));
        for (std::size_t j = 0; j < m; ++j) {
            if (cps[j] > kKsSampleLimit) {
                stride[j] = (cps[j] + kKsSampleLimit - 1) / kKsSampleLimit;
                next[j] = stride[j];
                out.ks_samples[j].reserve(cps[j] / stride[j]);
            }
        }
    }
    std::uint64_t next_min = *std::min_element(next.begin(), next.end());

    std::int64_t isum = 0;
    CompensatedSum fsum;
    const bool exact = f.integer_valued();
    std::size_t j = 0;
    f.for_each_chunk(1, last, [&](std::uint64_t first, std::span<const double> v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::uint64_t k = first + i;
            double s = 0.0;
            if (exact) {
                isum += static_cast<std::int64_t>(v[i]);
                s = static_cast<double>(isum);
            } else {
                fsum.add(v[i]);
                s = fsum.value();
            }
            if (with_ks) {
                if (k <= kKsSampleLimit)
                    out.prefix.push_back(s);
                if (k == next_min) {
                    next_min = std::numeric_limits<std::uint64_t>::max();
                    for (std::size_t c = 0; c < m; ++c) {
                        if (next[c] == k) {
                            out.ks_samples[c].push_back(s);
                            next[c] = k + stride[c] <= cps[c] ? k + stride[c]
                                                              : std::numeric_limits<std::uint64_t>::max();
                        }
                        next_min = std::min(next_min, next[c]);
                    }
                }
            }
            if (k == cps[j]) {
                if (exact)
                    out.trace_integers.push_back(isum);
                else
                    out.trace_values.push_back(s);
                ++j;
            }
        }
    });
    return out;
}

std::vector<KsPoint> ks_from_scan(PartialSumScan& sc, std::span<const std::uint64_t> cps, std::vector<std::string>& notes)
{
    std::vector<KsPoint> out;
    std::size_t degenerate = 0;
    for (std::size_t j = 0; j < cps.size(); ++j) {
        std::vector<double> sample;
        if (cps[j] <= kKsSampleLimit)
            sample.assign(sc.prefix.begin(), sc.prefix.begin() + static_cast<std::ptrdiff_t>(cps[j]));
        else
            sample = std::move(sc.ks_samples[j]);
        double d = kNaN;
        try {
            d = ks_distance(EmpiricalDistribution(std::move(sample)), Reference::standard_normal);
        } catch (const DegenerateSampleError&) {
            ++degenerate;
        }
        out.push_back({cps[j], d});
    }
    if (degenerate > 0)
        notes.push_back("KS distance undefined at " + std::to_string(degenerate) +
                        " checkpoint(s): partial sums have zero variance");
    return out;
}

void check_sequence_domain(const ArithmeticSequence& f, std::uint64_t N, std::span<const std::uint64_t> cps)
{
    validate_checkpoints(cps, N);
    if (N > f.bound())
        throw BoundError("N = " + std::to_string(N) + " exceeds the domain of sequence '" + f.name() + "'");
}

} // namespace

std::vector<KsPoint> partial_sum_ks_trace(const ArithmeticSequence& f, std::uint64_t N,
                                          std::span<const std::uint64_t> checkpoints, std::vector<std::string>* notes)
{
    check_sequence_domain(f, N, checkpoints);
    PartialSumScan sc = scan(f, checkpoints, true);
    std::vector<std::string> local;
    auto ks = ks_from_scan(sc, checkpoints, notes != nullptr ? *notes : local);
    return ks;
}

LimitVerdict full_verdict(const ArithmeticSequence& f, std::uint64_t N, std::span<const std::uint64_t> checkpoints,
                          const ClassifierParams& params)
{
    check_sequence_domain(f, N, checkpoints);
    LimitVerdict v;
    v.function = f.name();
    v.N = N;
    v.checkpoints.assign(checkpoints.begin(), checkpoints.end());

    PartialSumScan sc = scan(f, checkpoints, true);
    const SummatoryTrace trace =
        f.integer_valued() ? SummatoryTrace::exact(v.checkpoints, std::move(sc.trace_integers))
                           : SummatoryTrace::compensated(v.checkpoints, std::move(sc.trace_values));

    const Mu0Estimate mu0 = estimate_mu0(trace);
    v.mu0_hat = mu0.value;
    v.notes.push_back("mu0 stability: S(n_m)/n_m - S(n_{m-1})/n_{m-1} = " + format_double(mu0.stability));

    // Both conditions reduce to the same remainder S(n) - n*mu0.
    v.mean_rate = mean_rate_fit(trace, mu0.value, params);
    v.asymptotic_form = v.mean_rate;
    v.conditions_met = v.mean_rate.cls == RemainderClass::decaying &&
                       v.asymptotic_form.cls == RemainderClass::decaying;
    for (const auto& note : v.mean_rate.notes)
        v.notes.push_back("fit: " + note);

    v.ks_trace = ks_from_scan(sc, checkpoints, v.notes);
    return v;
}

namespace {

nlohmann::json fit_summary(const RemainderFit& fit)
{
    return {{"class", std::string(to_string(fit.cls))}, {"slope", fit.loglog_slope}, {"stderr", fit.slope_stderr}};
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out;
}

} // namespace

nlohmann::json verdict_to_json(const LimitVerdict& verdict)
{
    nlohmann::json ks = nlohmann::json::array();
    for (const auto& p : verdict.ks_trace)
        ks.push_back({{"n", p.n}, {"D", p.distance}});
    nlohmann::json j;
    j["function"] = verdict.function;
    j["N"] = verdict.N;
    j["checkpoints"] = verdict.checkpoints;
    j["mu0_hat"] = verdict.mu0_hat;
    j["mean_rate"] = fit_summary(verdict.mean_rate);
    j["asymptotic_form"] = fit_summary(verdict.asymptotic_form);
    j["ks_trace"] = std::move(ks);
    j["conditions_met"] = verdict.conditions_met;
    j["notes"] = join(verdict.notes);
    return j;
}

nlohmann::json remainder_fit_to_json(const RemainderFit& fit, std::string_view function, std::uint64_t N)
{
    nlohmann::json j;
    j["function"] = std::string(function);
    j["N"] = N;
    j["checkpoints"] = fit.checkpoints;
    j["remainders"] = fit.remainders;
    j["class"] = std::string(to_string(fit.cls));
    j["slope"] = fit.loglog_slope;
    j["stderr"] = fit.slope_stderr;
    j["notes"] = join(fit.notes);
    return j;
}

} // namespace summatoria
