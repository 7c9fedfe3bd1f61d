#include "summatoria/cli.hpp"

#include "summatoria/arith_core.hpp"
#include "summatoria/empirical.hpp"
#include "summatoria/errors.hpp"
#include "summatoria/limit_lab.hpp"
#include "summatoria/synth_seq.hpp"

#include <CLI11.hpp>
#include <boost/math/distributions/normal.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <regex>
#include <sstream>

namespace summatoria::cli {

namespace {

std::uint64_t parse_unsigned(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (text.empty() || text[0] == '-' || text[0] == '+')
            throw std::invalid_argument(text);
        v = std::stoull(text, &used);
    } catch (const std::logic_error&) {
        throw ArgumentError(what + ": '" + text + "' is not a non-negative integer");
    }
    if (used != text.size())
        throw ArgumentError(what + ": '" + text + "' is not a non-negative integer");
    return v;
}

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep))
        parts.push_back(trim(item));
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

} // namespace

std::vector<std::uint64_t> parse_checkpoints(const std::string& text, std::uint64_t N)
{
    static const std::regex geometric(R"(\s*geometric\(\s*([0-9]+)\s*,\s*([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\)\s*)");
    std::smatch m;
    std::vector<std::uint64_t> cps;
    if (std::regex_match(text, m, geometric)) {
        const std::uint64_t start = parse_unsigned(m[1].str(), "--checkpoints start");
        const double ratio = std::stod(m[2].str());
        cps = geometric_checkpoints(start, ratio, N);
    } else if (text.find('(') != std::string::npos) {
        throw ArgumentError("--checkpoints: malformed schedule '" + text + "' (expected geometric(start,ratio))");
    } else {
        std::size_t pos = 0;
        for (const auto& item : split(text, ',')) {
            ++pos;
            if (item.empty())
                throw ArgumentError("--checkpoints: empty entry at position " + std::to_string(pos));
            cps.push_back(parse_unsigned(item, "--checkpoints entry " + std::to_string(pos)));
        }
    }
    validate_checkpoints(cps, N);
    return cps;
}

std::vector<std::uint64_t> parse_lags(const std::string& text)
{
    std::vector<std::uint64_t> lags;
    std::size_t pos = 0;
    for (const auto& item : split(text, ',')) {
        ++pos;
        const std::uint64_t h = parse_unsigned(item, "--lag entry " + std::to_string(pos));
        if (h == 0)
            throw ArgumentError("--lag entry " + std::to_string(pos) + " must be positive");
        lags.push_back(h);
    }
    if (lags.empty())
        throw ArgumentError("--lag: no lags given");
    return lags;
}

ArithmeticSequence make_sequence(const std::string& id, std::uint64_t length, const SieveConfig& sieve)
{
    if (id == "mu")
        return ArithmeticSequence::mobius(sieve);
    if (id == "lambda")
        return ArithmeticSequence::liouville(sieve);
    if (id == "mu-over-k")
        return ArithmeticSequence::mobius_over_k(sieve);
    if (id == "harmonic")
        return harmonic_sequence();
    if (id == "inverse-square")
        return inverse_square_sequence();
    if (id == "one")
        return constant_sequence(1.0);
    if (id == "alternating")
        return alternating_sequence();
    if (id == "synth:log")
        return realize_greedy(paper_log_example(), length);
    if (id == "synth:log2")
        return realize_greedy(paper_log2_example(), length);
    if (id == "synth:none")
        return realize_greedy(fair_coin(), length);
    if (id.rfind("file:", 0) == 0) {
        const std::string path = id.substr(5);
        std::ifstream in(path);
        if (!in)
            throw ArgumentError("--function: cannot open '" + path + "'");
        return read_sequence_csv(in, id);
    }
    throw ArgumentError("--function: unknown function id '" + id + "'");
}

namespace {

std::optional<ElementaryFunction> elementary_for(const std::string& id)
{
    if (id == "harmonic")
        return harmonic_summand();
    if (id == "inverse-square")
        return inverse_square_summand();
    if (id == "one")
        return constant_summand(1.0);
    return std::nullopt;
}

SummatoryTrace trace_for(const std::string& id, const ArithmeticSequence& f, std::uint64_t N,
                         const std::vector<std::uint64_t>& cps, const SieveConfig& sieve)
{
    if (id == "mu")
        return mertens_trace(N, cps, sieve);
    if (id == "lambda")
        return liouville_trace(N, cps, sieve);
    if (id == "mu-over-k")
        return weighted_mobius_trace(N, cps, sieve);
    return summatory_trace(f, N, cps);
}

std::uint64_t require_N(const RunConfig& config)
{
    if (config.N < 1)
        throw ArgumentError("--N: a positive N is required for '" + config.command + "'");
    return config.N;
}

std::string format_or(const RunConfig& config, const std::string& fallback)
{
    const std::string f = config.format.empty() ? fallback : config.format;
    if (f != "csv" && f != "json")
        throw ArgumentError("--format: expected csv or json, got '" + f + "'");
    return f;
}

nlohmann::json trace_to_json(const std::string& id, std::uint64_t N, const SummatoryTrace& trace)
{
    nlohmann::json j;
    j["function"] = id;
    j["N"] = N;
    j["accumulation"] = trace.kind() == AccumulationKind::exact_integer ? "exact-integer" : "compensated-float";
    j["checkpoints"] = std::vector<std::uint64_t>(trace.checkpoints().begin(), trace.checkpoints().end());
    if (trace.kind() == AccumulationKind::exact_integer)
        j["values"] = std::vector<std::int64_t>(trace.integer_values().begin(), trace.integer_values().end());
    else
        j["values"] = std::vector<double>(trace.values().begin(), trace.values().end());
    return j;
}

void run_compute(const RunConfig& config, const SieveConfig& sieve, std::ostream& os)
{
    const std::uint64_t N = require_N(config);
    const auto fmt = format_or(config, "csv");
    const auto cps = parse_checkpoints(config.checkpoints, N);
    const auto f = make_sequence(config.function, N, sieve);
    const auto trace = trace_for(config.function, f, N, cps, sieve);
    if (fmt == "csv")
        write_trace_csv(os, trace);
    else
        os << trace_to_json(config.function, N, trace).dump(2) << '\n';
}

void run_verdict(const RunConfig& config, const SieveConfig& sieve, std::ostream& os)
{
    const std::uint64_t N = require_N(config);
    if (format_or(config, "json") != "json")
        throw ArgumentError("--format: verdict reports are JSON only");
    const auto cps = parse_checkpoints(config.checkpoints, N);

    if (config.mode == "euler-maclaurin") {
        const auto g = elementary_for(config.function);
        if (!g)
            throw ArgumentError("--function: euler-maclaurin mode needs a closed-form summand "
                                "(harmonic, inverse-square, one), got '" + config.function + "'");
        const auto fit = euler_maclaurin_gap(*g, N, cps);
        os << remainder_fit_to_json(fit, config.function, N).dump(2) << '\n';
        return;
    }

    const auto f = make_sequence(config.function, N, sieve);
    LimitVerdict v;
    if (config.mode == "full") {
        v = full_verdict(f, N, cps);
        v.function = config.function;
    } else if (config.mode == "assertion4") {
        v = assertion4_check(trace_for(config.function, f, N, cps, sieve), f.magnitude_bound());
        v.function = config.function;
        v.N = N;
        v.ks_trace = partial_sum_ks_trace(f, N, cps, &v.notes);
    } else {
        throw ArgumentError("--mode: expected full, assertion4 or euler-maclaurin, got '" + config.mode + "'");
    }
    os << verdict_to_json(v).dump(2) << '\n';
}

void run_synth(const RunConfig& config, const SieveConfig& sieve, std::ostream& os)
{
    const auto fmt = format_or(config, "csv");
    std::optional<TwoPointSchedule> schedule;
    if (config.function == "synth:log")
        schedule = paper_log_example();
    else if (config.function == "synth:log2")
        schedule = paper_log2_example();
    else if (config.function == "synth:none")
        schedule = fair_coin();

    if (fmt == "csv") {
        const std::uint64_t N = require_N(config);
        write_sequence_csv(os, schedule ? realize_greedy(*schedule, N) : make_sequence(config.function, N, sieve), N);
        return;
    }
    if (!schedule)
        throw ArgumentError("--format json: synth needs synth:log, synth:log2 or synth:none, got '" +
                            config.function + "'");
    auto j = schedule_to_json(*schedule);
    if (config.N > 0) {
        const auto cps = parse_checkpoints(config.checkpoints, config.N);
        const auto trace = summatory_trace(realize_greedy(*schedule, config.N), config.N, cps);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < cps.size(); ++i) {
            const auto n = cps[i];
            rows.push_back({{"n", n},
                            {"p1", schedule->probability(0, n)},
                            {"mean", schedule_mean(*schedule, n)},
                            {"summatory", schedule_summatory(*schedule, n)},
                            {"realized", trace.kind() == AccumulationKind::exact_integer
                                             ? static_cast<double>(trace.integer_values()[i])
                                             : trace.values()[i]}});
        }
        j["expectation"] = std::move(rows);
    }
    os << j.dump(2) << '\n';
}

void run_analyze(const RunConfig& config, const SieveConfig& sieve, std::ostream& os)
{
    const std::uint64_t N = require_N(config);
    const auto fmt = format_or(config, "json");
    const auto cps = parse_checkpoints(config.checkpoints, N);
    const auto lags = parse_lags(config.lags);
    const std::uint64_t max_lag = *std::max_element(lags.begin(), lags.end());
    const auto f = make_sequence(config.function, N + max_lag, sieve);
    if (N > f.bound())
        throw BoundError("N = " + std::to_string(N) + " exceeds the domain of '" + config.function + "'");

    struct Row {
        std::uint64_t n;
        Moments moments;
        std::uint64_t h;
        double rho;
    };
    std::vector<Row> rows;
    for (const auto n : cps) {
        const Moments mom = empirical_moments(f, n);
        for (const auto h : lags)
            if (n + h <= f.bound())
                rows.push_back({n, mom, h, independence_estimator(f, n, h)});
    }

    if (fmt == "csv") {
        const auto old_precision = os.precision(17);
        os << "n,mean,variance,h,rho\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.moments.mean << ',' << r.moments.variance << ',' << r.h << ',' << r.rho << '\n';
        os.precision(old_precision);
        return;
    }

    const Moments whole = empirical_moments(f, N);
    const std::uint64_t stride = (N + kKsSampleLimit - 1) / kKsSampleLimit;
    std::vector<double> sample;
    f.for_each_chunk(1, N, [&](std::uint64_t first, std::span<const double> v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((first + i) % stride == 0)
                sample.push_back(v[i]);
    });
    const EmpiricalDistribution dist(std::move(sample));
    double ks = std::numeric_limits<double>::quiet_NaN();
    try {
        ks = ks_distance(dist, Reference::standard_normal);
    } catch (const DegenerateSampleError&) {
    }

    nlohmann::json j;
    j["function"] = config.function;
    j["N"] = N;
    j["distribution"] = {{"n", N},
                         {"mean", whole.mean},
                         {"variance", whole.variance},
                         {"sample_size", dist.size()},
                         {"min", dist.sample().front()},
                         {"max", dist.sample().back()},
                         {"ks_normal", ks}};
    std::vector<std::string> notes;
    nlohmann::json ks_trace = nlohmann::json::array();
    for (const auto& p : partial_sum_ks_trace(f, N, cps, &notes))
        ks_trace.push_back({{"n", p.n}, {"D", p.distance}});
    j["partial_sums_ks"] = std::move(ks_trace);
    nlohmann::json ind = nlohmann::json::array();
    for (const auto& r : rows)
        ind.push_back({{"n", r.n}, {"h", r.h}, {"rho", r.rho}});
    j["independence"] = std::move(ind);
    os << j.dump(2) << '\n';
}

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
    std::string detail;
    void check(bool ok)
    {
        ++total;
        passed += ok ? 1 : 0;
    }
};

std::vector<SuiteResult> run_selftest_suites(std::uint64_t seed, const SieveConfig& sieve)
{
    std::vector<SuiteResult> suites;

    {
        SuiteResult s{"sieve-oracle"};
        const MobiusSieve mobius(100'000, sieve);
        mobius.stream(1, 100'000, [&](const SieveBlock& b) {
            for (std::uint64_t k = b.lo(); k <= b.hi(); ++k) {
                s.check(b.mu_at(k) == mobius_oracle(k));
                s.check(b.lambda_at(k) == liouville_oracle(k));
            }
        });
        suites.push_back(s);
    }
    {
        SuiteResult s{"divisor-identity"};
        constexpr std::uint64_t limit = 10'000;
        const SieveBlock b = sieve_block(1, limit, sieve);
        for (std::uint64_t n = 1; n <= limit; ++n) {
            int sum = 0;
            for (std::uint64_t d = 1; d * d <= n; ++d) {
                if (n % d != 0)
                    continue;
                sum += b.mu_at(d);
                if (d * d != n)
                    sum += b.mu_at(n / d);
            }
            s.check(sum == (n == 1 ? 1 : 0));
        }
        suites.push_back(s);
    }
    {
        SuiteResult s{"multiplicativity"};
        constexpr std::uint64_t limit = 1000;
        std::vector<int> mu(limit * limit + 1);
        std::vector<int> lambda(limit * limit + 1);
        for (std::uint64_t k = 1; k <= limit * limit; ++k) {
            mu[k] = mobius_oracle(k);
            lambda[k] = liouville_oracle(k);
        }
        for (std::uint64_t m = 1; m <= limit; ++m) {
            for (std::uint64_t n = 1; n <= limit; ++n) {
                if (std::gcd(m, n) == 1)
                    s.check(mu[m * n] == mu[m] * mu[n]);
                s.check(lambda[m * n] == lambda[m] * lambda[n]);
            }
        }
        suites.push_back(s);
    }
    {
        SuiteResult s{"trace-additivity"};
        const std::vector<std::uint64_t> cps{1000, 7919, 20000, 65536, 100000};
        const auto trace = mertens_trace(100'000, cps, sieve);
        std::uint64_t prev = 0;
        std::int64_t prev_value = 0;
        for (std::size_t j = 0; j < cps.size(); ++j) {
            std::int64_t partial = 0;
            const MobiusSieve range(cps[j], sieve);
            range.stream(prev + 1, cps[j], [&](const SieveBlock& b) {
                for (const auto v : b.mu())
                    partial += v;
            });
            s.check(trace.integer_values()[j] - prev_value == partial);
            s.check(std::abs(trace.integer_values()[j]) <= static_cast<std::int64_t>(cps[j]));
            prev = cps[j];
            prev_value = trace.integer_values()[j];
        }
        suites.push_back(s);
    }
    {
        SuiteResult s{"known-values"};
        const std::vector<std::uint64_t> cps{1, 2, 10, 100};
        const auto m = mertens_trace(100, cps, sieve);
        const auto l = liouville_trace(100, cps, sieve);
        s.check(m.integer_values()[0] == 1);
        s.check(m.integer_values()[2] == -1);
        s.check(m.integer_values()[3] == 1);
        s.check(l.integer_values()[0] == 1);
        s.check(l.integer_values()[1] == 0);
        s.check(l.integer_values()[2] == 0);
        suites.push_back(s);
    }
    {
        SuiteResult s{"ks-calibration"};
        constexpr std::size_t size = 10'000;
        const double critical = kKsCritical1Percent / std::sqrt(static_cast<double>(size));
        const double d_normal = ks_distance(
            EmpiricalDistribution(calibration_sample(CalibrationLaw::standard_normal, size, seed)),
            Reference::standard_normal);
        const double d_uniform =
            ks_distance(EmpiricalDistribution(calibration_sample(CalibrationLaw::uniform01, size, seed)),
                        Reference::standard_normal);
        s.check(d_normal <= critical);
        s.check(d_uniform > critical);
        std::ostringstream d;
        d << "seed=" << seed << " D_normal=" << d_normal << " D_uniform=" << d_uniform << " critical=" << critical;
        s.detail = d.str();
        suites.push_back(s);
    }
    {
        SuiteResult s{"ks-quantile-grid"};
        constexpr std::size_t n = 100;
        std::vector<double> grid;
        const boost::math::normal_distribution<double> normal;
        for (std::size_t i = 1; i <= n; ++i)
            grid.push_back(boost::math::quantile(normal, (static_cast<double>(i) - 0.5) / static_cast<double>(n)));
        const double d = ks_distance(EmpiricalDistribution(grid), Reference::standard_normal, Standardize::none);
        s.check(d <= 0.5 / static_cast<double>(n) + 1e-6);
        s.detail = "D=" + std::to_string(d) + " bound=0.005001";
        suites.push_back(s);
    }
    return suites;
}

int run_selftest(const RunConfig& config, const SieveConfig& sieve, std::ostream& os)
{
    const auto suites = run_selftest_suites(config.seed, sieve);
    std::size_t ok = 0;
    for (const auto& s : suites) {
        const bool pass = s.passed == s.total;
        ok += pass ? 1 : 0;
        os << (pass ? "PASS " : "FAIL ") << s.name << ' ' << s.passed << '/' << s.total;
        if (!s.detail.empty())
            os << " (" << s.detail << ')';
        os << '\n';
    }
    os << "selftest: " << ok << '/' << suites.size() << " suites passed\n";
    return ok == suites.size() ? 0 : static_cast<int>(ExitStatus::numeric_error);
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.threads < 1)
            throw ArgumentError("--threads must be positive");
        SieveConfig sieve = SieveConfig::from_environment();
        sieve.threads = config.threads;

        std::ostringstream buffer;
        int status = 0;
        if (config.command == "compute")
            run_compute(config, sieve, buffer);
        else if (config.command == "verdict")
            run_verdict(config, sieve, buffer);
        else if (config.command == "synth")
            run_synth(config, sieve, buffer);
        else if (config.command == "analyze")
            run_analyze(config, sieve, buffer);
        else if (config.command == "selftest")
            status = run_selftest(config, sieve, buffer);
        else
            throw ArgumentError("unknown command '" + config.command + "'");

        if (config.output.empty() || config.output == "-") {
            out << buffer.str();
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file)
                throw ArgumentError("--output: cannot write '" + config.output + "'");
            file << buffer.str();
            if (!file)
                throw ArgumentError("--output: write to '" + config.output + "' failed");
        }
        return status;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.is_validation() ? ExitStatus::validation_error : ExitStatus::numeric_error);
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return static_cast<int>(ExitStatus::numeric_error);
    }
}

namespace {

void apply_config_file(const std::string& path, RunConfig& config)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("--config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError("--config '" + path + "': " + e.what());
    }
    if (!j.is_object())
        throw ArgumentError("--config '" + path + "': top level must be an object");

    auto list_to_string = [](const nlohmann::json& v) {
        if (v.is_string())
            return v.get<std::string>();
        std::string s;
        for (const auto& item : v) {
            if (!s.empty())
                s += ',';
            s += std::to_string(item.get<std::uint64_t>());
        }
        return s;
    };
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "command")
                config.command = value.get<std::string>();
            else if (key == "function")
                config.function = value.get<std::string>();
            else if (key == "N")
                config.N = value.get<std::uint64_t>();
            else if (key == "checkpoints")
                config.checkpoints = list_to_string(value);
            else if (key == "output")
                config.output = value.get<std::string>();
            else if (key == "format")
                config.format = value.get<std::string>();
            else if (key == "seed")
                config.seed = value.get<std::uint64_t>();
            else if (key == "threads")
                config.threads = value.get<unsigned>();
            else if (key == "lag")
                config.lags = list_to_string(value);
            else if (key == "mode")
                config.mode = value.get<std::string>();
            else
                throw ArgumentError("--config '" + path + "': unknown field '" + key + "'");
        } catch (const nlohmann::json::exception&) {
            throw ArgumentError("--config '" + path + "': field '" + key + "' has the wrong type");
        }
    }
}

} // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Summatory arithmetic functions and their limit-law conditions", "summatoria"};
    app.require_subcommand(1);

    RunConfig flags;
    std::string config_path;
    struct Bound {
        CLI::Option* function;
        CLI::Option* N;
        CLI::Option* checkpoints;
        CLI::Option* output;
        CLI::Option* format;
        CLI::Option* seed;
        CLI::Option* threads;
        CLI::Option* lag;
        CLI::Option* mode;
    };
    std::vector<std::pair<CLI::App*, Bound>> subs;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"compute", "write a summatory trace (CSV n,S)"},
        {"analyze", "empirical moments, KS distances and the independence table"},
        {"synth", "export f(1..N) as CSV k,f (synth:* ids realized greedily) or a schedule as JSON"},
        {"verdict", "run the limit-law condition checks (JSON)"},
        {"selftest", "oracle, identity and calibration suites"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        Bound b{};
        b.function = sub->add_option("--function", flags.function, "mu | lambda | mu-over-k | harmonic | "
                                                                    "inverse-square | one | alternating | "
                                                                    "synth:log | synth:log2 | synth:none | file:path");
        b.N = sub->add_option("--N", flags.N, "largest index");
        b.checkpoints = sub->add_option("--checkpoints", flags.checkpoints, "geometric(start,ratio) or n1,n2,...");
        b.output = sub->add_option("--output", flags.output, "output path, - for stdout");
        b.format = sub->add_option("--format", flags.format, "csv | json");
        b.seed = sub->add_option("--seed", flags.seed, "seed for KS calibration draws");
        b.threads = sub->add_option("--threads", flags.threads, "sieve threads");
        b.lag = sub->add_option("--lag", flags.lags, "analyze: comma-separated lags");
        b.mode = sub->add_option("--mode", flags.mode, "verdict: full | assertion4 | euler-maclaurin");
        sub->add_option("--config", config_path, "JSON config file; flags override it");
        subs.emplace_back(sub, b);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitStatus::validation_error);
    }

    for (const auto& [sub, b] : subs) {
        if (!sub->parsed())
            continue;
        RunConfig config;
        try {
            if (!config_path.empty())
                apply_config_file(config_path, config);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return static_cast<int>(ExitStatus::validation_error);
        }
        config.command = sub->get_name();
        if (b.function->count() > 0)
            config.function = flags.function;
        if (b.N->count() > 0)
            config.N = flags.N;
        if (b.checkpoints->count() > 0)
            config.checkpoints = flags.checkpoints;
        if (b.output->count() > 0)
            config.output = flags.output;
        if (b.format->count() > 0)
            config.format = flags.format;
        if (b.seed->count() > 0)
            config.seed = flags.seed;
        if (b.threads->count() > 0)
            config.threads = flags.threads;
        if (b.lag->count() > 0)
            config.lags = flags.lags;
        if (b.mode->count() > 0)
            config.mode = flags.mode;
        return run(config, out, err);
    }
    return static_cast<int>(ExitStatus::validation_error);
}

} // namespace summatoria::cli
