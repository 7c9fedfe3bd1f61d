#include "summatoria/arith_core.hpp"
#include "summatoria/cli.hpp"
#include "summatoria/empirical.hpp"
#include "summatoria/errors.hpp"
#include "summatoria/limit_lab.hpp"
#include "summatoria/synth_seq.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace summatoria;

namespace {

TwoPointSchedule schedule_named(const std::string& kind)
{
    if (kind == "log")
        return paper_log_example();
    if (kind == "log2")
        return paper_log2_example();
    if (kind == "none")
        return fair_coin();
    throw ArgumentError("unknown schedule '" + kind + "' (expected log, log2 or none)");
}

py::object trace_values(const SummatoryTrace& t)
{
    if (t.kind() == AccumulationKind::exact_integer)
        return py::cast(std::vector<std::int64_t>(t.integer_values().begin(), t.integer_values().end()));
    return py::cast(std::vector<double>(t.values().begin(), t.values().end()));
}

SieveConfig sieve_with(unsigned threads)
{
    auto c = SieveConfig::from_environment();
    c.threads = threads;
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Summatory arithmetic functions, empirical statistics and limit-law checks";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<UnsupportedArityError>(m, "UnsupportedArityError", PyExc_ValueError);
    py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError", PyExc_ArithmeticError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);

    m.def("mobius", &mobius_oracle, py::arg("n"));
    m.def("liouville", &liouville_oracle, py::arg("n"));
    m.def(
        "sieve_block",
        [](std::uint64_t lo, std::uint64_t hi) {
            const auto b = sieve_block(lo, hi, SieveConfig::from_environment());
            return py::make_tuple(std::vector<int>(b.mu().begin(), b.mu().end()),
                                  std::vector<int>(b.lambda().begin(), b.lambda().end()));
        },
        py::arg("lo"), py::arg("hi"));
    m.def("geometric_checkpoints", &geometric_checkpoints, py::arg("start"), py::arg("ratio"), py::arg("N"));

    m.def(
        "mertens_trace",
        [](std::uint64_t N, const std::vector<std::uint64_t>& cps, unsigned threads) {
            return trace_values(mertens_trace(N, cps, sieve_with(threads)));
        },
        py::arg("N"), py::arg("checkpoints"), py::arg("threads") = 1);
    m.def(
        "liouville_trace",
        [](std::uint64_t N, const std::vector<std::uint64_t>& cps, unsigned threads) {
            return trace_values(liouville_trace(N, cps, sieve_with(threads)));
        },
        py::arg("N"), py::arg("checkpoints"), py::arg("threads") = 1);
    m.def(
        "weighted_mobius_trace",
        [](std::uint64_t N, const std::vector<std::uint64_t>& cps, unsigned threads) {
            return trace_values(weighted_mobius_trace(N, cps, sieve_with(threads)));
        },
        py::arg("N"), py::arg("checkpoints"), py::arg("threads") = 1);
    m.def(
        "summatory_trace",
        [](const std::string& function, std::uint64_t N, const std::vector<std::uint64_t>& cps) {
            return trace_values(summatory_trace(cli::make_sequence(function, N, SieveConfig::from_environment()), N, cps));
        },
        py::arg("function"), py::arg("N"), py::arg("checkpoints"));

    m.def(
        "ks_distance",
        [](std::vector<double> sample, const std::string& reference) {
            if (reference != "normal" && reference != "uniform")
                throw ArgumentError("reference must be 'normal' or 'uniform'");
            return ks_distance(EmpiricalDistribution(std::move(sample)),
                               reference == "normal" ? Reference::standard_normal : Reference::uniform01);
        },
        py::arg("sample"), py::arg("reference") = "normal");
    m.def(
        "independence",
        [](const std::string& function, std::uint64_t n, std::uint64_t h) {
            return independence_estimator(cli::make_sequence(function, n + h, SieveConfig::from_environment()), n, h);
        },
        py::arg("function"), py::arg("n"), py::arg("h"));
    m.def(
        "empirical_moments",
        [](const std::string& function, std::uint64_t n) {
            const auto mom = empirical_moments(cli::make_sequence(function, n, SieveConfig::from_environment()), n);
            return py::make_tuple(mom.mean, mom.variance);
        },
        py::arg("function"), py::arg("n"));

    m.def(
        "_classify_remainders",
        [](const std::vector<std::uint64_t>& cps, const std::vector<double>& r) {
            return remainder_fit_to_json(classify_remainders(cps, r), "", 0).dump();
        },
        py::arg("checkpoints"), py::arg("remainders"));
    m.def(
        "_full_verdict",
        [](const std::string& function, std::uint64_t N, const std::vector<std::uint64_t>& cps) {
            auto v = full_verdict(cli::make_sequence(function, N, SieveConfig::from_environment()), N, cps);
            v.function = function;
            return verdict_to_json(v).dump();
        },
        py::arg("function"), py::arg("N"), py::arg("checkpoints"));

    m.def(
        "schedule_mean", [](const std::string& kind, std::uint64_t n) { return schedule_mean(schedule_named(kind), n); },
        py::arg("kind"), py::arg("n"));
    m.def(
        "schedule_summatory",
        [](const std::string& kind, std::uint64_t n) { return schedule_summatory(schedule_named(kind), n); },
        py::arg("kind"), py::arg("n"));
    m.def(
        "realize",
        [](const std::string& kind, std::uint64_t N) {
            const auto f = realize_greedy(schedule_named(kind), N);
            return std::vector<double>(f.stored_values().begin(), f.stored_values().end());
        },
        py::arg("kind"), py::arg("N"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"summatoria"};
            for (const auto& a : args)
                argv.push_back(a.c_str());
            std::ostringstream out;
            std::ostringstream err;
            const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"));
}
