#include <doctest.h>

#include "summatoria/cli.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cli = summatoria::cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "summatoria");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("summatoria_cli_" + name);
}

} // namespace

TEST_CASE("compute writes a trace CSV")
{
    const auto r = invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "10"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,S\n10,-1\n");

    const auto l = invoke({"compute", "--function", "lambda", "--N", "100", "--checkpoints", "1,2,10,100"});
    CHECK(l.out == "n,S\n1,1\n2,0\n10,0\n100,-2\n");

    const auto w = invoke({"compute", "--function", "mu-over-k", "--N", "3", "--checkpoints", "1,3"});
    CHECK(w.out == "n,S\n1,1\n3,0.16666666666666669\n");

    const auto g = invoke({"compute", "--function", "mu", "--N", "100", "--checkpoints", "geometric(10,3)"});
    CHECK(g.out == "n,S\n10,-1\n30,-3\n90,-2\n");
}

TEST_CASE("compute JSON output")
{
    const auto r = invoke({"compute", "--function", "mu", "--N", "100", "--checkpoints", "10,100", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["accumulation"] == "exact-integer");
    CHECK(j["values"] == nlohmann::json::array({-1, 1}));
}

TEST_CASE("outputs are identical across thread counts")
{
    for (const std::string f : {"mu", "lambda", "mu-over-k"}) {
        const auto a = invoke({"compute", "--function", f, "--N", "3000000", "--threads", "1"});
        const auto b = invoke({"compute", "--function", f, "--N", "3000000", "--threads", "4"});
        const auto c = invoke({"compute", "--function", f, "--N", "3000000", "--threads", "1"});
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("validation errors exit with status 1")
{
    CHECK(invoke({"compute", "--function", "zeta", "--N", "10"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "5,3"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "geometric(10,1)"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "geometric(2"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "1,,3"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--checkpoints", "20"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "2000000000"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--format", "xml"}).status == 1);
    CHECK(invoke({"compute", "--function", "mu", "--N", "10", "--threads", "0"}).status == 1);
    CHECK(invoke({"compute", "--bogus-flag"}).status == 1);
    CHECK(invoke({}).status == 1);
    const auto unwritable =
        invoke({"compute", "--function", "mu", "--N", "10", "--output", "/nonexistent-dir/out.csv"});
    CHECK(unwritable.status == 1);
    CHECK(unwritable.err.find("cannot write") != std::string::npos);
    CHECK(invoke({"verdict", "--function", "mu", "--N", "1000", "--mode", "euler-maclaurin"}).status == 1);
    CHECK(invoke({"synth", "--function", "mu", "--format", "json"}).status == 1);
    CHECK(invoke({"compute", "--function", "file:/nonexistent.csv", "--N", "10"}).status == 1);
}

TEST_CASE("help exits cleanly")
{
    CHECK(invoke({"--help"}).status == 0);
    CHECK(invoke({"verdict", "--help"}).status == 0);
}

TEST_CASE("verdict on the realized log-squared schedule")
{
    const auto r = invoke({"verdict", "--function", "synth:log2", "--N", "1000000", "--checkpoints", "geometric(10,2)"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["conditions_met"] == true);
    CHECK(std::abs(j["mu0_hat"].get<double>() - 0.5) <= 1e-3);
    CHECK(j["function"] == "synth:log2");
}

TEST_CASE("verdict modes")
{
    const auto a4 = invoke({"verdict", "--function", "synth:log", "--N", "1000000", "--mode", "assertion4"});
    REQUIRE(a4.status == 0);
    const auto j = nlohmann::json::parse(a4.out);
    CHECK(j["conditions_met"] == true);
    CHECK(j["mu0_hat"] == 0.0);
    CHECK_FALSE(j["ks_trace"].empty());

    const auto em = invoke({"verdict", "--function", "harmonic", "--N", "1000000", "--mode", "euler-maclaurin",
                            "--checkpoints", "geometric(10,10)"});
    REQUIRE(em.status == 0);
    const auto e = nlohmann::json::parse(em.out);
    CHECK(e["class"] == "bounded");
    CHECK(std::abs(e["remainders"].back().get<double>() - 0.5772156649) <= 1e-5);
}

TEST_CASE("synth writes a realization or a schedule")
{
    const auto csv = invoke({"synth", "--function", "synth:none", "--N", "4"});
    CHECK(csv.out == "k,f\n1,1\n2,-1\n3,1\n4,-1\n");
    const auto js = invoke({"synth", "--function", "synth:log", "--format", "json"});
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["perturbation"]["kind"] == "log");
    CHECK(j["values"] == nlohmann::json::array({1.0, -1.0}));
}

TEST_CASE("synth exports any function as k,f and schedule expectations as JSON")
{
    const auto mu = invoke({"synth", "--function", "mu", "--N", "10"});
    CHECK(mu.out == "k,f\n1,1\n2,-1\n3,-1\n4,0\n5,-1\n6,1\n7,-1\n8,0\n9,0\n10,1\n");
    const auto js = invoke({"synth", "--function", "synth:log", "--format", "json", "--N", "10000",
                            "--checkpoints", "1,9,10000"});
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    const auto& rows = j["expectation"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["p1"] == 1.0);
    CHECK(std::abs(rows[1]["mean"].get<double>() - 2.0 / (10.0 * std::log(10.0))) <= 1e-15);
    CHECK(std::abs(rows[2]["realized"].get<double>() - rows[2]["summatory"].get<double>()) <= 2.0);
}

TEST_CASE("file-backed sequences round trip through synth")
{
    const auto path = scratch("seq.csv");
    REQUIRE(invoke({"synth", "--function", "synth:log2", "--N", "5000", "--output", path.string()}).status == 0);
    const auto from_file =
        invoke({"compute", "--function", "file:" + path.string(), "--N", "5000", "--checkpoints", "10,100,5000"});
    const auto direct = invoke({"compute", "--function", "synth:log2", "--N", "5000", "--checkpoints", "10,100,5000"});
    CHECK(from_file.status == 0);
    CHECK(from_file.out == direct.out);
    std::filesystem::remove(path);
}

TEST_CASE("analyze reports moments and lag correlations")
{
    const auto r = invoke({"analyze", "--function", "mu", "--N", "10000", "--checkpoints", "100,10000", "--lag", "1,2",
                           "--format", "csv"});
    REQUIRE(r.status == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,mean,variance,h,rho");
    int rows = 0;
    while (std::getline(is, line))
        ++rows;
    CHECK(rows == 4);

    const auto js = invoke({"analyze", "--function", "lambda", "--N", "10", "--checkpoints", "10"});
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["distribution"]["mean"] == 0.0);
    CHECK(j["distribution"]["variance"] == 1.0);
    CHECK(j["independence"].size() == 4);
    CHECK(invoke({"analyze", "--function", "mu", "--N", "100", "--lag", "0"}).status == 1);
}

TEST_CASE("config files supply defaults that flags override")
{
    const auto path = scratch("config.json");
    {
        std::ofstream f(path);
        f << R"({"function": "mu", "N": 100, "checkpoints": [10, 100], "format": "csv"})";
    }
    const auto from_file = invoke({"compute", "--config", path.string()});
    CHECK(from_file.out == "n,S\n10,-1\n100,1\n");
    const auto overridden = invoke({"compute", "--config", path.string(), "--function", "lambda"});
    CHECK(overridden.out == "n,S\n10,0\n100,-2\n");
    {
        std::ofstream f(path);
        f << R"({"function": "mu", "N": "many"})";
    }
    CHECK(invoke({"compute", "--config", path.string()}).status == 1);
    {
        std::ofstream f(path);
        f << R"({"colour": "blue"})";
    }
    CHECK(invoke({"compute", "--config", path.string()}).status == 1);
    std::filesystem::remove(path);
}

TEST_CASE("selftest passes")
{
    const auto r = invoke({"selftest"});
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("selftest: 7/7 suites passed") != std::string::npos);
}
