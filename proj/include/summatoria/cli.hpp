#pragma once

#include "summatoria/sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace summatoria::cli {

enum class ExitStatus : int { ok = 0, validation_error = 1, numeric_error = 2 };

struct RunConfig {
    std::string command;                     // compute | analyze | synth | verdict | selftest
    std::string function = "mu";             // mu | lambda | mu-over-k | harmonic | synth:log | ... | file:path
    std::uint64_t N = 0;
    std::string checkpoints = "geometric(10,2)";
    std::string output = "-";
    std::string format;                      // csv | json; empty picks the command's default
    std::uint64_t seed = 20190118;
    unsigned threads = 1;
    std::string lags = "1,2,5,10";
    std::string mode = "full";               // verdict only: full | assertion4 | euler-maclaurin
};

// "geometric(start,ratio)" or a comma-separated explicit list.
std::vector<std::uint64_t> parse_checkpoints(const std::string& text, std::uint64_t N);
std::vector<std::uint64_t> parse_lags(const std::string& text);

// Resolves a function id. Synthesized ids are realized over [1, length].
ArithmeticSequence make_sequence(const std::string& id, std::uint64_t length, const SieveConfig& sieve);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags override an optional --config JSON file) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace summatoria::cli
