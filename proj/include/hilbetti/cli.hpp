#pragma once

#include <iosfwd>
#include <string>

#include "hilbetti/records.hpp"

namespace hilbetti::cli {

// Exit-code contract: 0 smooth / success, 1 not smooth, 2 parse or
// admissibility error, 3 Betti sum unsupported (family 2 only).
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotSmooth = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUnsupported = 3;

struct CommandResult {
    OutputRecord record;
    int exit_code = kExitOk;
};

CommandResult cmd_classify(int n, const std::string& lambda_text);

struct BettiOptions {
    bool verify = false;
    long long budget = 100'000'000;
    int bound = -1;
    bool witnesses = false;
};
CommandResult cmd_betti(int n, const std::string& lambda_text, const BettiOptions& opts = {});

CommandResult cmd_encode(const std::string& lambda_text);
CommandResult cmd_decode(const RatPoly& p);

CommandResult cmd_oracle(OracleMethod method, int n, const RatPoly& p,
                         const OracleOptions& opts);

/// Emits CSV rows (n, lambda, family, betti_sum) for every partition with
/// r <= max_r matching the requested family over n in [n_from, n_to].
/// Row order: n ascending, then r ascending, then parts lex descending.
/// Output is byte-identical across runs.
void cmd_table(std::ostream& os, const std::string& family, int n_from, int n_to, int max_r);

/// Human-readable rendering of a record (the default, non-JSON output).
std::string render_text(const OutputRecord& record);

}  // namespace hilbetti::cli
