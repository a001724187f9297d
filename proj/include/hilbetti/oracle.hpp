#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbetti/closedform.hpp"
#include "hilbetti/staircase.hpp"

namespace hilbetti {

enum class OracleMethod { IdealEnum, ArrangementEnum };

const char* oracle_method_name(OracleMethod m);

struct OracleOptions {
    /// Node budget per enumeration pass; BudgetExceeded beyond it.
    long long budget = 100'000'000;
    /// Degree cap D (ideal route) or offset box B (arrangement route);
    /// -1 picks a heuristic from the target polynomial.
    int bound = -1;
    bool keep_witnesses = false;
    Exec exec = Exec::Parallel;
};

struct OracleReport {
    BigInt count;
    OracleMethod method;
    /// The D or B the count was taken at; stabilization reran at bound+1.
    int bound_used = 0;
    /// True when the rerun at bound+1 left the count unchanged.
    bool stabilized = false;
    long long nodes = 0;
    /// Canonically sorted, pairwise distinct; filled when requested.
    std::vector<MonomialIdeal> witnesses;
};

/// Counts saturated monomial ideals in n+1 variables with Hilbert
/// polynomial p, by backtracking over divisibility antichains of
/// monomials of degree <= D in lex order.
OracleReport count_by_ideals(AmbientDim n, const RatPoly& p, OracleOptions opts = {});

/// Counts the same ideals through their staircase complements: enumerates
/// downward-closed unions of orthants with offsets < B whose counting
/// polynomial is p, deduplicated by the resulting ideal. Requires
/// deg(p) <= n - 1.
OracleReport count_by_arrangements(AmbientDim n, const RatPoly& p, OracleOptions opts = {});

enum class CrossVerdict { Agree, Disagree, OracleInfeasible };

const char* cross_verdict_name(CrossVerdict v);

struct CrossCheckResult {
    CrossVerdict verdict;
    BettiSumResult formula;
    std::optional<BigInt> oracle_value;
    std::optional<OracleReport> report;
    std::string detail;
};

/// Runs betti_sum and the best-applicable oracle and compares. A
/// disagreement is a finding, not an error.
CrossCheckResult cross_check(AmbientDim n, const Partition& lambda, OracleOptions opts = {});

}  // namespace hilbetti
