#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hilbetti/oracle.hpp"

namespace hilbetti {

using json = nlohmann::ordered_json;

/// One result row of the CLI, with a stable JSON schema. Field order is
/// fixed and all integers are serialized as decimal strings so that
/// arbitrary-precision values survive any downstream tool.
struct OutputRecord {
    int n = 0;
    std::string lambda;
    std::vector<std::string> polynomial;  // coefficients, ascending degree
    bool smooth = false;
    std::vector<std::string> families;
    std::optional<std::string> betti;
    std::optional<std::string> family_used;
    std::vector<std::pair<std::string, std::string>> consistency_notes;
    std::optional<std::string> verify_verdict;
    std::optional<OracleReport> oracle;
    std::vector<std::string> notes;

    json to_json() const;
    static OutputRecord from_json(const json& j);
    bool operator==(const OutputRecord& o) const;
};

json oracle_report_json(const OracleReport& report);

std::vector<std::string> poly_coeff_strings(const RatPoly& p);
RatPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

}  // namespace hilbetti
