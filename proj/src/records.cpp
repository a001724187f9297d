#include "hilbetti/records.hpp"

#include <nlohmann/json.hpp>

namespace hilbetti {

std::vector<std::string> poly_coeff_strings(const RatPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

RatPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<BigRat> cs;
    cs.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        BigRat c(s);
        c.canonicalize();
        cs.push_back(c);
    }
    return RatPoly(std::move(cs));
}

json oracle_report_json(const OracleReport& report) {
    json j;
    j["method"] = oracle_method_name(report.method);
    j["count"] = report.count.get_str();
    j["bound"] = report.bound_used;
    j["stabilized"] = report.stabilized;
    j["nodes"] = std::to_string(report.nodes);
    if (!report.witnesses.empty()) {
        json w = json::array();
        for (const auto& ideal : report.witnesses) w.push_back(ideal.str());
        j["witnesses"] = w;
    }
    return j;
}

json OutputRecord::to_json() const {
    json j;
    j["n"] = n;
    j["lambda"] = lambda;
    j["polynomial"] = polynomial;
    j["smooth"] = smooth;
    j["families"] = families;
    if (betti) j["betti_sum"] = *betti;
    if (family_used) j["family_used"] = *family_used;
    if (!consistency_notes.empty()) {
        json notes_json = json::array();
        for (const auto& [family, value] : consistency_notes) {
            notes_json.push_back(json{{"family", family}, {"value", value}});
        }
        j["consistency_notes"] = notes_json;
    }
    if (verify_verdict) j["verify"] = *verify_verdict;
    if (oracle) j["oracle"] = oracle_report_json(*oracle);
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

OutputRecord OutputRecord::from_json(const json& j) {
    OutputRecord r;
    r.n = j.at("n").get<int>();
    r.lambda = j.at("lambda").get<std::string>();
    r.polynomial = j.at("polynomial").get<std::vector<std::string>>();
    r.smooth = j.at("smooth").get<bool>();
    r.families = j.at("families").get<std::vector<std::string>>();
    if (j.contains("betti_sum")) r.betti = j.at("betti_sum").get<std::string>();
    if (j.contains("family_used")) r.family_used = j.at("family_used").get<std::string>();
    if (j.contains("consistency_notes")) {
        for (const auto& item : j.at("consistency_notes")) {
            r.consistency_notes.emplace_back(item.at("family").get<std::string>(),
                                             item.at("value").get<std::string>());
        }
    }
    if (j.contains("verify")) r.verify_verdict = j.at("verify").get<std::string>();
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        OracleReport report;
        report.method = o.at("method").get<std::string>() == "IdealEnum"
                            ? OracleMethod::IdealEnum
                            : OracleMethod::ArrangementEnum;
        report.count = BigInt(o.at("count").get<std::string>());
        report.bound_used = o.at("bound").get<int>();
        report.stabilized = o.at("stabilized").get<bool>();
        report.nodes = std::stoll(o.at("nodes").get<std::string>());
        if (o.contains("witnesses")) {
            for (const auto& w : o.at("witnesses")) {
                report.witnesses.push_back(
                    MonomialIdeal::parse(r.n + 1, w.get<std::string>()));
            }
        }
        r.oracle = std::move(report);
    }
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

bool OutputRecord::operator==(const OutputRecord& o) const {
    return to_json() == o.to_json();
}

}  // namespace hilbetti
