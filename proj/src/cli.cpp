#include "hilbetti/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "hilbetti/errors.hpp"

namespace hilbetti::cli {

namespace {

void fill_classification(OutputRecord& record, const SmoothnessVerdict& verdict) {
    record.smooth = verdict.smooth;
    for (const auto& m : verdict.families) {
        record.families.emplace_back(family_name(m.family));
        if (m.family == Family::F7 && m.full_space) {
            record.notes.emplace_back("family 7 matched via the lambda = (n+1) reading");
        }
    }
}

OutputRecord base_record(int n, const Partition& lambda) {
    OutputRecord record;
    record.n = n;
    record.lambda = lambda.str();
    record.polynomial = poly_coeff_strings(encode(lambda));
    return record;
}

}  // namespace

CommandResult cmd_classify(int n, const std::string& lambda_text) {
    CommandResult res;
    try {
        Partition lambda = Partition::parse(lambda_text);
        AmbientDim dim(n);
        res.record = base_record(n, lambda);
        SmoothnessVerdict verdict = classify(dim, lambda);
        fill_classification(res.record, verdict);
        res.exit_code = verdict.smooth ? kExitOk : kExitNotSmooth;
    } catch (const std::exception& e) {
        res.record.n = n;
        res.record.lambda = lambda_text;
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitBadInput;
    }
    return res;
}

CommandResult cmd_betti(int n, const std::string& lambda_text, const BettiOptions& opts) {
    CommandResult res;
    Partition lambda;
    try {
        lambda = Partition::parse(lambda_text);
        AmbientDim dim(n);
        res.record = base_record(n, lambda);
        SmoothnessVerdict verdict = classify(dim, lambda);
        fill_classification(res.record, verdict);
        if (!verdict.smooth) {
            res.exit_code = kExitNotSmooth;
            return res;
        }
        BettiSumResult betti = betti_sum(dim, lambda);
        res.record.betti = betti.value.get_str();
        res.record.family_used = dispatch_name(betti.family_used);
        for (const auto& [family, value] : betti.consistency_notes) {
            res.record.consistency_notes.emplace_back(family_name(family), value.get_str());
        }
        for (const auto& note : betti.notes) res.record.notes.push_back(note);
        if (opts.verify) {
            OracleOptions oracle_opts;
            oracle_opts.budget = opts.budget;
            oracle_opts.bound = opts.bound;
            oracle_opts.keep_witnesses = opts.witnesses;
            CrossCheckResult check = cross_check(dim, lambda, oracle_opts);
            res.record.verify_verdict = cross_verdict_name(check.verdict);
            if (check.report) res.record.oracle = std::move(*check.report);
            if (!check.detail.empty()) res.record.notes.push_back(check.detail);
        }
    } catch (const UnsupportedFamily& e) {
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitUnsupported;
    } catch (const NotSmooth& e) {
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitNotSmooth;
    } catch (const std::exception& e) {
        res.record.n = n;
        if (res.record.lambda.empty()) res.record.lambda = lambda_text;
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitBadInput;
    }
    return res;
}

CommandResult cmd_encode(const std::string& lambda_text) {
    CommandResult res;
    try {
        Partition lambda = Partition::parse(lambda_text);
        res.record.lambda = lambda.str();
        res.record.polynomial = poly_coeff_strings(encode(lambda));
        res.record.notes.push_back("p(d) = " + encode(lambda).str());
    } catch (const std::exception& e) {
        res.record.lambda = lambda_text;
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitBadInput;
    }
    return res;
}

CommandResult cmd_decode(const RatPoly& p) {
    CommandResult res;
    res.record.polynomial = poly_coeff_strings(p);
    try {
        Partition lambda = decode(p);
        res.record.lambda = lambda.str();
    } catch (const std::exception& e) {
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitBadInput;
    }
    return res;
}

CommandResult cmd_oracle(OracleMethod method, int n, const RatPoly& p,
                         const OracleOptions& opts) {
    CommandResult res;
    res.record.n = n;
    res.record.polynomial = poly_coeff_strings(p);
    try {
        Partition lambda = decode(p);
        res.record.lambda = lambda.str();
    } catch (const NotAHilbertPolynomial&) {
        res.record.notes.emplace_back("polynomial has no Macaulay partition");
    }
    try {
        AmbientDim dim(n);
        OracleReport report = method == OracleMethod::IdealEnum
                                  ? count_by_ideals(dim, p, opts)
                                  : count_by_arrangements(dim, p, opts);
        res.record.oracle = std::move(report);
    } catch (const std::exception& e) {
        res.record.notes.emplace_back(e.what());
        res.exit_code = kExitBadInput;
    }
    return res;
}

namespace {

void emit_partitions(int n, int r, std::vector<int>& parts,
                     const std::function<void(const Partition&)>& fn, int max_part) {
    if (static_cast<int>(parts.size()) == r) {
        fn(Partition(parts));
        return;
    }
    int bound = parts.empty() ? max_part : parts.back();
    for (int v = std::min(bound, max_part); v >= 1; --v) {
        parts.push_back(v);
        emit_partitions(n, r, parts, fn, max_part);
        parts.pop_back();
    }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void cmd_table(std::ostream& os, const std::string& family, int n_from, int n_to, int max_r) {
    os << "n,lambda,family,betti_sum\n";
    for (int n = n_from; n <= n_to; ++n) {
        AmbientDim dim(n);
        for (int r = 0; r <= max_r; ++r) {
            auto row = [&](const Partition& lambda) {
                SmoothnessVerdict verdict;
                try {
                    verdict = classify(dim, lambda);
                } catch (const InadmissiblePartition&) {
                    return;
                }
                bool matched = false;
                for (const auto& m : verdict.families) {
                    if (family_name(m.family) == family) matched = true;
                }
                if (!matched) return;
                std::string value;
                try {
                    value = betti_sum(dim, lambda).value.get_str();
                } catch (const UnsupportedFamily&) {
                    // family 2 has no computed formula; leave the cell empty
                }
                os << n << "," << csv_quote(lambda.str()) << "," << family << "," << value
                   << "\n";
            };
            if (r == 0) {
                row(Partition());
                continue;
            }
            if (r == 1) row(Partition({n + 1}));  // the whole of P^n
            std::vector<int> parts;
            emit_partitions(n, r, parts, row, n);
        }
    }
}

std::string render_text(const OutputRecord& record) {
    std::ostringstream os;
    if (!record.lambda.empty() || !record.families.empty() || record.n > 0) {
        os << "n=" << record.n << " lambda=(" << record.lambda << ")\n";
    }
    if (!record.polynomial.empty()) {
        os << "polynomial: " << poly_from_coeff_strings(record.polynomial).str() << "\n";
    }
    if (!record.families.empty() || record.smooth) {
        os << "smooth: " << (record.smooth ? "yes" : "no") << " families: [";
        for (size_t i = 0; i < record.families.size(); ++i) {
            if (i) os << ",";
            os << record.families[i];
        }
        os << "]\n";
    }
    if (record.betti) {
        os << "betti_sum: " << *record.betti;
        if (record.family_used) os << "  (case " << *record.family_used << ")";
        os << "\n";
    }
    for (const auto& [family, value] : record.consistency_notes) {
        os << "note: formula " << family << " would give " << value << "\n";
    }
    if (record.verify_verdict) os << "verify: " << *record.verify_verdict << "\n";
    if (record.oracle) {
        const auto& o = *record.oracle;
        os << "oracle: " << oracle_method_name(o.method) << " count=" << o.count.get_str()
           << " bound=" << o.bound_used << " stabilized=" << (o.stabilized ? "yes" : "no")
           << " nodes=" << o.nodes << "\n";
        for (const auto& w : o.witnesses) os << "  witness: " << w.str() << "\n";
    }
    for (const auto& note : record.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace hilbetti::cli
