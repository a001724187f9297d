#include "hilbetti/closedform.hpp"

#include <stdexcept>

#include "hilbetti/errors.hpp"

namespace hilbetti {

const char* dispatch_name(DispatchCase c) {
    switch (c) {
        case DispatchCase::F1a: return "F1a";
        case DispatchCase::F1b: return "F1b";
        case DispatchCase::F3: return "F3";
        case DispatchCase::F4: return "F4";
        case DispatchCase::F5: return "F5";
        case DispatchCase::F6: return "F6";
        case DispatchCase::F7: return "F7";
    }
    return "?";
}

namespace {

BigInt exact_div(const BigInt& num, long den) {
    if (num % den != 0) {
        // An inexact division here means a formula was transcribed wrong.
        throw std::logic_error("exact_div: " + num.get_str() +
                               " not divisible by " + std::to_string(den));
    }
    return num / den;
}

}  // namespace

BigInt betti_line(int r) { return BigInt(r) + 1; }

BigInt betti_plane(int m, int rprime) {
    BigInt sum = 0;
    for (int c1 = 0; c1 <= rprime; ++c1) {
        for (int c2 = 0; c2 + c1 <= rprime; ++c2) {
            int c3 = rprime - c1 - c2;
            sum += partition_count(static_cast<unsigned long>(c1)) *
                   partition_count(static_cast<unsigned long>(c2)) *
                   partition_count(static_cast<unsigned long>(c3));
        }
    }
    return binomial(BigInt(m) + 2, 2) * sum;
}

BigInt betti_f3(int n, int r, int mid) {
    if (r == 1) return BigInt(n) + 1;  // lambda = (1)
    return binomial(BigInt(n + r - 2), static_cast<unsigned long>(r - 2)) *
           binomial(BigInt(n + 1), static_cast<unsigned long>(mid)) * (n + 1);
}

BigInt betti_f4(int n, int r, int s, int mid) {
    BigInt inner = binomial(BigInt(n + 1), static_cast<unsigned long>(mid + 1)) *
                       (binomial(BigInt(mid + 1 + s + 2), static_cast<unsigned long>(s + 2)) -
                        (mid + 1)) +
                   binomial(BigInt(n + 1), static_cast<unsigned long>(mid));
    return binomial(BigInt(n + r - s - 3), static_cast<unsigned long>(r - s - 3)) * inner *
           (n + 1);
}

BigInt betti_f5(int n, int r, int s) {
    BigInt inner =
        binomial(BigInt(n + 1), 3) *
            (binomial(BigInt(3 + s + 4), static_cast<unsigned long>(s + 4)) - 3) +
        binomial(BigInt(n + 1), 2);
    return binomial(BigInt(n + r - s - 5), static_cast<unsigned long>(r - s - 5)) * inner *
           (n + 1);
}

BigInt betti_f6(int n, int k) {
    BigInt cubic = BigInt(n) * (n + 1) * (5 * n + 1);
    return binomial(BigInt(k + n), static_cast<unsigned long>(n)) * exact_div(cubic, 3);
}

namespace {

BigInt eval_family(const FamilyMatch& m, int n) {
    switch (m.family) {
        case Family::F3: return betti_f3(n, m.r, m.mid);
        case Family::F4: return betti_f4(n, m.r, m.s, m.mid);
        case Family::F5: return betti_f5(n, m.r, m.s);
        case Family::F6: return betti_f6(n, m.k);
        default: throw std::logic_error("eval_family: no formula");
    }
}

DispatchCase dispatch_of(Family f) {
    switch (f) {
        case Family::F3: return DispatchCase::F3;
        case Family::F4: return DispatchCase::F4;
        case Family::F5: return DispatchCase::F5;
        case Family::F6: return DispatchCase::F6;
        default: throw std::logic_error("dispatch_of: no formula family");
    }
}

}  // namespace

BettiSumResult betti_sum(AmbientDim dim, const Partition& lambda) {
    const int n = dim.n;
    SmoothnessVerdict verdict = classify(dim, lambda);
    if (!verdict.smooth) {
        throw NotSmooth("(" + std::to_string(n) + ", (" + lambda.str() + "))");
    }

    BettiSumResult res;

    if (const FamilyMatch* f7 = verdict.find(Family::F7)) {
        res.value = 1;
        res.family_used = DispatchCase::F7;
        if (f7->full_space) {
            res.notes.push_back("family 7 matched via the lambda = (n+1) reading");
        }
        return res;
    }

    // The F3..F6 formulas, evaluated blind wherever their pattern matched.
    std::vector<std::pair<Family, BigInt>> formula_values;
    for (const auto& m : verdict.families) {
        if (m.family == Family::F3 || m.family == Family::F4 ||
            m.family == Family::F5 || m.family == Family::F6) {
            formula_values.emplace_back(m.family, eval_family(m, n));
        }
    }

    if (n == 1) {
        // Every admissible lambda here is (1^r); (2) was caught by F7.
        res.value = betti_line(lambda.r());
        res.family_used = DispatchCase::F1a;
        res.consistency_notes = std::move(formula_values);
        return res;
    }
    if (n == 2) {
        int m = 0;
        while (m < lambda.r() && lambda.parts()[static_cast<size_t>(m)] == 2) ++m;
        int rprime = lambda.r() - m;
        res.value = betti_plane(m, rprime);
        res.family_used = DispatchCase::F1b;
        res.consistency_notes = std::move(formula_values);
        return res;
    }

    if (formula_values.empty()) {
        // Smooth but only via family 2, which has no computed formula.
        throw UnsupportedFamily("(" + std::to_string(n) + ", (" + lambda.str() + "))");
    }
    res.value = formula_values.front().second;
    res.family_used = dispatch_of(formula_values.front().first);
    res.consistency_notes.assign(formula_values.begin() + 1, formula_values.end());

    if (const FamilyMatch* f3 = verdict.find(Family::F3)) {
        if (f3->mid == n && res.family_used == DispatchCase::F3) {
            res.notes.push_back(
                "lambda_{r-1} = n collapses the family-3 pattern into the n-run; "
                "arrangement-oracle cross-check recommended");
        }
    }
    return res;
}

}  // namespace hilbetti
