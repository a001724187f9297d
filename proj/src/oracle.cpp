#include "hilbetti/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "hilbetti/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbetti {

const char* oracle_method_name(OracleMethod m) {
    return m == OracleMethod::IdealEnum ? "IdealEnum" : "ArrangementEnum";
}

const char* cross_verdict_name(CrossVerdict v) {
    switch (v) {
        case CrossVerdict::Agree: return "AGREE";
        case CrossVerdict::Disagree: return "DISAGREE";
        case CrossVerdict::OracleInfeasible: return "ORACLE_INFEASIBLE";
    }
    return "?";
}

namespace {

// Shared bookkeeping for one enumeration pass. The node counter is global
// across workers; once it passes the budget everyone winds down and the
// pass reports BudgetExceeded.
struct SearchBudget {
    std::atomic<long long> nodes{0};
    std::atomic<bool> blown{false};
    long long budget;

    explicit SearchBudget(long long b) : budget(b) {}

    // Returns false once the budget is gone.
    bool tick() {
        if (blown.load(std::memory_order_relaxed)) return false;
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
            blown.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Ideal-level enumeration

// All monomials of degree <= cap in lex-ascending exponent order.
std::vector<Monomial> monomials_up_to(int nvars, int cap) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int axis, int left) -> void {
        if (axis == nvars) {
            out.emplace_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<size_t>(axis)] = v;
            self(self, axis + 1, left - v);
        }
        e[static_cast<size_t>(axis)] = 0;
    };
    rec(rec, 0, cap);
    std::sort(out.begin(), out.end());
    return out;
}

struct IdealSearch {
    int nvars;
    int cap;
    const RatPoly* target;
    long long target_top;  // (n-1)!-scaled coefficient of d^{n-1}, for the orthant bound
    long long target_const;  // constant term when the target has degree <= 0, else -1
    std::vector<Monomial> cands;
    // suffix_min[i][axis] = min exponent on axis over cands[i..]
    std::vector<std::vector<int>> suffix_min;
    // For 3 variables and constant targets: suffix_profile[pair][i][v] =
    // min exponent on axis j over candidates i.. whose axis-k exponent is
    // <= v, where (j, k) are the fixed axes of the pair. Used to bound the
    // number of rays every completion of a branch must keep.
    std::vector<std::vector<std::vector<int>>> suffix_profile;
    std::vector<std::array<int, 2>> pair_axes;
    std::vector<RatPoly> shift_cache;  // binomial_poly(n-1-e, n-1), indexed by e
    SearchBudget* budget;

    void init(int nv, const RatPoly& p, int cap_, SearchBudget* b) {
        nvars = nv;
        cap = cap_;
        target = &p;
        budget = b;
        cands = monomials_up_to(nv, cap);
        suffix_min.assign(cands.size() + 1, std::vector<int>(static_cast<size_t>(nv), cap + 1));
        for (size_t i = cands.size(); i-- > 0;) {
            for (int a = 0; a < nv; ++a) {
                suffix_min[i][static_cast<size_t>(a)] =
                    std::min(suffix_min[i + 1][static_cast<size_t>(a)], cands[i].exp(a));
            }
        }
        int maxdeg = nv * (cap + 1);
        shift_cache.reserve(static_cast<size_t>(maxdeg) + 1);
        for (int e = 0; e <= maxdeg; ++e) {
            shift_cache.push_back(
                binomial_poly(nv - 1 - e, static_cast<unsigned long>(nv - 1)));
        }
        BigRat top = p.coeff(nv - 2) * BigRat(factorial(static_cast<unsigned long>(nv - 2)));
        // degree cannot exceed n-1 for a proper ideal; non-integer top
        // just means no match is possible on that coefficient
        target_top = (top.get_den() == 1 && top.get_num().fits_slong_p())
                         ? top.get_num().get_si()
                         : -1;
        target_const = -1;
        if (p.degree() <= 0) {
            BigRat c0 = p.coeff(0);
            if (c0.get_den() == 1 && c0 >= 0 && c0.get_num().fits_slong_p()) {
                target_const = c0.get_num().get_si();
            }
        }
        if (nvars == 3 && target_const >= 0) {
            pair_axes = {{{1, 2}}, {{0, 2}}, {{0, 1}}};
            suffix_profile.assign(3, std::vector<std::vector<int>>(
                                         cands.size() + 1,
                                         std::vector<int>(static_cast<size_t>(cap) + 1, cap + 1)));
            for (int pr = 0; pr < 3; ++pr) {
                int j = pair_axes[static_cast<size_t>(pr)][0];
                int k = pair_axes[static_cast<size_t>(pr)][1];
                auto& prof = suffix_profile[static_cast<size_t>(pr)];
                for (size_t i = cands.size(); i-- > 0;) {
                    prof[i] = prof[i + 1];
                    for (int v = cands[i].exp(k); v <= cap; ++v) {
                        prof[i][static_cast<size_t>(v)] =
                            std::min(prof[i][static_cast<size_t>(v)], cands[i].exp(j));
                    }
                }
            }
        }
    }

    RatPoly poly_of(const std::vector<Monomial>& gens) const {
        // 2^|gens| inclusion-exclusion; |gens| stays small in practice
        std::vector<long long> coeffs(shift_cache.size(), 0);
        std::vector<int> lcm(static_cast<size_t>(nvars), 0);
        accumulate(gens, 0, lcm, 1, coeffs);
        RatPoly h;
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e] != 0) {
                h = h + shift_cache[e].scaled(BigRat(static_cast<long>(coeffs[e])));
            }
        }
        return h;
    }

    void accumulate(const std::vector<Monomial>& gens, size_t idx, std::vector<int>& lcm,
                    int sign, std::vector<long long>& coeffs) const {
        if (idx == gens.size()) {
            int deg = 0;
            for (int x : lcm) deg += x;
            coeffs[static_cast<size_t>(deg)] += sign;
            return;
        }
        accumulate(gens, idx + 1, lcm, sign, coeffs);
        std::vector<int> saved = lcm;
        for (int i = 0; i < nvars; ++i) {
            lcm[static_cast<size_t>(i)] = std::max(lcm[static_cast<size_t>(i)], gens[idx].exp(i));
        }
        accumulate(gens, idx + 1, lcm, -sign, coeffs);
        lcm = std::move(saved);
    }

    // Lower bound on the top coefficient any completion of this branch can
    // reach: final generators are a subset of pool = chosen + cands[i..],
    // so the axis-wise minimum exponent over the pool bounds the final
    // minimum from below, and the complement keeps at least that many
    // parallel n-orthants per axis. Nondecreasing in i, so the caller may
    // break out of the sibling loop on failure.
    bool top_coefficient_impossible(const std::vector<int>& chosen_min, size_t i) const {
        long long floor_count = 0;
        for (int a = 0; a < nvars; ++a) {
            floor_count += std::min(chosen_min[static_cast<size_t>(a)],
                                    suffix_min[i][static_cast<size_t>(a)]);
        }
        return target_top < 0 || floor_count > target_top;
    }

    // For 3 variables and a constant target: count the rays no completion
    // of this branch can remove. A ray with free axis i and offsets (u, v)
    // on the fixed pair survives every completion when no pool generator
    // has both fixed exponents at or below (u, v). Also nondecreasing in i.
    bool permanent_rays_impossible(const std::vector<Monomial>& gens, size_t i) const {
        if (suffix_profile.empty()) return false;
        long long area = 0;
        for (int pr = 0; pr < 3; ++pr) {
            int j = pair_axes[static_cast<size_t>(pr)][0];
            int k = pair_axes[static_cast<size_t>(pr)][1];
            const auto& suffix = suffix_profile[static_cast<size_t>(pr)][i];
            for (int v = 0; v <= cap; ++v) {
                int f = suffix[static_cast<size_t>(v)];
                for (const auto& g : gens) {
                    if (g.exp(k) <= v) f = std::min(f, g.exp(j));
                }
                area += f;
                if (area > target_const) return true;
            }
        }
        return false;
    }

    void search(std::vector<Monomial>& gens, std::vector<int>& chosen_min, size_t from,
                std::set<MonomialIdeal>& found) const {
        if (!budget->tick()) return;
        RatPoly h = poly_of(gens);
        int cmp = compare_eventually(h, *target);
        if (cmp < 0) return;  // adding generators only shrinks the count
        if (cmp == 0) {
            MonomialIdeal ideal(nvars, gens);
            if (saturate(ideal) == ideal) found.insert(ideal);
        }
        for (size_t i = from; i < cands.size(); ++i) {
            const Monomial& c = cands[i];
            bool divisible = false;
            for (const auto& g : gens) {
                if (g.divides(c)) {
                    divisible = true;
                    break;
                }
            }
            if (divisible) continue;
            if (top_coefficient_impossible(chosen_min, i)) break;
            if (target_const >= 0 && permanent_rays_impossible(gens, i)) break;
            std::vector<int> next_min(chosen_min);
            for (int a = 0; a < nvars; ++a) {
                next_min[static_cast<size_t>(a)] =
                    std::min(next_min[static_cast<size_t>(a)], c.exp(a));
            }
            gens.push_back(c);
            search(gens, next_min, i + 1, found);
            gens.pop_back();
        }
    }
};

std::set<MonomialIdeal> enumerate_ideals(int nvars, const RatPoly& p, int cap,
                                         SearchBudget* budget, Exec exec) {
    IdealSearch s;
    s.init(nvars, p, cap, budget);

    std::set<MonomialIdeal> found;
    // the empty antichain: the zero ideal, whose complement is everything
    if (budget->tick()) {
        MonomialIdeal zero = MonomialIdeal::zero(nvars);
        if (hilbert_polynomial(zero, Exec::Serial).poly == p) found.insert(zero);
    }

    const int first_count = static_cast<int>(s.cands.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < first_count; ++i) {
        std::vector<int> none(static_cast<size_t>(nvars), cap + 1);
        if (s.top_coefficient_impossible(none, static_cast<size_t>(i))) continue;
        if (s.target_const >= 0 && s.permanent_rays_impossible({}, static_cast<size_t>(i))) {
            continue;
        }
        std::vector<int> chosen_min(static_cast<size_t>(nvars), cap + 1);
        for (int a = 0; a < nvars; ++a) {
            chosen_min[static_cast<size_t>(a)] = s.cands[static_cast<size_t>(i)].exp(a);
        }
        std::vector<Monomial> gens{s.cands[static_cast<size_t>(i)]};
        std::set<MonomialIdeal> local;
        s.search(gens, chosen_min, static_cast<size_t>(i) + 1, local);
#ifdef _OPENMP
#pragma omp critical
#endif
        found.insert(local.begin(), local.end());
    }
    if (budget->blown.load()) {
        throw BudgetExceeded("ideal enumeration at degree cap " + std::to_string(cap));
    }
    return found;
}

// ---------------------------------------------------------------------------
// Arrangement-level enumeration

// Orthants of dimension k with every fixed offset below `bound`, in
// canonical order within the dimension (free axes lex, then offsets lex).
// Predecessor offsets sort earlier, which the closure check relies on.
std::vector<Orthant> stage_candidates(int nvars, int k, int bound) {
    std::vector<Orthant> out;
    std::vector<int> axes;
    auto free_rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            uint32_t mask = 0;
            for (int a : axes) mask |= 1u << a;
            std::vector<int> fixed;
            for (int i = 0; i < nvars; ++i) {
                if (!((mask >> i) & 1u)) fixed.push_back(i);
            }
            std::vector<int> off(static_cast<size_t>(nvars), 0);
            auto off_rec = [&](auto&& oself, size_t pos) -> void {
                if (pos == fixed.size()) {
                    out.emplace_back(nvars, mask, off);
                    return;
                }
                for (int v = 0; v < bound; ++v) {
                    off[static_cast<size_t>(fixed[pos])] = v;
                    oself(oself, pos + 1);
                }
                off[static_cast<size_t>(fixed[pos])] = 0;
            };
            off_rec(off_rec, 0);
            return;
        }
        for (int a = start; a < nvars; ++a) {
            axes.push_back(a);
            self(self, a + 1, left - 1);
            axes.pop_back();
        }
    };
    free_rec(free_rec, 0, k);
    return out;
}

struct ArrangementSearch {
    int nvars;
    const RatPoly* target;
    std::vector<std::vector<Orthant>> stages;  // index k = dimension
    SearchBudget* budget;

    // Candidate admissibility in an antichain whose union must extend to a
    // downward-closed set: the candidate must not sit inside a chosen
    // orthant, and each predecessor (same free axes, one fixed offset
    // lowered) must already sit inside a single chosen orthant. A set
    // chosen this way is downward closed, and conversely every
    // downward-closed union admits this order, because an orthant inside
    // a finite union of orthants is inside one of them.
    bool admissible(const std::vector<Orthant>& chosen, const Orthant& cand) const {
        for (const auto& o : chosen) {
            if (cand.subset_of(o)) return false;
        }
        for (int i = 0; i < nvars; ++i) {
            if (cand.is_free(i) || cand.offset(i) == 0) continue;
            std::vector<int> off(static_cast<size_t>(nvars));
            for (int j = 0; j < nvars; ++j) off[static_cast<size_t>(j)] = cand.offset(j);
            off[static_cast<size_t>(i)] -= 1;
            Orthant pred(nvars, cand.free_mask(), std::move(off));
            bool covered = false;
            for (const auto& o : chosen) {
                if (pred.subset_of(o)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    RatPoly poly_of(const std::vector<Orthant>& chosen) const {
        return arrangement_hilbert_polynomial(Arrangement(nvars, chosen));
    }

    // Number of k-orthants the rest of this branch must add: each one
    // raises the d^{k-1} coefficient by exactly 1/(k-1)! and lower stages
    // leave it alone.
    std::optional<long long> stage_quota(const std::vector<Orthant>& chosen, int k) const {
        BigRat diff = target->coeff(k - 1) - poly_of(chosen).coeff(k - 1);
        BigRat quota = diff * BigRat(factorial(static_cast<unsigned long>(k - 1)));
        if (quota < 0 || quota.get_den() != 1 || !quota.get_num().fits_slong_p()) {
            return std::nullopt;
        }
        return quota.get_num().get_si();
    }

    void record(const std::vector<Orthant>& chosen, std::set<MonomialIdeal>& found) const {
        Arrangement arr(nvars, chosen);
        if (arrangement_hilbert_polynomial(arr) != *target) {
            throw std::logic_error("arrangement search: coefficient bookkeeping failed");
        }
        found.insert(ideal_of_union(arr, Exec::Serial));
    }

    void next_stage(std::vector<Orthant>& chosen, int k, std::set<MonomialIdeal>& found) const {
        if (k == 0) {
            record(chosen, found);
            return;
        }
        auto quota = stage_quota(chosen, k);
        if (!quota) return;
        extend_stage(chosen, k, *quota, 0, found);
    }

    void extend_stage(std::vector<Orthant>& chosen, int k, long long need, size_t from,
                      std::set<MonomialIdeal>& found) const {
        if (need == 0) {
            next_stage(chosen, k - 1, found);
            return;
        }
        const auto& cands = stages[static_cast<size_t>(k)];
        for (size_t i = from; i + static_cast<size_t>(need) <= cands.size(); ++i) {
            if (!budget->tick()) return;
            if (!admissible(chosen, cands[i])) continue;
            chosen.push_back(cands[i]);
            extend_stage(chosen, k, need - 1, i + 1, found);
            chosen.pop_back();
        }
    }
};

std::set<MonomialIdeal> enumerate_arrangements(int nvars, const RatPoly& p, int bound,
                                               SearchBudget* budget, Exec exec) {
    ArrangementSearch s;
    s.nvars = nvars;
    s.target = &p;
    s.budget = budget;
    int top_dim = std::min(nvars, p.degree() + 1);
    s.stages.resize(static_cast<size_t>(std::max(top_dim, 0)) + 1);
    for (int k = 1; k <= top_dim; ++k) {
        s.stages[static_cast<size_t>(k)] = stage_candidates(nvars, k, bound);
    }

    std::set<MonomialIdeal> found;
    // Walk down through stages with quota zero to the first real choice.
    std::vector<Orthant> chosen;
    int k = top_dim;
    long long first_need = 0;
    while (k > 0) {
        auto quota = s.stage_quota(chosen, k);
        if (!quota) return found;  // no arrangement can match the target
        if (*quota > 0) {
            first_need = *quota;
            break;
        }
        --k;
    }
    if (k == 0) {
        if (budget->tick()) s.record(chosen, found);
        return found;
    }

    const auto& first_cands = s.stages[static_cast<size_t>(k)];
    const int first_count = static_cast<int>(first_cands.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < first_count; ++i) {
        if (!budget->tick()) continue;
        const Orthant& cand = first_cands[static_cast<size_t>(i)];
        if (!s.admissible({}, cand)) continue;
        std::vector<Orthant> local_chosen{cand};
        std::set<MonomialIdeal> local;
        s.extend_stage(local_chosen, k, first_need - 1, static_cast<size_t>(i) + 1, local);
#ifdef _OPENMP
#pragma omp critical
#endif
        found.insert(local.begin(), local.end());
    }
    if (budget->blown.load()) {
        throw BudgetExceeded("arrangement enumeration at offset box " + std::to_string(bound));
    }
    return found;
}

// ---------------------------------------------------------------------------

long long constant_magnitude(const RatPoly& p) {
    BigRat c0 = p.coeff(0);
    BigInt num = abs(c0.get_num()) / c0.get_den();
    return num.fits_slong_p() ? num.get_si() : 64;
}

}  // namespace

OracleReport count_by_ideals(AmbientDim dim, const RatPoly& p, OracleOptions opts) {
    const int nvars = dim.n + 1;
    int cap = opts.bound;
    if (cap < 0) {
        cap = static_cast<int>(constant_magnitude(p)) + std::max(p.degree(), 0) + 2;
    }
    SearchBudget budget(opts.budget);
    std::set<MonomialIdeal> base = enumerate_ideals(nvars, p, cap, &budget, opts.exec);
    std::set<MonomialIdeal> wider = enumerate_ideals(nvars, p, cap + 1, &budget, opts.exec);

    OracleReport report;
    report.method = OracleMethod::IdealEnum;
    report.bound_used = cap;
    report.count = base.size();
    report.stabilized = base.size() == wider.size();
    report.nodes = budget.nodes.load();
    if (opts.keep_witnesses) report.witnesses.assign(base.begin(), base.end());
    return report;
}

OracleReport count_by_arrangements(AmbientDim dim, const RatPoly& p, OracleOptions opts) {
    const int nvars = dim.n + 1;
    if (p.degree() > dim.n - 1) {
        throw std::invalid_argument("count_by_arrangements: deg(p) must be <= n-1");
    }
    int bound = opts.bound;
    if (bound < 0) {
        bound = static_cast<int>(constant_magnitude(p)) + std::max(p.degree(), 0) + 3;
        bound = std::max(bound, 2);
    }
    SearchBudget budget(opts.budget);
    std::set<MonomialIdeal> base = enumerate_arrangements(nvars, p, bound, &budget, opts.exec);
    std::set<MonomialIdeal> wider =
        enumerate_arrangements(nvars, p, bound + 1, &budget, opts.exec);

    OracleReport report;
    report.method = OracleMethod::ArrangementEnum;
    report.bound_used = bound;
    report.count = base.size();
    report.stabilized = base.size() == wider.size();
    report.nodes = budget.nodes.load();
    if (opts.keep_witnesses) report.witnesses.assign(base.begin(), base.end());
    return report;
}

CrossCheckResult cross_check(AmbientDim dim, const Partition& lambda, OracleOptions opts) {
    CrossCheckResult res;
    res.formula = betti_sum(dim, lambda);
    RatPoly p = encode(lambda);

    bool use_ideals = dim.n == 1 || p.degree() > dim.n - 1;
    try {
        OracleReport report = use_ideals ? count_by_ideals(dim, p, opts)
                                         : count_by_arrangements(dim, p, opts);
        if (!report.stabilized) {
            res.verdict = CrossVerdict::OracleInfeasible;
            res.detail = "count did not stabilize at bound " + std::to_string(report.bound_used);
            res.report = std::move(report);
            return res;
        }
        res.oracle_value = report.count;
        res.verdict = (report.count == res.formula.value) ? CrossVerdict::Agree
                                                          : CrossVerdict::Disagree;
        if (res.verdict == CrossVerdict::Disagree) {
            res.detail = "formula " + res.formula.value.get_str() + " vs oracle " +
                         report.count.get_str();
        }
        res.report = std::move(report);
    } catch (const BudgetExceeded& e) {
        res.verdict = CrossVerdict::OracleInfeasible;
        res.detail = e.what();
    }
    return res;
}

}  // namespace hilbetti
