#include "hilbetti/staircase.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "hilbetti/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbetti {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
}

int Monomial::degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > o.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<int> out(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) out[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(out));
}

Monomial Monomial::zeroed(int axis) const {
    std::vector<int> out(e_);
    out[static_cast<size_t>(axis)] = 0;
    return Monomial(std::move(out));
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ",";
        os << e_[i];
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("MonomialIdeal: nvars must be >= 1");
    for (const auto& g : gens) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("MonomialIdeal: generator arity mismatch");
        }
    }
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
    return MonomialIdeal(nvars, {Monomial(std::vector<int>(static_cast<size_t>(nvars), 0))});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].degree() == 0;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

MonomialIdeal MonomialIdeal::parse(int nvars, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    std::vector<Monomial> gens;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '[') throw std::invalid_argument("MonomialIdeal::parse: expected '['");
        size_t close = s.find(']', pos);
        if (close == std::string::npos) {
            throw std::invalid_argument("MonomialIdeal::parse: missing ']'");
        }
        std::vector<int> exps;
        std::stringstream inner(s.substr(pos + 1, close - pos - 1));
        std::string tok;
        while (std::getline(inner, tok, ',')) exps.push_back(std::stoi(tok));
        if (static_cast<int>(exps.size()) != nvars) {
            throw std::invalid_argument("MonomialIdeal::parse: tuple arity mismatch");
        }
        gens.emplace_back(std::move(exps));
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != ',') throw std::invalid_argument("MonomialIdeal::parse: expected ','");
            ++pos;
        }
    }
    return MonomialIdeal(nvars, std::move(gens));
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ",";
        os << gens_[i].str();
    }
    return os.str();
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const auto& ga : a.gens()) {
        for (const auto& gb : b.gens()) {
            gens.push_back(ga.lcm(gb));
        }
    }
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
    MonomialIdeal result = MonomialIdeal::zero(ideal.nvars());
    for (int axis = 0; axis < ideal.nvars(); ++axis) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.gens().size());
        for (const auto& g : ideal.gens()) gens.push_back(g.zeroed(axis));
        MonomialIdeal colon(ideal.nvars(), std::move(gens));
        result = (axis == 0) ? colon : intersect(result, colon);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Orthant

Orthant::Orthant(int nvars, uint32_t free_mask, std::vector<int> offsets)
    : nvars_(nvars), free_(free_mask), off_(std::move(offsets)) {
    if (nvars < 1 || nvars > 31) throw std::invalid_argument("Orthant: bad nvars");
    if (static_cast<int>(off_.size()) != nvars) {
        throw std::invalid_argument("Orthant: offset arity mismatch");
    }
    if ((free_ & ((1u << nvars) - 1)) == 0) {
        throw std::invalid_argument("Orthant: needs at least one free axis");
    }
    if (free_ >= (1u << nvars)) throw std::invalid_argument("Orthant: free axis out of range");
    for (int i = 0; i < nvars_; ++i) {
        if (is_free(i)) {
            off_[static_cast<size_t>(i)] = 0;
        } else if (off_[static_cast<size_t>(i)] < 0) {
            throw std::invalid_argument("Orthant: negative offset");
        }
    }
}

Orthant Orthant::make(int nvars, const std::vector<int>& free_axes,
                      const std::vector<std::pair<int, int>>& offsets) {
    uint32_t mask = 0;
    for (int a : free_axes) mask |= 1u << a;
    std::vector<int> off(static_cast<size_t>(nvars), 0);
    for (auto [axis, value] : offsets) off[static_cast<size_t>(axis)] = value;
    return Orthant(nvars, mask, std::move(off));
}

int Orthant::dim() const { return std::popcount(free_); }

int Orthant::offset_sum() const {
    int s = 0;
    for (int x : off_) s += x;
    return s;
}

int Orthant::max_offset() const {
    int m = 0;
    for (int x : off_) m = std::max(m, x);
    return m;
}

bool Orthant::contains(const Monomial& m) const {
    for (int i = 0; i < nvars_; ++i) {
        if (!is_free(i) && m.exp(i) != off_[static_cast<size_t>(i)]) return false;
    }
    return true;
}

bool Orthant::subset_of(const Orthant& o) const {
    if ((free_ & ~o.free_) != 0) return false;  // free axes must nest
    for (int i = 0; i < nvars_; ++i) {
        if (!o.is_free(i) && off_[static_cast<size_t>(i)] != o.off_[static_cast<size_t>(i)]) {
            return false;
        }
    }
    return true;
}

std::optional<Orthant> Orthant::intersect(const Orthant& a, const Orthant& b) {
    uint32_t free_both = a.free_ & b.free_;
    std::vector<int> off(static_cast<size_t>(a.nvars_), 0);
    for (int i = 0; i < a.nvars_; ++i) {
        bool fa = a.is_free(i), fb = b.is_free(i);
        if (fa && fb) continue;
        int va = fa ? -1 : a.off_[static_cast<size_t>(i)];
        int vb = fb ? -1 : b.off_[static_cast<size_t>(i)];
        if (va >= 0 && vb >= 0 && va != vb) return std::nullopt;
        off[static_cast<size_t>(i)] = std::max(va, vb);
    }
    if (free_both == 0) return std::nullopt;  // a single point, not an orthant
    return Orthant(a.nvars_, free_both, std::move(off));
}

namespace {

std::vector<int> free_axes_of(const Orthant& o) {
    std::vector<int> axes;
    for (int i = 0; i < o.nvars(); ++i) {
        if (o.is_free(i)) axes.push_back(i);
    }
    return axes;
}

}  // namespace

bool Orthant::operator<(const Orthant& o) const {
    if (dim() != o.dim()) return dim() > o.dim();
    auto fa = free_axes_of(*this), fb = free_axes_of(o);
    if (fa != fb) return fa < fb;
    return off_ < o.off_;
}

Orthant Orthant::parse(int nvars, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    auto grab = [&](const std::string& key) -> std::string {
        size_t at = s.find(key + "={");
        if (at == std::string::npos) {
            throw std::invalid_argument("Orthant::parse: missing " + key + "= in \"" +
                                        std::string(text) + "\"");
        }
        size_t open = at + key.size() + 2;
        size_t close = s.find('}', open);
        if (close == std::string::npos) throw std::invalid_argument("Orthant::parse: missing '}'");
        return s.substr(open, close - open);
    };
    std::vector<int> free_axes;
    {
        std::stringstream ss(grab("free"));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) free_axes.push_back(std::stoi(tok));
        }
    }
    std::vector<std::pair<int, int>> offsets;
    {
        std::stringstream ss(grab("off"));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            size_t colon = tok.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument("Orthant::parse: offsets need axis:value");
            }
            offsets.emplace_back(std::stoi(tok.substr(0, colon)),
                                 std::stoi(tok.substr(colon + 1)));
        }
    }
    return make(nvars, free_axes, offsets);
}

std::string Orthant::str() const {
    std::ostringstream os;
    os << "free={";
    bool first = true;
    for (int axis : free_axes_of(*this)) {
        if (!first) os << ",";
        os << axis;
        first = false;
    }
    os << "};off={";
    first = true;
    for (int i = 0; i < nvars_; ++i) {
        if (is_free(i)) continue;
        if (!first) os << ",";
        os << i << ":" << off_[static_cast<size_t>(i)];
        first = false;
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Arrangement

Arrangement::Arrangement(int nvars, std::vector<Orthant> orthants) : nvars_(nvars) {
    for (const auto& o : orthants) {
        if (o.nvars() != nvars) throw std::invalid_argument("Arrangement: arity mismatch");
    }
    std::sort(orthants.begin(), orthants.end());
    orthants.erase(std::unique(orthants.begin(), orthants.end()), orthants.end());
    for (const auto& o : orthants) {
        bool covered = false;
        for (const auto& p : orthants) {
            if (!(o == p) && o.subset_of(p)) {
                covered = true;
                break;
            }
        }
        if (!covered) orthants_.push_back(o);
    }
}

bool Arrangement::contains(const Monomial& m) const {
    for (const auto& o : orthants_) {
        if (o.contains(m)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// complement_arrangement

Arrangement complement_arrangement(const MonomialIdeal& ideal) {
    if (saturate(ideal) != ideal) {
        throw NotSaturated("(" + ideal.str() + ")");
    }
    const int nvars = ideal.nvars();
    std::vector<int> maxexp(static_cast<size_t>(nvars), 0);
    for (const auto& g : ideal.gens()) {
        for (int i = 0; i < nvars; ++i) {
            maxexp[static_cast<size_t>(i)] = std::max(maxexp[static_cast<size_t>(i)], g.exp(i));
        }
    }

    // A maximal orthant of the complement fixes only axes where some
    // generator has a positive exponent, at an offset below that maximum;
    // any larger offset could never block a generator, so the axis could
    // be freed while staying inside the complement.
    std::vector<Orthant> found;
    std::vector<int> off(static_cast<size_t>(nvars), 0);
    uint32_t full = (1u << nvars) - 1;
    for (uint32_t free = 1; free <= full; ++free) {
        std::vector<int> fixed_axes;
        bool ok = true;
        for (int i = 0; i < nvars; ++i) {
            if ((free >> i) & 1u) continue;
            if (maxexp[static_cast<size_t>(i)] == 0) {
                ok = false;
                break;
            }
            fixed_axes.push_back(i);
        }
        if (!ok) continue;
        std::fill(off.begin(), off.end(), 0);
        auto rec = [&](auto&& self, size_t pos) -> void {
            if (pos == fixed_axes.size()) {
                // inside the complement iff every generator is blocked by
                // some fixed axis with offset below its exponent
                for (const auto& g : ideal.gens()) {
                    bool blocked = false;
                    for (int i : fixed_axes) {
                        if (off[static_cast<size_t>(i)] < g.exp(i)) {
                            blocked = true;
                            break;
                        }
                    }
                    if (!blocked) return;
                }
                found.emplace_back(nvars, free, off);
                return;
            }
            int axis = fixed_axes[pos];
            for (int v = 0; v < maxexp[static_cast<size_t>(axis)]; ++v) {
                off[static_cast<size_t>(axis)] = v;
                self(self, pos + 1);
            }
            off[static_cast<size_t>(axis)] = 0;
        };
        rec(rec, 0);
    }
    return Arrangement(nvars, std::move(found));
}

// ---------------------------------------------------------------------------
// ideal_of_union

namespace {

// Iterates all points of the box [0, bound]^nvars as a flat index.
Monomial point_of_index(long long idx, int nvars, int side) {
    std::vector<int> e(static_cast<size_t>(nvars));
    for (int i = nvars - 1; i >= 0; --i) {
        e[static_cast<size_t>(i)] = static_cast<int>(idx % side);
        idx /= side;
    }
    return Monomial(std::move(e));
}

}  // namespace

// Downward closure is decided on the finite box [0, B]^{n+1} with
// B = 1 + (largest offset in the arrangement). That suffices: suppose
// q is in the union, q - e_i is not, and i is fixed (a free axis never
// gives a violation: decreasing a free coordinate stays inside the same
// orthant). Clamp every free coordinate of q's orthant to B. The clamped
// point q' stays in the orthant, and its predecessor q' - e_i still lies
// outside the union: any orthant containing q' - e_i must leave the
// clamped coordinates free, since they equal B while every fixed offset
// is at most B - 1, so it would contain q - e_i as well. Hence the
// clamped violation sits inside the box and the scan finds it.
MonomialIdeal ideal_of_union(const Arrangement& arr, Exec exec) {
    const int nvars = arr.nvars();
    int bound = 1;
    for (const auto& o : arr.orthants()) bound = std::max(bound, o.max_offset() + 1);
    const int side = bound + 1;  // coordinates 0..bound
    long long total = 1;
    for (int i = 0; i < nvars; ++i) total *= side;

    // Phase 1: find the lexicographically smallest missing divisor, if any.
    // The min-reduction keeps the witness deterministic under any schedule.
    long long violation = total;  // flat index of q - e_i; total = none
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : violation) if (exec == Exec::Parallel)
#endif
    for (long long idx = 0; idx < total; ++idx) {
        Monomial q = point_of_index(idx, nvars, side);
        if (!arr.contains(q)) continue;
        for (int i = 0; i < nvars; ++i) {
            if (q.exp(i) == 0) continue;
            std::vector<int> pred = q.exps();
            pred[static_cast<size_t>(i)] -= 1;
            Monomial m(std::move(pred));
            if (!arr.contains(m)) {
                long long pidx = 0;
                for (int j = 0; j < nvars; ++j) pidx = pidx * side + m.exp(j);
                violation = std::min(violation, pidx);
            }
        }
    }
    if (violation < total) {
        throw NotDownwardClosed(point_of_index(violation, nvars, side));
    }

    // Phase 2: minimal points outside the union are the generators. Every
    // such point has each coordinate at most (largest offset on that axis)
    // + 1, so the same box contains them all.
    std::vector<Monomial> gens;
#ifdef _OPENMP
#pragma omp parallel if (exec == Exec::Parallel)
#endif
    {
        std::vector<Monomial> local;
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
        for (long long idx = 0; idx < total; ++idx) {
            Monomial q = point_of_index(idx, nvars, side);
            if (arr.contains(q)) continue;
            bool minimal = true;
            for (int i = 0; i < nvars && minimal; ++i) {
                if (q.exp(i) == 0) continue;
                std::vector<int> pred = q.exps();
                pred[static_cast<size_t>(i)] -= 1;
                if (!arr.contains(Monomial(std::move(pred)))) minimal = false;
            }
            if (minimal) local.push_back(std::move(q));
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        gens.insert(gens.end(), local.begin(), local.end());
    }
    return MonomialIdeal(nvars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Hilbert series / polynomial

namespace {

constexpr int kGeneratorCap = 22;

// Serial reference: recursive include/exclude over generators with a
// running lcm. Coefficients fit comfortably in int64 (at most 2^22 terms).
void numerator_rec(const std::vector<Monomial>& gens, size_t idx, std::vector<int>& lcm,
                   int sign, std::vector<long long>& coeffs) {
    if (idx == gens.size()) {
        int deg = 0;
        for (int x : lcm) deg += x;
        coeffs[static_cast<size_t>(deg)] += sign;
        return;
    }
    numerator_rec(gens, idx + 1, lcm, sign, coeffs);
    std::vector<int> saved = lcm;
    for (int i = 0; i < gens[idx].nvars(); ++i) {
        lcm[static_cast<size_t>(i)] = std::max(lcm[static_cast<size_t>(i)], gens[idx].exp(i));
    }
    numerator_rec(gens, idx + 1, lcm, -sign, coeffs);
    lcm = std::move(saved);
}

std::vector<long long> numerator_coeffs_serial(const MonomialIdeal& ideal, int maxdeg) {
    std::vector<long long> coeffs(static_cast<size_t>(maxdeg) + 1, 0);
    std::vector<int> lcm(static_cast<size_t>(ideal.nvars()), 0);
    numerator_rec(ideal.gens(), 0, lcm, 1, coeffs);
    return coeffs;
}

std::vector<long long> numerator_coeffs_parallel(const MonomialIdeal& ideal, int maxdeg) {
    const auto& gens = ideal.gens();
    const int m = static_cast<int>(gens.size());
    const uint64_t count = 1ull << m;
    std::vector<long long> coeffs(static_cast<size_t>(maxdeg) + 1, 0);
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<long long> local(coeffs.size(), 0);
        std::vector<int> lcm(static_cast<size_t>(ideal.nvars()));
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
        for (long long mask = 0; mask < static_cast<long long>(count); ++mask) {
            std::fill(lcm.begin(), lcm.end(), 0);
            int bits = 0;
            for (int g = 0; g < m; ++g) {
                if ((mask >> g) & 1) {
                    ++bits;
                    for (int i = 0; i < ideal.nvars(); ++i) {
                        lcm[static_cast<size_t>(i)] =
                            std::max(lcm[static_cast<size_t>(i)], gens[static_cast<size_t>(g)].exp(i));
                    }
                }
            }
            int deg = 0;
            for (int x : lcm) deg += x;
            local[static_cast<size_t>(deg)] += (bits % 2 == 0) ? 1 : -1;
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += local[i];
    }
    return coeffs;
}

}  // namespace

RatPoly hilbert_series_numerator(const MonomialIdeal& ideal, Exec exec) {
    if (ideal.gens().size() > kGeneratorCap) {
        throw TooManyGenerators(std::to_string(ideal.gens().size()) + " > " +
                                std::to_string(kGeneratorCap));
    }
    int maxdeg = 0;
    {
        std::vector<int> top(static_cast<size_t>(ideal.nvars()), 0);
        for (const auto& g : ideal.gens()) {
            for (int i = 0; i < ideal.nvars(); ++i) {
                top[static_cast<size_t>(i)] = std::max(top[static_cast<size_t>(i)], g.exp(i));
            }
        }
        for (int x : top) maxdeg += x;
    }
    std::vector<long long> coeffs = (exec == Exec::Parallel)
                                        ? numerator_coeffs_parallel(ideal, maxdeg)
                                        : numerator_coeffs_serial(ideal, maxdeg);
    std::vector<BigRat> out;
    out.reserve(coeffs.size());
    for (long long c : coeffs) out.emplace_back(static_cast<long>(c));
    return RatPoly(std::move(out));
}

HilbertPoly hilbert_polynomial(const MonomialIdeal& ideal, Exec exec) {
    RatPoly numerator = hilbert_series_numerator(ideal, exec);
    const int n = ideal.nvars() - 1;
    HilbertPoly result;
    for (int e = 0; e <= numerator.degree(); ++e) {
        BigRat c = numerator.coeff(e);
        if (c == 0) continue;
        result.poly = result.poly + binomial_poly(n - e, static_cast<unsigned long>(n)).scaled(c);
    }
    result.threshold = std::max(numerator.degree(), 0);
    return result;
}

RatPoly arrangement_hilbert_polynomial(const Arrangement& arr) {
    RatPoly total;
    const auto& os = arr.orthants();
    // DFS over subsets with a running intersection; an empty intersection
    // kills the whole subtree of supersets.
    struct Frame {
        std::optional<Orthant> meet;
        size_t next;
        int size;
    };
    std::vector<Frame> stack;
    stack.push_back({std::nullopt, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.size > 0) {
            const Orthant& meet = *f.meet;
            if (meet.dim() >= 1) {
                int k = meet.dim();
                int s = meet.offset_sum();
                RatPoly term = binomial_poly(k - 1 - s, static_cast<unsigned long>(k - 1));
                total = (f.size % 2 == 1) ? total + term : total - term;
            }
        }
        for (size_t i = f.next; i < os.size(); ++i) {
            std::optional<Orthant> meet =
                f.size == 0 ? std::optional<Orthant>(os[i]) : Orthant::intersect(*f.meet, os[i]);
            if (!meet) continue;  // conflicting fixed coordinates, or a point
            stack.push_back({std::move(meet), i + 1, f.size + 1});
        }
    }
    return total;
}

}  // namespace hilbetti
