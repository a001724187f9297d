#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbetti/exactmath.hpp"
#include "hilbetti/exec.hpp"

namespace hilbetti {

/// A monomial in n+1 variables as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    int nvars() const { return static_cast<int>(e_.size()); }
    int exp(int axis) const { return e_[static_cast<size_t>(axis)]; }
    const std::vector<int>& exps() const { return e_; }
    int degree() const;

    bool divides(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    /// Copy with the exponent on one axis set to zero.
    Monomial zeroed(int axis) const;

    auto operator<=>(const Monomial& o) const = default;  // lex on exponents

    std::string str() const;  // "[2,1]"

private:
    std::vector<int> e_;
};

/// A monomial ideal held by its minimal generators: a divisibility
/// antichain in canonical (lex-sorted) order. The zero ideal has no
/// generators; the unit ideal is generated by the degree-0 monomial.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
    static MonomialIdeal unit(int nvars);

    /// Text format: generators as exponent tuples, e.g. "[2,1],[0,3]".
    /// The empty string is the zero ideal.
    static MonomialIdeal parse(int nvars, std::string_view text);
    std::string str() const;

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }
    bool operator<(const MonomialIdeal& o) const { return gens_ < o.gens_; }

private:
    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Saturation I : (x_0, ..., x_n)^inf, computed as the intersection over
/// all axes of the ideal whose generators have that axis zeroed.
MonomialIdeal saturate(const MonomialIdeal& ideal);

/// A k-orthant in the exponent lattice: k free axes, every other axis
/// fixed at a nonnegative offset. k >= 1 always (a single lattice point is
/// not an orthant); k = n+1 is the whole lattice.
class Orthant {
public:
    Orthant(int nvars, uint32_t free_mask, std::vector<int> offsets);

    /// Convenience: free axes as a list, offsets as (axis, value) pairs.
    static Orthant make(int nvars, const std::vector<int>& free_axes,
                        const std::vector<std::pair<int, int>>& offsets);

    /// Text format: "free={1,2};off={0:3}".
    static Orthant parse(int nvars, std::string_view text);
    std::string str() const;

    int nvars() const { return nvars_; }
    int dim() const;  // k = number of free axes
    bool is_free(int axis) const { return (free_ >> axis) & 1u; }
    uint32_t free_mask() const { return free_; }
    /// Offset of a fixed axis (0 on free axes by normalization).
    int offset(int axis) const { return off_[static_cast<size_t>(axis)]; }
    int offset_sum() const;
    int max_offset() const;

    bool contains(const Monomial& m) const;
    bool subset_of(const Orthant& o) const;
    /// Empty when fixed coordinates conflict.
    static std::optional<Orthant> intersect(const Orthant& a, const Orthant& b);

    bool operator==(const Orthant& o) const {
        return nvars_ == o.nvars_ && free_ == o.free_ && off_ == o.off_;
    }
    /// Canonical order: dim descending, then free axes lex, then offsets lex.
    bool operator<(const Orthant& o) const;

private:
    int nvars_ = 0;
    uint32_t free_ = 0;
    std::vector<int> off_;  // normalized to 0 on free axes
};

/// A finite set of orthants over a common lattice, held canonically:
/// sorted, deduplicated, and with orthants contained in another orthant
/// removed. Canonicalization is idempotent.
class Arrangement {
public:
    explicit Arrangement(int nvars) : nvars_(nvars) {}
    Arrangement(int nvars, std::vector<Orthant> orthants);

    int nvars() const { return nvars_; }
    const std::vector<Orthant>& orthants() const { return orthants_; }
    bool empty() const { return orthants_.empty(); }
    bool contains(const Monomial& m) const;

    bool operator==(const Arrangement& o) const {
        return nvars_ == o.nvars_ && orthants_ == o.orthants_;
    }

private:
    int nvars_ = 0;
    std::vector<Orthant> orthants_;
};

/// The canonical arrangement whose union is exactly the set of monomials
/// outside a saturated ideal (all maximal orthants of the complement).
/// Throws NotSaturated when saturate(I) != I.
Arrangement complement_arrangement(const MonomialIdeal& ideal);

struct NotDownwardClosed : std::runtime_error {
    explicit NotDownwardClosed(Monomial w)
        : std::runtime_error("union is not downward closed: missing divisor " + w.str()),
          witness(std::move(w)) {}
    Monomial witness;
};

/// If the union of the arrangement is downward closed, returns the
/// monomial ideal whose complement it is. Otherwise throws
/// NotDownwardClosed carrying a missing divisor point.
MonomialIdeal ideal_of_union(const Arrangement& arr, Exec exec = Exec::Parallel);

/// Numerator K(t) of the Hilbert series of R/I over (1-t)^{n+1}, by
/// inclusion-exclusion over generator subsets:
///   K(t) = sum_{S subset of gens} (-1)^{|S|} t^{deg lcm(S)}.
/// Throws TooManyGenerators above 22 generators (2^22 subsets).
RatPoly hilbert_series_numerator(const MonomialIdeal& ideal, Exec exec = Exec::Parallel);

struct HilbertPoly {
    RatPoly poly;
    /// h_I(d) equals poly(d) for every d >= threshold.
    int threshold = 0;
};

/// The Hilbert polynomial of R/I: sum_e K_e C(d + n - e, n).
HilbertPoly hilbert_polynomial(const MonomialIdeal& ideal, Exec exec = Exec::Parallel);

/// Asymptotic count of degree-d points in the union of an arrangement, by
/// inclusion-exclusion over orthant subsets. An intersection with k free
/// axes and offset sum s holds C(d - s + k - 1, k - 1) points of degree d;
/// 0-dimensional intersections are finite and contribute nothing.
RatPoly arrangement_hilbert_polynomial(const Arrangement& arr);

}  // namespace hilbetti
