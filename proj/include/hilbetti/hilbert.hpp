#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbetti/exactmath.hpp"

namespace hilbetti {

/// A Macaulay lambda-sequence: weakly decreasing positive integers. The
/// empty partition (r = 0) encodes the zero Hilbert polynomial, i.e. the
/// empty subscheme.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates shape

    /// Text format: comma-separated parts with exponent shorthand, e.g.
    /// "2^3,1^2" for (2,2,2,1,1). Whitespace ignored, empty string is ().
    static Partition parse(std::string_view text);
    std::string str() const;

    int r() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based access matching the usual lambda_i notation.
    int part(int i) const { return parts_.at(static_cast<size_t>(i) - 1); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
};

/// Ambient projective space P^n, so n+1 polynomial variables.
struct AmbientDim {
    int n;
    explicit AmbientDim(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("AmbientDim: n must be >= 1");
    }
};

/// p_lambda(d) = sum_i C(d + lambda_i - i, lambda_i - 1).
RatPoly encode(const Partition& lambda);

/// Inverse of encode by greedy peeling: the top part is deg(p)+1 and its
/// multiplicity is forced by the leading coefficient; peel and recurse,
/// then verify by re-encoding. Throws NotAHilbertPolynomial on failure.
/// decode of the zero polynomial is the empty partition.
Partition decode(const RatPoly& p);

/// Nonemptiness over P^n: lambda_1 <= n (vacuous for the empty partition).
bool admissible_for(const Partition& lambda, AmbientDim n);

/// Writes a linear-or-constant integer polynomial as p(d) = M d - r and
/// returns the n = 2 partition data: lambda = (2^A, 1^B) with A = M and
/// B = (M^2 - 3M)/2 - r. Throws NotPlaneHilbert if the constraints fail.
struct PlaneForm {
    BigInt M;
    BigInt r;
    BigInt A;
    BigInt B;
};
PlaneForm plane_form(const RatPoly& p);

}  // namespace hilbetti
