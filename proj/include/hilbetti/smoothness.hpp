#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbetti/hilbert.hpp"

namespace hilbetti {

/// The seven families of (n, lambda) for which the Hilbert scheme is
/// smooth, in the Skjelnes-Smith numbering.
enum class Family { F1, F2, F3, F4, F5, F6, F7 };

const char* family_name(Family f);

/// Parameters instantiating one family pattern. Substituting them back
/// into the pattern must reproduce lambda exactly; which fields are
/// meaningful depends on the family:
///   F3: r, mid = lambda_{r-1}       (mid = -1 for the lambda = (1) branch)
///   F4: r, s, mid = lambda_{r-s-2}
///   F5: r, s
///   F6: r, k = r - 3
///   F7: full_space = true when matched via lambda = (n+1) rather than r = 0
struct FamilyMatch {
    Family family;
    int r = 0;
    int s = -1;
    int mid = -1;
    int k = -1;
    bool full_space = false;
};

struct SmoothnessVerdict {
    std::vector<FamilyMatch> families;  // ascending family order
    bool smooth = false;

    bool has(Family f) const;
    const FamilyMatch* find(Family f) const;
};

/// Matches (n, lambda) against all seven family patterns and reports every
/// family that fits. A single part lambda = (n+1) is accepted (the whole
/// of P^n, family 7); anything else with lambda_1 > n is inadmissible.
SmoothnessVerdict classify(AmbientDim n, const Partition& lambda);

}  // namespace hilbetti
