#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilbetti/smoothness.hpp"

namespace hilbetti {

/// Which formula produced the value. F1a is the n = 1 case, F1b the n = 2
/// case; F3..F7 are the general-n formulas.
enum class DispatchCase { F1a, F1b, F3, F4, F5, F6, F7 };

const char* dispatch_name(DispatchCase c);

struct BettiSumResult {
    BigInt value;
    DispatchCase family_used;
    /// Values of other matching families' formulas, when several apply.
    std::vector<std::pair<Family, BigInt>> consistency_notes;
    std::vector<std::string> notes;
};

/// Sum of the Betti numbers of the Hilbert scheme for (n, lambda).
/// Dispatch order: F7 first, then the n = 1 and n = 2 formulas, then the
/// matched family among F3..F6 (ascending). Throws NotSmooth if no family
/// matches and UnsupportedFamily if only family 2 does.
BettiSumResult betti_sum(AmbientDim n, const Partition& lambda);

// The raw formulas, one per computed case.
BigInt betti_line(int r);                          // n = 1, lambda = (1^r)
BigInt betti_plane(int m, int rprime);             // n = 2, lambda = (2^m, 1^r')
BigInt betti_f3(int n, int r, int mid);            // lambda = (n^{r-2}, mid, 1)
BigInt betti_f4(int n, int r, int s, int mid);     // lambda = (n^{r-s-3}, mid^{s+2}, 1)
BigInt betti_f5(int n, int r, int s);              // lambda = (n^{r-s-5}, 2^{s+4}, 1)
BigInt betti_f6(int n, int k);                     // lambda = (n^k, 1^3)

}  // namespace hilbetti
