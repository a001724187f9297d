#include "hilbetti/smoothness.hpp"

#include <algorithm>

#include "hilbetti/errors.hpp"

namespace hilbetti {

const char* family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
        case Family::F5: return "F5";
        case Family::F6: return "F6";
        case Family::F7: return "F7";
    }
    return "?";
}

bool SmoothnessVerdict::has(Family f) const { return find(f) != nullptr; }

const FamilyMatch* SmoothnessVerdict::find(Family f) const {
    for (const auto& m : families) {
        if (m.family == f) return &m;
    }
    return nullptr;
}

namespace {

// Builds (base^a, mid^b, 1^c) for pattern comparison.
std::vector<int> shape(int base, int a, int mid, int b, int ones) {
    std::vector<int> v;
    v.insert(v.end(), static_cast<size_t>(a), base);
    v.insert(v.end(), static_cast<size_t>(b), mid);
    v.insert(v.end(), static_cast<size_t>(ones), 1);
    return v;
}

}  // namespace

SmoothnessVerdict classify(AmbientDim dim, const Partition& lambda) {
    const int n = dim.n;
    const int r = lambda.r();
    const auto& parts = lambda.parts();

    if (!lambda.empty()) {
        if (parts[0] > n + 1 || (parts[0] == n + 1 && r > 1)) {
            throw InadmissiblePartition("lambda = (" + lambda.str() + ") over P^" +
                                        std::to_string(n));
        }
    }

    SmoothnessVerdict v;

    // 1: n <= 2.
    if (n <= 2) {
        FamilyMatch m{Family::F1};
        m.r = r;
        v.families.push_back(m);
    }
    // 2: lambda_r >= 2.
    if (r >= 1 && parts.back() >= 2) {
        FamilyMatch m{Family::F2};
        m.r = r;
        v.families.push_back(m);
    }
    // 3: lambda = (1), or (n^{r-2}, lambda_{r-1}, 1) with n >= lambda_{r-1} >= 1.
    if (r == 1 && parts[0] == 1) {
        FamilyMatch m{Family::F3};
        m.r = 1;
        v.families.push_back(m);
    } else if (r >= 2) {
        int mid = parts[static_cast<size_t>(r) - 2];
        if (mid >= 1 && mid <= n && parts == shape(n, r - 2, mid, 1, 1)) {
            FamilyMatch m{Family::F3};
            m.r = r;
            m.mid = mid;
            v.families.push_back(m);
        }
    }
    // 4: (n^{r-s-3}, lambda_{r-s-2}^{s+2}, 1) with r-3 >= s >= 0, n-1 >= mid >= 3.
    for (int s = 0; s <= r - 3; ++s) {
        int a = r - s - 3;
        int mid = parts[static_cast<size_t>(a)];
        if (mid >= 3 && mid <= n - 1 && parts == shape(n, a, mid, s + 2, 1)) {
            FamilyMatch m{Family::F4};
            m.r = r;
            m.s = s;
            m.mid = mid;
            v.families.push_back(m);
            break;  // mid < n makes the split unique
        }
    }
    // 5: (n^{r-s-5}, 2^{s+4}, 1) with r-5 >= s >= 0.
    for (int s = 0; s <= r - 5; ++s) {
        int a = r - s - 5;
        if (parts == shape(n, a, 2, s + 4, 1)) {
            FamilyMatch m{Family::F5};
            m.r = r;
            m.s = s;
            v.families.push_back(m);
            break;  // report the smallest s when runs merge (n = 2)
        }
    }
    // 6: (n^{r-3}, 1^3) with r >= 3.
    if (r >= 3 && parts == shape(n, r - 3, 1, 0, 3)) {
        FamilyMatch m{Family::F6};
        m.r = r;
        m.k = r - 3;
        v.families.push_back(m);
    }
    // 7: r = 0, or lambda = (n+1) read as the Hilbert polynomial of all of P^n.
    if (r == 0 || (r == 1 && parts[0] == n + 1)) {
        FamilyMatch m{Family::F7};
        m.r = r;
        m.full_space = (r == 1);
        v.families.push_back(m);
    }

    std::sort(v.families.begin(), v.families.end(),
              [](const FamilyMatch& a, const FamilyMatch& b) { return a.family < b.family; });
    v.smooth = !v.families.empty();
    return v;
}

}  // namespace hilbetti
