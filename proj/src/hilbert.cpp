#include "hilbetti/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hilbetti/errors.hpp"

namespace hilbetti {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    std::vector<int> parts;
    if (s.empty()) return Partition();
    size_t pos = 0;
    auto read_int = [&]() -> int {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || pos - start > 9) {
            throw std::invalid_argument("Partition::parse: bad integer in \"" +
                                        std::string(text) + "\"");
        }
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        int value = read_int();
        int count = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            count = read_int();
            if (count < 1) throw std::invalid_argument("Partition::parse: exponent must be >= 1");
        }
        parts.insert(parts.end(), static_cast<size_t>(count), value);
        if (pos == s.size()) break;
        if (s[pos] != ',') {
            throw std::invalid_argument("Partition::parse: expected ',' in \"" +
                                        std::string(text) + "\"");
        }
        ++pos;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) os << ",";
        os << parts_[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

RatPoly encode(const Partition& lambda) {
    RatPoly p;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        long shift = parts[i] - static_cast<long>(i) - 1;
        p = p + binomial_poly(shift, static_cast<unsigned long>(parts[i] - 1));
    }
    return p;
}

Partition decode(const RatPoly& p) {
    if (p.is_zero()) return Partition();
    std::vector<int> parts;
    RatPoly rem = p;
    int placed = 0;
    while (!rem.is_zero()) {
        int deg = rem.degree();
        int size = deg + 1;  // candidate part size
        // k parts of this size contribute k / deg! to the leading coefficient
        BigRat mult = rem.leading() * BigRat(factorial(static_cast<unsigned long>(deg)));
        if (mult.get_den() != 1 || mult <= 0) {
            throw NotAHilbertPolynomial("top-part multiplicity " + mult.get_str() +
                                        " at degree " + std::to_string(deg));
        }
        if (!mult.get_num().fits_sint_p()) {
            throw NotAHilbertPolynomial("top-part multiplicity too large");
        }
        int k = static_cast<int>(mult.get_num().get_si());
        for (int j = 1; j <= k; ++j) {
            // the new part sits at 1-based position placed + j
            long shift = size - static_cast<long>(placed + j);
            rem = rem - binomial_poly(shift, static_cast<unsigned long>(size - 1));
            parts.push_back(size);
        }
        placed += k;
        if (rem.degree() >= deg) {
            throw NotAHilbertPolynomial("residue degree did not drop at degree " +
                                        std::to_string(deg));
        }
    }
    Partition lambda(std::move(parts));
    if (encode(lambda) != p) {
        throw NotAHilbertPolynomial("re-encode mismatch for " + lambda.str());
    }
    return lambda;
}

bool admissible_for(const Partition& lambda, AmbientDim dim) {
    return lambda.empty() || lambda.part(1) <= dim.n;
}

PlaneForm plane_form(const RatPoly& p) {
    if (p.degree() > 1) {
        throw NotPlaneHilbert("degree " + std::to_string(p.degree()) + " > 1");
    }
    BigRat slope = p.coeff(1);
    BigRat c0 = p.coeff(0);
    if (slope.get_den() != 1 || c0.get_den() != 1) {
        throw NotPlaneHilbert("non-integer coefficients in " + p.str());
    }
    PlaneForm f;
    f.M = slope.get_num();
    f.r = -c0.get_num();
    if (f.M < 0) throw NotPlaneHilbert("negative slope");
    f.A = f.M;
    f.B = (f.M * f.M - 3 * f.M) / 2 - f.r;  // M(M-3) is always even
    if (f.B < 0) {
        throw NotPlaneHilbert("r = " + f.r.get_str() + " exceeds (M^2-3M)/2");
    }
    return f;
}

}  // namespace hilbetti
