#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hilbetti {

// All arithmetic in this project is exact. No floating point anywhere.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// Generalized binomial coefficient C(a, b) for integer a (possibly
/// negative) and b >= 0, defined by the falling factorial:
///   C(a, b) = a (a-1) ... (a-b+1) / b!
/// So C(a, 0) = 1 for every a, C(a, b) = 0 for 0 <= a < b, and
/// C(-1, 3) = (-1)(-2)(-3)/6 = -1.
BigInt binomial(const BigInt& a, unsigned long b);

BigInt factorial(unsigned long n);

/// Number of integer partitions of c, by Euler's pentagonal-number
/// recurrence with a memo table. Input capped at 10^4.
BigInt partition_count(unsigned long c);

/// Dense univariate polynomial with exact rational coefficients,
/// ascending degree, trailing zeros trimmed. The zero polynomial has an
/// empty coefficient list and degree() == -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs);

    static RatPoly constant(const BigRat& c);
    static RatPoly variable();  // the polynomial d

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of d^i; zero beyond the stored degree.
    BigRat coeff(int i) const;
    const BigRat& leading() const;  // pre: nonzero
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat eval(const BigInt& d) const;
    /// eval() for polynomials known to be integer-valued at d; throws
    /// std::logic_error if the value is not an integer.
    BigInt eval_int(const BigInt& d) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const BigRat& c) const;

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "d") const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

/// The degree-k polynomial C(d + shift, k) expanded in d:
///   (d + shift)(d + shift - 1) ... (d + shift - k + 1) / k!
RatPoly binomial_poly(long shift, unsigned long k);

/// Compares two polynomials by their eventual order: the sign of
/// a(d) - b(d) for d >> 0. Returns -1, 0, or +1.
int compare_eventually(const RatPoly& a, const RatPoly& b);

}  // namespace hilbetti
