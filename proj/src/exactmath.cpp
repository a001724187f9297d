#include "hilbetti/exactmath.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hilbetti {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt& a, unsigned long b) {
    if (b == 0) return 1;
    BigInt num = 1;
    for (unsigned long i = 0; i < b; ++i) {
        num *= a - static_cast<long>(i);
    }
    // A product of b consecutive integers is divisible by b!.
    BigInt den = factorial(b);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt partition_count(unsigned long c) {
    constexpr unsigned long kCap = 10000;
    if (c > kCap) {
        throw std::domain_error("partition_count: input exceeds cap of 10^4");
    }
    static std::mutex mu;
    static std::vector<BigInt> table{BigInt(1)};  // p(0) = 1
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= c) {
        unsigned long n = table.size();
        BigInt acc = 0;
        // p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
        for (unsigned long k = 1;; ++k) {
            unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * table[n - g1];
            unsigned long g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) acc += sign * table[n - g2];
        }
        table.push_back(acc);
    }
    return table[c];
}

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const BigRat& c) {
    RatPoly p;
    p.coeffs_ = {c};
    p.trim();
    return p;
}

RatPoly RatPoly::variable() {
    RatPoly p;
    p.coeffs_ = {BigRat(0), BigRat(1)};
    return p;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRat(0);
    return coeffs_[i];
}

const BigRat& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

BigRat RatPoly::eval(const BigInt& d) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * BigRat(d) + *it;
    }
    return acc;
}

BigInt RatPoly::eval_int(const BigInt& d) const {
    BigRat v = eval(d);
    if (v.get_den() != 1) {
        throw std::logic_error("eval_int: value " + v.get_str() +
                               " is not an integer");
    }
    return v.get_num();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<BigRat> out(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
    std::vector<BigRat> out(coeffs_);
    for (auto& c : out) c = -c;
    RatPoly p;
    p.coeffs_ = std::move(out);
    return p;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<BigRat> out(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const BigRat& c) const {
    if (c == 0) return RatPoly();
    std::vector<BigRat> out(coeffs_);
    for (auto& x : out) x *= c;
    RatPoly p;
    p.coeffs_ = std::move(out);
    return p;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigRat c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigRat a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatPoly binomial_poly(long shift, unsigned long k) {
    RatPoly p = RatPoly::constant(BigRat(1));
    for (unsigned long i = 0; i < k; ++i) {
        // multiply by (d + shift - i)
        RatPoly lin(std::vector<BigRat>{BigRat(shift - static_cast<long>(i)), BigRat(1)});
        p = p * lin;
    }
    return p.scaled(BigRat(1, factorial(k)));
}

int compare_eventually(const RatPoly& a, const RatPoly& b) {
    int top = std::max(a.degree(), b.degree());
    for (int i = top; i >= 0; --i) {
        BigRat da = a.coeff(i), db = b.coeff(i);
        if (da != db) return da < db ? -1 : 1;
    }
    return 0;
}

}  // namespace hilbetti
