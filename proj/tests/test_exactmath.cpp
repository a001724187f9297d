#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbetti/exactmath.hpp"

using namespace hilbetti;

namespace {

// Independent oracle: count partitions of c by backtracking over parts.
long partitions_by_backtracking(int c, int max_part) {
    if (c == 0) return 1;
    long total = 0;
    for (int part = std::min(c, max_part); part >= 1; --part) {
        total += partitions_by_backtracking(c - part, part);
    }
    return total;
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> num_dist(-6, 6);
    std::uniform_int_distribution<int> den_dist(1, 4);
    int deg = deg_dist(rng);
    std::vector<BigRat> coeffs;
    for (int i = 0; i <= deg; ++i) {
        BigRat c(num_dist(rng), den_dist(rng));
        c.canonicalize();
        coeffs.push_back(c);
    }
    return RatPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("binomial small values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-7, 0) == 1);
    CHECK(binomial(123456789, 0) == 1);
    CHECK(binomial(-1, 3) == -1);  // (-1)(-2)(-3)/6
    CHECK(binomial(2, 5) == 0);    // 0 <= a < b
    CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("binomial Pascal recurrence up to 40") {
    for (long a = 1; a <= 40; ++a) {
        for (unsigned long b = 1; b <= static_cast<unsigned long>(a); ++b) {
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}

TEST_CASE("binomial_poly expansions") {
    CHECK(binomial_poly(2, 2) ==
          RatPoly({BigRat(1), BigRat(3, 2), BigRat(1, 2)}));  // (d+2)(d+1)/2
    CHECK(binomial_poly(0, 0) == RatPoly::constant(1));
    CHECK(binomial_poly(1, 1) == RatPoly({BigRat(1), BigRat(1)}));  // d+1
}

TEST_CASE("binomial_poly agrees with numeric binomial") {
    for (long shift = -10; shift <= 10; ++shift) {
        for (unsigned long k = 0; k <= 8; ++k) {
            RatPoly p = binomial_poly(shift, k);
            for (long d = 0; d <= 20; ++d) {
                CHECK(p.eval_int(d) == binomial(d + shift, k));
            }
        }
    }
}

TEST_CASE("partition_count seeds and backtracking oracle") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);    // backtracking: 7
    CHECK(partition_count(10) == 42);  // backtracking: 42
    for (int c = 0; c <= 30; ++c) {
        CHECK(partition_count(static_cast<unsigned long>(c)) ==
              partitions_by_backtracking(c, c == 0 ? 1 : c));
    }
}

TEST_CASE("partition_count input cap") {
    CHECK_THROWS_AS(partition_count(10001), std::domain_error);
}

TEST_CASE("RatPoly basics") {
    RatPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(RatPoly::constant(0).is_zero());

    RatPoly p({BigRat(1), BigRat(5, 2), BigRat(1, 2)});
    CHECK(p.degree() == 2);
    CHECK(p.eval_int(2) == 8);  // 1 + 5 + 2
    CHECK(p.str() == "1/2*d^2 + 5/2*d + 1");
    CHECK((p - p).is_zero());
}

TEST_CASE("RatPoly ring laws on random inputs") {
    std::mt19937 rng(20240229);
    for (int trial = 0; trial < 120; ++trial) {
        RatPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("compare_eventually orders by top coefficients") {
    RatPoly big({BigRat(-100), BigRat(1)});  // d - 100
    RatPoly small = RatPoly::constant(1000);
    CHECK(compare_eventually(big, small) > 0);
    CHECK(compare_eventually(small, big) < 0);
    CHECK(compare_eventually(big, big) == 0);
}
