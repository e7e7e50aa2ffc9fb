#include "doctest.h"

#include "quadsurd/numbers.hpp"

#include <vector>

using namespace quadsurd;
using namespace quadsurd::numbers;

TEST_CASE("kekule recurrence initial values and growth") {
    CHECK(kekule_c(0) == 0);
    CHECK(kekule_c(1) == 4);
    CHECK(kekule_c(2) == 40);
    CHECK(kekule_c(3) == 396);
    CHECK(kekule_c(4) == 3920);
    CHECK(kekule_c(5) == 38804);
}

TEST_CASE("companion sequence") {
    CHECK(companion_d(0) == 1);
    CHECK(companion_d(1) == 5);
    CHECK(companion_d(2) == 49);
    CHECK(companion_d(3) == 485);
}

TEST_CASE("y and z sequences, rational parameter") {
    CHECK(y_seq(0, Rat(7, 3)) == 0);
    CHECK(y_seq(2, Rat(1)) == 24);
    CHECK(y_seq(3, Rat(2)) == 396);
    CHECK(z_seq(1, Rat(3)) == 7);
    CHECK(z_seq(2, Rat(2)) == 49);
    CHECK(z_seq(2, Rat(1)) == 17);
    // k = 1/2: coefficient 4k+2 = 4, z_1 = 2.
    CHECK(z_seq(2, Rat(1, 2)) == 7);
    CHECK(y_seq(2, Rat(1, 2)) == 16);
}

TEST_CASE("kekule and companion are the k=2 specializations") {
    for (unsigned n = 0; n <= 200; ++n) {
        CHECK(Rat(kekule_c(n)) == y_seq(n, Rat(2)));
        CHECK(Rat(companion_d(n)) == z_seq(n, Rat(2)));
    }
}

TEST_CASE("Pell-type identity z^2 - k(k+1)(y/2)^2 = 1") {
    for (unsigned k = 1; k <= 12; ++k) {
        Rat kk(static_cast<long>(k));
        for (unsigned n = 0; n <= 60; ++n) {
            Rat y = y_seq(n, kk), z = z_seq(n, kk);
            Rat lhs = z * z - kk * (kk + 1) * (y / 2) * (y / 2);
            CHECK(lhs == 1);
        }
    }
}

TEST_CASE("squarefree decomposition examples") {
    auto q = squarefree_decompose(12);
    CHECK(q.s == 2);
    CHECK(q.d == 3);
    q = squarefree_decompose(8);
    CHECK(q.s == 2);
    CHECK(q.d == 2);
    CHECK(q.s * q.d == 4);
    q = squarefree_decompose(16);
    CHECK(q.s == 4);
    CHECK(q.d == 1);
    CHECK_THROWS_AS(squarefree_decompose(0), std::domain_error);
    CHECK_THROWS_AS(squarefree_decompose(-5), std::domain_error);
}

static bool squarefree_by_trial(const Int& d) {
    for (unsigned long p = 2; Int(p) * p <= d; ++p)
        if (mpz_divisible_ui_p(d.get_mpz_t(), p) &&
            mpz_divisible_ui_p(d.get_mpz_t(), p * p))
            return false;
    return true;
}

TEST_CASE("squarefree decomposition invariants up to 1e5") {
    for (long n = 1; n <= 100000; ++n) {
        auto q = squarefree_decompose(n);
        REQUIRE(q.s * q.s * q.d == n);
        // A000188(n) * A019554(n) = n and A007913(n) * A000188(n)^2 = n.
        REQUIRE(q.s * (q.s * q.d) == n);
        REQUIRE(q.d * q.s * q.s == n);
        if (n <= 2000) REQUIRE(squarefree_by_trial(q.d));
    }
}

TEST_CASE("convergents to sqrt(2)") {
    auto c = convergents_sqrt(2, 5);
    CHECK(c.numerator == 41);
    CHECK(c.denominator == 29);
    c = convergents_sqrt(2, 1);
    CHECK(c.numerator == 1);
    CHECK(c.denominator == 1);
    // p^2 - 2 q^2 alternates between -1 and +1.
    int expect = -1;
    for (unsigned i = 1; i <= 50; ++i) {
        c = convergents_sqrt(2, i);
        CHECK(c.numerator * c.numerator - 2 * c.denominator * c.denominator == expect);
        expect = -expect;
    }
    CHECK_THROWS_AS(convergents_sqrt(9, 1), std::domain_error);
}

// Independent oracle: principal convergents are exactly the best
// approximations of the second kind, found by scanning denominators and
// recording successive minima of |q*sqrt(r) - p|.
static std::vector<std::pair<Int, Int>> best_approximations(unsigned radicand, long q_max) {
    mpfr_prec_t prec = 350;
    Real root = sqrt(Real::of(static_cast<long>(radicand), prec));
    std::vector<std::pair<Int, Int>> out;
    Real best = Real::of(10L, prec);
    for (long q = 1; q <= q_max; ++q) {
        Real scaled = root * q;
        Int p = scaled.round_to_int();
        Real err = abs(scaled - Real::of(p, prec));
        if (err < best) {
            best = err;
            out.emplace_back(p, Int(q));
        }
    }
    return out;
}

TEST_CASE("convergents to sqrt(3) match the best-approximation oracle") {
    // The scan yields the best approximations of the second kind; for
    // sqrt(3) the leading convergent 1/1 is not one of them (round(sqrt 3)
    // is 2), so the oracle list starts at convergent 2.
    auto oracle = best_approximations(3, 500);
    REQUIRE(oracle.size() >= 8);
    for (unsigned i = 2; i <= 9; ++i) {
        auto c = convergents_sqrt(3, i);
        CHECK(c.numerator == oracle[i - 2].first);
        CHECK(c.denominator == oracle[i - 2].second);
    }
    CHECK(convergents_sqrt(3, 5).numerator == 19);
    CHECK(convergents_sqrt(3, 5).denominator == 11);
}

TEST_CASE("pell numbers") {
    CHECK(pell(1) == 1);
    CHECK(pell(5) == 29);
    CHECK(pell(6) == 70);
    CHECK(2 * pell(6) == 140);
    CHECK(pell(8) == 408);
}

TEST_CASE("a083481 squarefree core of m(m+1)") {
    const long expected[] = {2, 6, 3, 5, 30, 42, 14};
    for (unsigned m = 1; m <= 7; ++m) CHECK(a083481(m) == expected[m - 1]);
    for (unsigned m = 1; m <= 10000; ++m) {
        Int mm(static_cast<long>(m));
        CHECK(a083481(m) == squarefree_decompose(mm * (mm + 1)).d);
    }
}

TEST_CASE("a026741") {
    CHECK(a026741(5) == 5);
    CHECK(a026741(8) == 4);
    CHECK(a026741(14) == 7);
}
