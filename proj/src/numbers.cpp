#include "quadsurd/numbers.hpp"

#include <stdexcept>

namespace quadsurd::numbers {

namespace {

Int second_order(unsigned n, Int a0, Int a1, const Int& coeff) {
    if (n == 0) return a0;
    Int prev = std::move(a0), cur = std::move(a1);
    for (unsigned i = 1; i < n; ++i) {
        Int next = coeff * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rat second_order(unsigned n, Rat a0, Rat a1, const Rat& coeff) {
    if (n == 0) return a0;
    Rat prev = std::move(a0), cur = std::move(a1);
    for (unsigned i = 1; i < n; ++i) {
        Rat next = coeff * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Int kekule_c(unsigned n) { return second_order(n, Int(0), Int(4), Int(10)); }

Int companion_d(unsigned n) { return second_order(n, Int(1), Int(5), Int(10)); }

Rat y_seq(unsigned n, const Rat& k) {
    return second_order(n, Rat(0), Rat(4), Rat(4) * k + 2);
}

Rat z_seq(unsigned n, const Rat& k) {
    return second_order(n, Rat(1), Rat(2) * k + 1, Rat(4) * k + 2);
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SquarefreeDecomposition squarefree_decompose(const Int& n) {
    if (n < 1) throw std::domain_error("squarefree_decompose: n must be positive");
    Int rest = n, s = 1, d = 1;

    // Strip each prime p <= cbrt(rest); afterwards rest is 1, p, p^2 or p*q.
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    };

    strip(2);
    strip(3);
    unsigned long p = 5;
    unsigned long inc = 2;  // 5,7,11,13,... wheel over 2 and 3
    while (Int(p) * p * p <= rest) {
        strip(p);
        p += inc;
        inc = 6 - inc;
    }

    if (rest != 1) {
        if (is_perfect_square(rest)) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else {
            // rest is prime or a product of two distinct primes: squarefree.
            d *= rest;
        }
    }
    return SquarefreeDecomposition{n, s, d};
}

std::vector<Int> sqrt_cf_terms(const Int& radicand, unsigned count) {
    if (radicand < 2 || is_perfect_square(radicand))
        throw std::domain_error("sqrt_cf_terms: radicand must be >= 2 and not a perfect square");
    Int a0;
    mpz_sqrt(a0.get_mpz_t(), radicand.get_mpz_t());
    std::vector<Int> terms{a0};
    Int m = 0, den = 1, a = a0;
    for (unsigned i = 0; i < count; ++i) {
        m = den * a - m;
        den = (radicand - m * m) / den;
        a = (a0 + m) / den;
        terms.push_back(a);
    }
    return terms;
}

ConvergentPair convergents_sqrt(const Int& radicand, unsigned i) {
    if (i < 1) throw std::domain_error("convergents_sqrt: index is 1-based");
    auto cf = sqrt_cf_terms(radicand, i - 1);
    Int h_prev = 1, h = cf[0];
    Int q_prev = 0, q = 1;
    for (unsigned j = 1; j < i; ++j) {
        Int h_next = cf[j] * h + h_prev;
        Int q_next = cf[j] * q + q_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        q_prev = std::move(q);
        q = std::move(q_next);
    }
    return ConvergentPair{i, h, q, radicand};
}

Int pell(unsigned i) { return convergents_sqrt(2, i).denominator; }

Int a083481(unsigned m) {
    if (m < 1) throw std::domain_error("a083481: m is 1-based");
    Int mm(static_cast<unsigned long>(m));
    return squarefree_decompose(mm * (mm + 1)).d;
}

Int a026741(const Int& n) { return mpz_even_p(n.get_mpz_t()) ? Int(n / 2) : n; }

}  // namespace quadsurd::numbers
