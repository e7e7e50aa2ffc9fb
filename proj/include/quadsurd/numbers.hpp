#pragma once

#include "quadsurd/real.hpp"

#include <vector>

namespace quadsurd::numbers {

/// n = s^2 * d with d squarefree. s is A000188(n), d is A007913(n) (the
/// squarefree core), s*d is A019554(n).
struct SquarefreeDecomposition {
    Int n;
    Int s;
    Int d;
};

/// i-th principal continued-fraction convergent numerator/denominator to
/// sqrt(radicand), 1-indexed with the integer part folded into convergent 1.
struct ConvergentPair {
    unsigned index;
    Int numerator;
    Int denominator;
    Int radicand;
};

/// Kekule numbers c_n: c_0 = 0, c_1 = 4, c_n = 10 c_{n-1} - c_{n-2}.
Int kekule_c(unsigned n);

/// Companion sequence d_n: d_0 = 1, d_1 = 5, d_n = 10 d_{n-1} - d_{n-2}.
Int companion_d(unsigned n);

/// y_0 = 0, y_1 = 4, y_n = (4k+2) y_{n-1} - y_{n-2}. Exact for rational k.
Rat y_seq(unsigned n, const Rat& k);

/// z_0 = 1, z_1 = 2k+1, z_n = (4k+2) z_{n-1} - z_{n-2}.
Rat z_seq(unsigned n, const Rat& k);

/// Squarefree decomposition by trial division (desk-scale inputs).
/// Throws std::domain_error for n < 1.
SquarefreeDecomposition squarefree_decompose(const Int& n);

inline Int a000188(const Int& n) { return squarefree_decompose(n).s; }
inline Int a007913(const Int& n) { return squarefree_decompose(n).d; }
inline Int a019554(const Int& n) {
    auto q = squarefree_decompose(n);
    return q.s * q.d;
}

/// Principal convergents of sqrt(radicand); radicand >= 2 and not a perfect
/// square (throws std::domain_error otherwise), i >= 1.
ConvergentPair convergents_sqrt(const Int& radicand, unsigned i);

/// Pell numbers: denominator of the i-th convergent to sqrt(2).
Int pell(unsigned i);

/// Squarefree core of m(m+1); reproduces the paper's listed sequence
/// 2, 6, 3, 5, 30, 42, 14, ...
Int a083481(unsigned m);

/// n if n odd, n/2 if n even.
Int a026741(const Int& n);

bool is_perfect_square(const Int& n);

/// Continued-fraction partial quotients of sqrt(radicand): integer part
/// followed by `count` periodic terms.
std::vector<Int> sqrt_cf_terms(const Int& radicand, unsigned count);

}  // namespace quadsurd::numbers
