#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace quadsurd {

// Exact carriers. All recurrence values, recognized coefficients and
// sequence terms live in these; nothing in the numbers module ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

/// Working precision for real-valued computation, in decimal digits.
/// Arithmetic runs at bits() = digits*log2(10) plus guard bits so that
/// accumulated rounding stays far below the requested accuracy.
struct PrecisionContext {
    unsigned digits = 60;
    unsigned max_levels = 12;  // tanh-sinh refinement cap

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned d, unsigned levels = 12)
        : digits(d), max_levels(levels) {
        if (d < 20) throw std::domain_error("PrecisionContext: digits must be >= 20");
    }
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873626) + 96;
    }
    PrecisionContext escalated() const { return PrecisionContext(digits * 2, max_levels); }
};

/// Value-semantic wrapper over mpfr_t. Every Real carries its own precision;
/// binary operations round to the wider operand. Rounding mode is always
/// round-to-nearest and no global MPFR state is touched, so Reals are safe
/// to use from concurrent threads.
class Real {
public:
    Real() { mpfr_init2(v_, 64); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Int& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of_decimal(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse decimal '" + s + "'");
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 10^e, exactly representable for |e| within mpfr's exponent range.
    static Real pow10(long e, mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }
    static Real nan(mpfr_prec_t prec = 64) { return Real(prec); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sgn() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    /// Exponent e with |x| in [2^(e-1), 2^e); 0 for zero.
    long exp2() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// Nearest integer as an exact Int.
    Int round_to_int() const {
        Real t(prec());
        mpfr_round(t.v_, v_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    /// Scientific-notation decimal string with `digits` significant digits.
    std::string str(unsigned digits = 20) const;

private:
    mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t wider(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace detail

#define QUADSURD_BINOP(op, fn)                                      \
    inline Real operator op(const Real& a, const Real& b) {         \
        Real r(detail::wider(a, b));                                \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                   \
        return r;                                                   \
    }                                                               \
    inline Real operator op(const Real& a, long b) {                \
        Real r(a.prec());                                           \
        fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                    \
        return r;                                                   \
    }

QUADSURD_BINOP(+, mpfr_add)
QUADSURD_BINOP(-, mpfr_sub)
QUADSURD_BINOP(*, mpfr_mul)
QUADSURD_BINOP(/, mpfr_div)
#undef QUADSURD_BINOP

inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

#define QUADSURD_UNFN(name, fn)              \
    inline Real name(const Real& a) {        \
        Real r(a.prec());                    \
        fn(r.raw(), a.raw(), MPFR_RNDN);     \
        return r;                            \
    }

QUADSURD_UNFN(sqrt, mpfr_sqrt)
QUADSURD_UNFN(exp, mpfr_exp)
QUADSURD_UNFN(log, mpfr_log)
QUADSURD_UNFN(sin, mpfr_sin)
QUADSURD_UNFN(cos, mpfr_cos)
QUADSURD_UNFN(sinh, mpfr_sinh)
QUADSURD_UNFN(cosh, mpfr_cosh)
QUADSURD_UNFN(tanh, mpfr_tanh)
QUADSURD_UNFN(asinh, mpfr_asinh)
QUADSURD_UNFN(acosh, mpfr_acosh)
QUADSURD_UNFN(abs, mpfr_abs)
#undef QUADSURD_UNFN

inline Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

inline Real pow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(detail::wider(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

/// One unit in the last place of x (absolute), as a coarse rounding bound.
inline Real ulp(const Real& x) {
    if (x.is_zero()) return Real::pow10(-400);
    Real r(64);
    mpfr_set_ui_2exp(r.raw(), 1, x.exp2() - x.prec() + 1, MPFR_RNDN);
    return r;
}

/// Quadrature / analysis result: a value plus a tracked absolute error bound
/// and the decimal precision it was computed at.
struct BigReal {
    Real value;
    Real error_bound;  // absolute
    unsigned digits = 0;
};

/// BigReal with a one-ulp bound, for values exact up to final rounding.
inline BigReal exact_bigreal(Real v, unsigned digits) {
    Real e = ulp(v);
    return BigReal{std::move(v), std::move(e), digits};
}

inline BigReal add(const BigReal& a, const BigReal& b) {
    Real v = a.value + b.value;
    Real e = a.error_bound + b.error_bound + ulp(v);
    return BigReal{std::move(v), std::move(e), a.digits < b.digits ? a.digits : b.digits};
}
inline BigReal sub(const BigReal& a, const BigReal& b) {
    Real v = a.value - b.value;
    Real e = a.error_bound + b.error_bound + ulp(v);
    return BigReal{std::move(v), std::move(e), a.digits < b.digits ? a.digits : b.digits};
}
/// Multiply by a value known to one ulp (first-order bound propagation).
inline BigReal mul_exact(const BigReal& a, const Real& c) {
    Real v = a.value * c;
    Real e = a.error_bound * abs(c) + abs(a.value) * ulp(c) + ulp(v);
    return BigReal{std::move(v), std::move(e), a.digits};
}
inline BigReal div_exact(const BigReal& a, const Real& c) {
    Real v = a.value / c;
    Real e = a.error_bound / abs(c) + abs(v) * ulp(c) / abs(c) + ulp(v);
    return BigReal{std::move(v), std::move(e), a.digits};
}
inline BigReal exp(const BigReal& a) {
    Real v = exp(a.value);
    Real e = abs(v) * a.error_bound + ulp(v);  // |exp'| = exp at the point
    return BigReal{std::move(v), std::move(e), a.digits};
}

struct Complex {
    Real re, im;
};
struct BigComplex {
    BigReal re, im;
};

inline Complex cmul(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex cadd(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex csub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
/// Principal square root.
inline Complex csqrt(const Complex& z) {
    Real r = sqrt(z.re * z.re + z.im * z.im);
    Real half = Real::of(Rat(1, 2), z.re.prec());
    Real u = sqrt((r + z.re) * half);
    Real v = sqrt((r - z.re) * half);
    if (z.im.sgn() < 0) v = -v;
    return {std::move(u), std::move(v)};
}
/// Principal logarithm: log|z| + i*arg(z), arg in (-pi, pi].
inline Complex clog(const Complex& z) {
    Real m = log(sqrt(z.re * z.re + z.im * z.im));
    Real a = atan2(z.im, z.re);
    return {std::move(m), std::move(a)};
}
inline Complex ccos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

}  // namespace quadsurd
