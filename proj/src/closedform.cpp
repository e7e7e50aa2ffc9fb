#include "quadsurd/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace quadsurd::closedform {

using realfield::inner_integral_numeric;

namespace {

// Extra decimal digits needed so that values of size alpha^j still carry
// absolute accuracy at the context target.
unsigned growth_digits(unsigned j, double k) {
    double alpha = 2 * k + 1 + 2 * std::sqrt(k * (k + 1));
    return static_cast<unsigned>(j * std::log10(alpha)) + 20;
}

Real sqrt_kk1(const Real& k) { return sqrt(k * (k + 1)); }

}  // namespace

Real inner_integral_closed_raw(unsigned n, const Real& t, const Real& pi_cached) {
    // -y_j + 2 z_j / rt collapses to 2 alpha^{-j} / rt because alpha and its
    // conjugate are reciprocal units; this avoids the cancellation of the
    // two alpha^{+j} halves.
    const unsigned j = n / 2;
    Real rt = sqrt_kk1(t);
    Real alpha_j = pow_ui(2 * t + 1 + 2 * rt, j);
    return pi_cached * 2 / (alpha_j * rt);
}

InnerIntegralValue inner_integral_closed(unsigned n, const Rat& k, const PrecisionContext& ctx) {
    if (sgn(k) <= 0) throw std::domain_error("inner_integral_closed: k must be positive");
    const unsigned j = n / 2;
    InnerIntegralValue out;
    out.n = n;
    out.has_exact_parts = true;
    out.y = numbers::y_seq(j, k);
    out.z = numbers::z_seq(j, k);
    if (n % 2 == 1) {
        out.value = BigReal{Real::of(0L, ctx.bits()), Real::of(0L, 64), ctx.digits};
        return out;
    }
    // The -y + 2z/rt combination cancels ~2j log10(alpha) digits; evaluate
    // with that much headroom.
    PrecisionContext boosted(ctx.digits + growth_digits(j, mpq_get_d(k.get_mpq_t())),
                             ctx.max_levels);
    const mpfr_prec_t prec = boosted.bits();
    Real rt = sqrt_kk1(Real::of(k, prec));
    Real y = Real::of(out.y, prec);
    Real z = Real::of(out.z, prec);
    Real v = Real::pi(prec) * (-y + z * 2 / rt);
    out.value = BigReal{v, Real::pow10(-static_cast<long>(ctx.digits) - 10), ctx.digits};
    return out;
}

InnerIntegralValue inner_integral_closed(unsigned n, const Real& k, const PrecisionContext& ctx) {
    if (k.sgn() <= 0) throw std::domain_error("inner_integral_closed: k must be positive");
    InnerIntegralValue out;
    out.n = n;
    if (n % 2 == 1) {
        out.value = BigReal{Real::of(0L, ctx.bits()), Real::of(0L, 64), ctx.digits};
        return out;
    }
    const unsigned j = n / 2;
    PrecisionContext boosted(ctx.digits + growth_digits(j, k.to_double()), ctx.max_levels);
    auto [y, z] = yz_closed(j, k, boosted);
    Real rt = sqrt_kk1(k);
    Real v = Real::pi(boosted.bits()) * (-y.value + z.value * 2 / rt);
    out.value = BigReal{v, Real::pow10(-static_cast<long>(ctx.digits) - 8), ctx.digits};
    return out;
}

std::pair<BigReal, BigReal> yz_closed(unsigned n, const Real& k, const PrecisionContext& ctx) {
    if (k.sgn() <= 0) throw std::domain_error("yz_closed: k must be positive");
    PrecisionContext boosted(ctx.digits + growth_digits(n, k.to_double()), ctx.max_levels);
    const mpfr_prec_t prec = boosted.bits();
    Real kk = k + Real::of(0L, prec);  // widen
    Real rt = sqrt_kk1(kk);
    Real alpha_n = pow_ui(2 * kk + 1 + 2 * rt, n);
    Real y = (alpha_n - 1 / alpha_n) / rt;
    Real z = cosh(asinh(sqrt(kk)) * (2 * static_cast<long>(n)));
    Real bound_y = (abs(y) + 1) * Real::pow10(-static_cast<long>(ctx.digits) - 12);
    Real bound_z = (abs(z) + 1) * Real::pow10(-static_cast<long>(ctx.digits) - 12);
    return {BigReal{y, bound_y, ctx.digits}, BigReal{z, bound_z, ctx.digits}};
}

TrigClosedForm dn_trig(unsigned n, const PrecisionContext& ctx) {
    PrecisionContext boosted(ctx.digits + n + 16, ctx.max_levels);
    const mpfr_prec_t prec = boosted.bits();
    Real root3 = sqrt(Real::of(3L, prec));
    Real v = cosh(acosh(root3) * (2 * static_cast<long>(n)));
    Real bound = (abs(v) + 1) * Real::pow10(-static_cast<long>(ctx.digits) - 12);
    return TrigClosedForm{n, BigReal{v, bound, ctx.digits}};
}

Int kekule_from_integral(unsigned n, const PrecisionContext& ctx, Real* residual_out) {
    // c_n has about n digits; keep enough working precision that the
    // residual stays below 1e-30 in absolute terms.
    PrecisionContext work(std::max(ctx.digits, 40 + n), ctx.max_levels);
    const mpfr_prec_t prec = work.bits();
    BigReal integral = inner_integral_numeric(2 * n, Real::of(2L, prec), work);
    TrigClosedForm dn = dn_trig(n, work);
    Real pi = Real::pi(prec);
    Real root23 = sqrt(Real::of(Rat(2, 3), prec));
    Real value = -(integral.value / pi) + dn.value.value * root23;
    Int rounded = value.round_to_int();
    Real residual = abs(value - Real::of(rounded, prec));
    if (residual_out) *residual_out = residual;
    if (residual >= Real::pow10(-30))
        throw VerificationFailure("kekule_from_integral: residual " + residual.str(5) +
                                  " exceeds 1e-30 at n=" + std::to_string(n));
    return rounded;
}

BigReal j_closed_oracle(unsigned n, const Real& upper, const PrecisionContext& ctx) {
    if (upper.sgn() <= 0) throw std::domain_error("j_closed_oracle: upper must be positive");
    const mpfr_prec_t prec = ctx.bits();
    Real m = upper + Real::of(0L, prec);
    Real pi = Real::pi(prec);
    Real rt = sqrt_kk1(m);
    Real v(prec);
    switch (n) {
        case 0:
            v = 2 * pi * log(2 * m + 1 + 2 * rt);
            break;
        case 2:
            v = 4 * pi * (rt - m);
            break;
        case 4:
            v = pi * ((8 * m + 4) * rt - 8 * m * m - 8 * m);
            break;
        default:
            throw std::domain_error("j_closed_oracle: only n in {0,2,4}");
    }
    return BigReal{v, (abs(v) + 1) * Real::pow10(-static_cast<long>(ctx.digits) - 15),
                   ctx.digits};
}

namespace {

struct CoeffParts {
    Rat re;             // rational multiple of pi
    Rat im_over_sqrt2;  // rational multiple of pi/sqrt(2), imaginary part
};

CoeffParts cos_parts(unsigned n, bool paper_sign) {
    CoeffParts p{Rat(0), Rat(0)};
    if ((n + 3) % 4 == 3) {  // floor(((n+3) mod 4)/3) = 1, i.e. n = 0 mod 4
        int sign = (n / 4) % 2 == 0 ? 1 : -1;  // (-1)^{floor(n/4)}
        if (!paper_sign) sign = -sign;         // quadrature-verified sign
        p.re = Rat(2 * sign, static_cast<long>(n));
    }
    if (n % 2 == 1) {  // (-1)^{n+1} + 1 = 2 only for odd n
        unsigned long f = (n + 3) / 4;
        int sign = f % 2 == 0 ? 1 : -1;
        p.im_over_sqrt2 = Rat(2 * sign, static_cast<long>(2 * (n / 2) + 1));
    }
    return p;
}

CoeffParts sin_parts(unsigned n) {
    CoeffParts p{Rat(0), Rat(0)};
    if (n % 2 == 1) {  // (-1)^{n+3} + 1 = 2 only for odd n
        unsigned long f = (n + 5) / 4;
        int sign = f % 2 == 0 ? 1 : -1;
        p.im_over_sqrt2 = Rat(2 * sign, static_cast<long>(n));
    }
    if ((n + 5) % 4 == 3) {  // n = 2 mod 4
        unsigned long f = (n + 2) / 4;
        int sign = f % 2 == 0 ? 1 : -1;
        p.re = Rat(-sign, static_cast<long>(2 * (n / 4) + 1));
    }
    return p;
}

BigComplex assemble_coeff(const CoeffParts& p, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);
    Real re = Real::of(p.re, prec) * pi;
    Real im = Real::of(p.im_over_sqrt2, prec) * pi / sqrt(Real::of(2L, prec));
    Real tiny = Real::pow10(-static_cast<long>(ctx.digits) - 15);
    return BigComplex{BigReal{re, tiny, ctx.digits}, BigReal{im, tiny, ctx.digits}};
}

}  // namespace

BigComplex prop_fourier_coeff(TrigMode mode, unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::domain_error("prop_fourier_coeff: n >= 1");
    return assemble_coeff(mode == TrigMode::cos ? cos_parts(n, false) : sin_parts(n), ctx);
}

BigComplex prop_fourier_coeff_paper(TrigMode mode, unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::domain_error("prop_fourier_coeff: n >= 1");
    return assemble_coeff(mode == TrigMode::cos ? cos_parts(n, true) : sin_parts(n), ctx);
}

BigReal series_partial(SeriesKind which, unsigned long n_terms, const PrecisionContext& ctx) {
    if (n_terms < 1) throw std::domain_error("series_partial: N >= 1");
    const mpfr_prec_t prec = ctx.bits();
    Real sum = Real::of(0L, prec);
    if (which == SeriesKind::sqrt2) {
        for (unsigned long n = 1; n <= n_terms; n += 2) {
            unsigned long f = (n + 3) / 4;
            long sign = f % 2 == 0 ? 2 : -2;
            // 2*floor(n/2) + 1 = n for odd n
            sum = sum + Real::of(sign, prec) / static_cast<long>(n);
        }
    } else {
        for (unsigned long n = 4; n <= n_terms; n += 4) {
            long sign = (n / 4) % 2 == 0 ? 1 : -1;
            sum = sum + Real::of(sign, prec) / static_cast<long>(n);
        }
    }
    return BigReal{sum, Real::pow10(-static_cast<long>(ctx.digits) - 8), ctx.digits};
}

BigComplex fourier_series_eval(const Real& x, unsigned long n_terms,
                               const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits();
    Real c1 = cos(x), s1 = sin(x);
    Real at = c1 + s1;
    if (abs(at) < Real::pow10(-static_cast<long>(ctx.digits) / 2))
        throw std::domain_error("fourier_series_eval: x is a singularity of ln(sin x + cos x)");

    Real half = Real::of(Rat(1, 2), prec);
    Real re = -log(Real::of(2L, prec)) * half;  // constant term i(pi + i ln 2)/2
    Real im_over_s2 = Real::of(0L, prec);       // accumulated in units of 1/sqrt(2)
    Real im_const = Real::pi(prec) * half;

    Real cn = c1, sn = s1;
    for (unsigned long n = 1; n <= n_terms; ++n) {
        CoeffParts pc = cos_parts(static_cast<unsigned>(n), false);
        CoeffParts ps = sin_parts(static_cast<unsigned>(n));
        if (sgn(pc.re) != 0) re = re + cn * Real::of(pc.re, prec);
        if (sgn(ps.re) != 0) re = re + sn * Real::of(ps.re, prec);
        if (sgn(pc.im_over_sqrt2) != 0) im_over_s2 = im_over_s2 + cn * Real::of(pc.im_over_sqrt2, prec);
        if (sgn(ps.im_over_sqrt2) != 0) im_over_s2 = im_over_s2 + sn * Real::of(ps.im_over_sqrt2, prec);
        Real cnext = cn * c1 - sn * s1;
        sn = sn * c1 + cn * s1;
        cn = cnext;
    }
    Real im = im_const + im_over_s2 / sqrt(Real::of(2L, prec));
    Real tiny = Real::pow10(-static_cast<long>(ctx.digits) - 6);
    return BigComplex{BigReal{re, tiny, ctx.digits}, BigReal{im, tiny, ctx.digits}};
}

}  // namespace quadsurd::closedform
