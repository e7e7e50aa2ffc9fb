#include "quadsurd/integrals.hpp"

#include "quadsurd/closedform.hpp"

#include <stdexcept>

namespace quadsurd::realfield {

namespace {

// Integral of numer(x)/(k + sin^2 x) over [0, pi/2] for small k, where the
// integrand's pole at x = i sqrt(k) sits too close to the contour for
// direct quadrature. The x = e^v change of variable keeps that pole a fixed
// pi/2 off the path, uniformly in k; the dropped [0, eps] head is below
// eps/k and goes into the error bound.
BigReal quarter_integral_small_k(const realfield::Integrand& numer, const Real& k,
                                 const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits();
    Real kk = k;
    Real half = Real::of(Rat(1, 2), prec);
    Real eps = kk * Real::pow10(-static_cast<long>(ctx.digits) - 10, prec);
    auto fv = [&](const Real& v) {
        Real x = exp(v);
        Real s = sin(x);
        return x * numer(x) / (kk + s * s);
    };
    auto f = [&](const Real& x) {
        Real s = sin(x);
        return numer(x) / (kk + s * s);
    };
    BigReal head = integrate_tanh_sinh(fv, log(eps), log(half), ctx);
    BigReal rest = integrate_tanh_sinh(f, half, Real::pi(prec) * half, ctx);
    BigReal out = add(head, rest);
    out.error_bound = out.error_bound + Real::pow10(-static_cast<long>(ctx.digits) - 10);
    return out;
}

}  // namespace

BigReal inner_integral_numeric(unsigned n, const Real& k, const PrecisionContext& ctx) {
    if (k.sgn() <= 0)
        throw std::domain_error("inner_integral_numeric: k must be positive");
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);
    Real kk = k;
    const long nn = static_cast<long>(n);

    if (kk < Real::pow10(-6)) {
        // Fold [0, pi] onto [0, pi/2] without simplifying the numerators:
        // the x -> pi - x half carries cos(n pi - n x) as written.
        auto c1 = [&](const Real& x) { return cos(x * nn); };
        auto c2 = [&](const Real& x) { return cos(pi * nn - x * nn); };
        BigReal q1 = quarter_integral_small_k(c1, kk, ctx);
        BigReal q2 = quarter_integral_small_k(c2, kk, ctx);
        return mul_exact(add(q1, q2), Real::of(2L, prec));
    }

    auto f = [&](const Real& x) {
        Real s = sin(x);
        return cos(x * nn) / (kk + s * s);
    };
    // The integrand is even, so integrate 2 * [0, pi]; the sin^2 layer at
    // small k then sits at the interval endpoints where the
    // double-exponential nodes cluster.
    BigReal half_range = integrate_tanh_sinh(f, Real::of(0L, prec), pi, ctx);
    return mul_exact(half_range, Real::of(2L, prec));
}

BigReal double_integral_numeric(unsigned n, const Real& lower, const Real& upper,
                                const PrecisionContext& ctx, NestedMode mode) {
    if (n % 2 != 0)
        throw std::domain_error("double_integral_numeric: n must be even");
    if (lower.sgn() < 0 || !(lower < upper))
        throw std::domain_error("double_integral_numeric: need 0 <= lower < upper");

    if (mode == NestedMode::full_2d) {
        // The inner values must be quieter than the outer level-agreement
        // target, or the outer refinement never settles.
        PrecisionContext inner_ctx(ctx.digits + 10, ctx.max_levels + 2);
        auto f = [&](const Real& t) { return inner_integral_numeric(n, t, inner_ctx).value; };
        return integrate_tanh_sinh(f, lower, upper, ctx);
    }

    Real pi = Real::pi(ctx.bits());
    auto f = [&, n](const Real& t) {
        return closedform::inner_integral_closed_raw(n, t, pi);
    };
    return integrate_tanh_sinh(f, lower, upper, ctx);
}

BigReal double_integral_numeric(unsigned n, const Real& upper, const PrecisionContext& ctx,
                                NestedMode mode) {
    if (upper.sgn() <= 0)
        throw std::domain_error("double_integral_numeric: upper limit must be positive");
    return double_integral_numeric(n, Real::of(0L, ctx.bits()), upper, ctx, mode);
}

BigReal fubini_single(unsigned n, const Real& m, const PrecisionContext& ctx) {
    if (n % 2 != 0) throw std::domain_error("fubini_single: n must be even");
    if (m.sgn() <= 0) throw std::domain_error("fubini_single: m must be positive");
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);
    Real mm = m;
    auto f = [&, n](const Real& x) {
        Real s2 = sin(x);
        s2 = s2 * s2;
        return cos(x * static_cast<long>(n)) * (log(mm + s2) - log(s2));
    };
    // Split at the logarithmic singularities x = -pi, 0, pi.
    Real zero = Real::of(0L, prec);
    BigReal left = integrate_tanh_sinh(f, -pi, zero, ctx);
    BigReal right = integrate_tanh_sinh(f, zero, pi, ctx);
    return add(left, right);
}

BigComplex complex_log_integral(TrigMode mode, unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::domain_error("complex_log_integral: n >= 1");
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);
    Real quarter_pi = pi / 4;
    const long nn = static_cast<long>(n);

    auto trig = [&](const Real& x) { return mode == TrigMode::cos ? cos(x * nn) : sin(x * nn); };
    auto f_re = [&](const Real& x) {
        Real v = sin(x) + cos(x);
        return trig(x) * log(abs(v));
    };

    // sin x + cos x is negative exactly on (-pi, -pi/4) and (3pi/4, pi);
    // the principal log contributes i*pi there.
    const Real breaks[4] = {-pi, -quarter_pi, 3 * quarter_pi, pi};

    BigReal re = integrate_tanh_sinh(f_re, breaks[0], breaks[1], ctx);
    re = add(re, integrate_tanh_sinh(f_re, breaks[1], breaks[2], ctx));
    re = add(re, integrate_tanh_sinh(f_re, breaks[2], breaks[3], ctx));

    BigReal im = integrate_tanh_sinh(trig, breaks[0], breaks[1], ctx);
    im = add(im, integrate_tanh_sinh(trig, breaks[2], breaks[3], ctx));
    im = mul_exact(im, pi);

    return BigComplex{re, im};
}

}  // namespace quadsurd::realfield
