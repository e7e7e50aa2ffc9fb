#include "doctest.h"

#include "quadsurd/closedform.hpp"
#include "quadsurd/integrals.hpp"
#include "quadsurd/numbers.hpp"

using namespace quadsurd;
using namespace quadsurd::closedform;
using realfield::TrigMode;

namespace {
Real tol10(long e) { return Real::pow10(e); }
}

TEST_CASE("closed-form inner integral at k = 2 reproduces the c/d shape") {
    PrecisionContext ctx(60);
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);
    Real s6 = sqrt(Real::of(6L, prec));

    auto v0 = inner_integral_closed(0, Rat(2), ctx);
    CHECK(abs(v0.value.value - 2 * pi / s6) <= tol10(-50));

    auto v4 = inner_integral_closed(4, Rat(2), ctx);
    CHECK(v4.y == 40);  // c_2
    CHECK(v4.z == 49);  // d_2
    CHECK(abs(v4.value.value - pi * (-40 + 49 * 2 / s6)) <= tol10(-50));

    auto v7 = inner_integral_closed(7, Rat(5), ctx);
    CHECK(v7.value.value.is_zero());

    CHECK_THROWS_AS(inner_integral_closed(2, Rat(-1), ctx), std::domain_error);
}

TEST_CASE("closed form vs quadrature across n and k") {
    PrecisionContext ctx(60);
    const Rat ks[] = {Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(7, 3)};
    for (unsigned n = 0; n <= 8; n += 2)
        for (const Rat& k : ks) {
            auto closed = inner_integral_closed(n, k, ctx);
            auto numeric = realfield::inner_integral_numeric(n, Real::of(k, ctx.bits()), ctx);
            CHECK(abs(closed.value.value - numeric.value) <=
                  closed.value.error_bound + numeric.error_bound);
        }
}

TEST_CASE("closed form at real k equals closed form at the same rational k") {
    PrecisionContext ctx(60);
    auto a = inner_integral_closed(6, Rat(7, 3), ctx);
    auto b = inner_integral_closed(6, Real::of(Rat(7, 3), ctx.bits()), ctx);
    CHECK(abs(a.value.value - b.value.value) <= tol10(-55));
}

TEST_CASE("yz closed forms") {
    PrecisionContext ctx(60);
    auto [y1, z1] = yz_closed(1, Real::of(3L, ctx.bits()), ctx);
    CHECK(abs(y1.value - 4) <= tol10(-50));
    CHECK(abs(z1.value - 7) <= tol10(-50));

    auto [y2, z2] = yz_closed(2, Real::of(1L, ctx.bits()), ctx);
    CHECK(abs(y2.value - 24) <= tol10(-50));
    CHECK(abs(z2.value - 17) <= tol10(-50));

    auto [y0, z0] = yz_closed(0, Real::of(Rat(7, 2), ctx.bits()), ctx);
    CHECK(y0.value.is_zero());
    CHECK(abs(z0.value - 1) <= tol10(-55));
}

TEST_CASE("yz closed forms track the recurrence to 1e-40 absolute") {
    PrecisionContext ctx(60);
    for (long k = 1; k <= 8; ++k) {
        Real kr = Real::of(k, ctx.bits());
        for (unsigned n = 0; n <= 40; n += 4) {
            auto [y, z] = yz_closed(n, kr, ctx);
            Real ye = Real::of(numbers::y_seq(n, Rat(k)), y.value.prec());
            Real ze = Real::of(numbers::z_seq(n, Rat(k)), z.value.prec());
            CHECK(abs(y.value - ye) <= tol10(-40));
            CHECK(abs(z.value - ze) <= tol10(-40));
        }
    }
    // rational, non-integer k
    Real kr = Real::of(Rat(7, 3), ctx.bits());
    for (unsigned n = 0; n <= 20; ++n) {
        auto [y, z] = yz_closed(n, kr, ctx);
        CHECK(abs(y.value - Real::of(numbers::y_seq(n, Rat(7, 3)), y.value.prec())) <= tol10(-40));
        CHECK(abs(z.value - Real::of(numbers::z_seq(n, Rat(7, 3)), z.value.prec())) <= tol10(-40));
    }
}

TEST_CASE("dn_trig rounds to the companion recurrence") {
    PrecisionContext ctx(60);
    CHECK(dn_trig(0, ctx).value.value.round_to_int() == 1);
    CHECK(dn_trig(1, ctx).value.value.round_to_int() == 5);
    CHECK(dn_trig(3, ctx).value.value.round_to_int() == 485);
    for (unsigned n = 0; n <= 60; ++n) {
        auto t = dn_trig(n, ctx);
        Real expect = Real::of(numbers::companion_d(n), t.value.value.prec());
        CHECK(abs(t.value.value - expect) <= tol10(-45));
    }
}

TEST_CASE("dn_trig equals the complex-arithmetic reading of the paper form") {
    // (-1)^n cos(2n arcsin(sqrt 3)) with arcsin evaluated through the
    // principal complex branch: arcsin z = -i log(iz + sqrt(1 - z^2)).
    PrecisionContext ctx(50);
    const mpfr_prec_t prec = PrecisionContext(50 + 40).bits();
    Real z = sqrt(Real::of(3L, prec));
    Complex one_minus_z2{1 - z * z, Real::of(0L, prec)};
    Complex iz{Real::of(0L, prec), z};
    Complex arg = cadd(iz, csqrt(one_minus_z2));
    Complex lg = clog(arg);
    Complex arcsin{lg.im, -lg.re};  // -i * log(...)
    for (unsigned n = 0; n <= 30; ++n) {
        Complex angle{arcsin.re * (2 * static_cast<long>(n)),
                      arcsin.im * (2 * static_cast<long>(n))};
        Complex c = ccos(angle);
        long sign = n % 2 == 0 ? 1 : -1;
        Real re = c.re * sign, im = c.im * sign;
        auto t = dn_trig(n, ctx);
        CHECK(abs(re - t.value.value) <= tol10(-40));
        CHECK(abs(im) <= abs(re) * tol10(-40) + tol10(-40));
    }
}

TEST_CASE("kekule numbers reconstructed from the integral") {
    PrecisionContext ctx(60);
    CHECK(kekule_from_integral(2, ctx) == 40);
    CHECK(kekule_from_integral(0, ctx) == 0);
    CHECK(kekule_from_integral(5, ctx) == numbers::kekule_c(5));
    CHECK(kekule_from_integral(5, ctx) == 38804);
}

TEST_CASE("j oracle: re-derivation by finite differences") {
    // Differentiating the stated antiderivatives must reproduce the
    // closed-form inner value; checked before the oracle is trusted.
    PrecisionContext ctx(80);
    const mpfr_prec_t prec = ctx.bits();
    Real h = Real::pow10(-20, prec);
    Real pi = Real::pi(prec);
    const Rat samples[] = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
    for (unsigned n = 0; n <= 4; n += 2)
        for (const Rat& t0 : samples) {
            Real t = Real::of(t0, prec);
            Real fd = (j_closed_oracle(n, t + h, ctx).value -
                       j_closed_oracle(n, t - h, ctx).value) /
                      (2 * h);
            Real direct = inner_integral_closed_raw(n, t, pi);
            CHECK(abs(fd - direct) <= tol10(-30));
        }
    CHECK_THROWS_AS(j_closed_oracle(6, Real::of(1L, prec), ctx), std::domain_error);
}

TEST_CASE("j oracle: frozen closed values") {
    PrecisionContext ctx(60);
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);

    auto v = j_closed_oracle(2, Real::of(1L, prec), ctx);
    CHECK(abs(v.value - 4 * pi * (sqrt(Real::of(2L, prec)) - 1)) <= tol10(-50));

    v = j_closed_oracle(4, Real::of(2L, prec), ctx);
    CHECK(abs(v.value - 4 * (-12 + 5 * sqrt(Real::of(6L, prec))) * pi) <= tol10(-50));

    v = j_closed_oracle(0, Real::of(Rat(5, 4), prec), ctx);
    Real expected = 2 * pi * log((7 + 3 * sqrt(Real::of(5L, prec))) / 2);
    CHECK(abs(v.value - expected) <= tol10(-50));
}

TEST_CASE("j oracle agrees with the reduced double integral") {
    PrecisionContext ctx(60);
    const mpfr_prec_t prec = ctx.bits();
    std::vector<Real> uppers;
    for (const Rat& m : {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(5, 4)})
        uppers.push_back(Real::of(m, prec));
    uppers.push_back(sqrt(Real::of(2L, prec)));
    for (unsigned n = 0; n <= 4; n += 2)
        for (const Real& m : uppers) {
            auto oracle = j_closed_oracle(n, m, ctx);
            auto numeric = realfield::double_integral_numeric(n, m, ctx);
            CHECK(abs(oracle.value - numeric.value) <= oracle.error_bound + numeric.error_bound);
        }
}

TEST_CASE("proposition coefficients: frozen spot values") {
    PrecisionContext ctx(40);
    const mpfr_prec_t prec = ctx.bits();
    Real pi = Real::pi(prec);

    auto c2 = prop_fourier_coeff(TrigMode::cos, 2, ctx);
    CHECK(c2.re.value.is_zero());
    CHECK(c2.im.value.is_zero());

    auto c1 = prop_fourier_coeff(TrigMode::cos, 1, ctx);
    CHECK(abs(c1.im.value + sqrt(Real::of(2L, prec)) * pi) <= tol10(-35));
    CHECK(c1.re.value.is_zero());

    // The integral is +pi/2 at n = 4; the printed formula gives -pi/2.
    auto c4 = prop_fourier_coeff(TrigMode::cos, 4, ctx);
    CHECK(abs(c4.re.value - pi / 2) <= tol10(-35));
    auto c4p = prop_fourier_coeff_paper(TrigMode::cos, 4, ctx);
    CHECK(abs(c4p.re.value + pi / 2) <= tol10(-35));
}

TEST_CASE("proposition coefficients match complex quadrature") {
    PrecisionContext ctx(40);
    for (unsigned n = 1; n <= 6; ++n)
        for (TrigMode mode : {TrigMode::cos, TrigMode::sin}) {
            auto closed = prop_fourier_coeff(mode, n, ctx);
            auto quad = realfield::complex_log_integral(mode, n, ctx);
            CHECK(abs(closed.re.value - quad.re.value) <= tol10(-25));
            CHECK(abs(closed.im.value - quad.im.value) <= tol10(-25));
        }
}

TEST_CASE("series partial sums") {
    PrecisionContext ctx(30);
    const mpfr_prec_t prec = ctx.bits();

    auto s = series_partial(SeriesKind::ln2, 4, ctx);
    CHECK(abs(s.value + Real::of(Rat(1, 4), prec)) <= tol10(-25));

    s = series_partial(SeriesKind::sqrt2, 1, ctx);
    CHECK(abs(s.value + 2) <= tol10(-25));

    s = series_partial(SeriesKind::sqrt2, 100000, ctx);
    Real target = -Real::pi(prec) / sqrt(Real::of(2L, prec));
    CHECK(abs(s.value - target) <= tol10(-4));

    s = series_partial(SeriesKind::ln2, 100000, ctx);
    target = -log(Real::of(2L, prec)) / 4;
    CHECK(abs(s.value - target) <= tol10(-4));
}

TEST_CASE("fourier series partial sums converge to the principal branch") {
    PrecisionContext ctx(30);
    const mpfr_prec_t prec = ctx.bits();
    const unsigned long N = 2000;
    Real bound = Real::of(10L, prec) / static_cast<long>(N);

    auto f0 = fourier_series_eval(Real::of(0L, prec), N, ctx);
    CHECK(abs(f0.re.value) <= bound);
    CHECK(abs(f0.im.value) <= bound);

    Real pi = Real::pi(prec);
    auto fh = fourier_series_eval(pi / 2, N, ctx);
    CHECK(abs(fh.re.value) <= bound);
    CHECK(abs(fh.im.value) <= bound);

    auto fp = fourier_series_eval(pi, N, ctx);
    CHECK(abs(fp.re.value) <= bound);
    CHECK(abs(fp.im.value - pi) <= bound);

    CHECK_THROWS_AS(fourier_series_eval(-pi / 4, 10, ctx), std::domain_error);
}
