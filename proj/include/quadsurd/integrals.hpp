#pragma once

#include "quadsurd/quadrature.hpp"
#include "quadsurd/real.hpp"

namespace quadsurd::realfield {

enum class TrigMode { cos, sin };

enum class NestedMode {
    reduced_1d,  // outer quadrature over the closed-form inner value
    full_2d,     // inner integral also by quadrature; slow, used as an oracle
};

/// Integral of cos(nx)/(k + sin^2 x) over [-pi, pi]. Requires k > 0.
BigReal inner_integral_numeric(unsigned n, const Real& k, const PrecisionContext& ctx);

/// Double integral of cos(nx)/(t + sin^2 x) over [0, upper] x [-pi, pi]
/// for even n, reduced by default to a single t-integral of the inner
/// closed form; the t^(-1/2) behaviour at t = 0 is left to tanh-sinh.
BigReal double_integral_numeric(unsigned n, const Real& upper, const PrecisionContext& ctx,
                                NestedMode mode = NestedMode::reduced_1d);

/// Same double integral over [lower, upper] x [-pi, pi], 0 <= lower < upper.
BigReal double_integral_numeric(unsigned n, const Real& lower, const Real& upper,
                                const PrecisionContext& ctx,
                                NestedMode mode = NestedMode::reduced_1d);

/// Single-integral reformulation of the double integral:
/// integral of cos(nx) (-ln(sin^2 x) + ln(m + sin^2 x)) over [-pi, pi],
/// split at the logarithmic singularities x in {-pi, 0, pi}.
BigReal fubini_single(unsigned n, const Real& m, const PrecisionContext& ctx);

/// Integral of trig(nx) ln(sin x + cos x) over [-pi, pi] under the principal
/// logarithm (ln of a negative real is ln|.| + i pi), split at the sign
/// changes x = -pi/4 and x = 3pi/4.
BigComplex complex_log_integral(TrigMode mode, unsigned n, const PrecisionContext& ctx);

}  // namespace quadsurd::realfield
