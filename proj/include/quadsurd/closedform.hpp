#pragma once

#include "quadsurd/integrals.hpp"
#include "quadsurd/numbers.hpp"
#include "quadsurd/real.hpp"

#include <utility>

namespace quadsurd::closedform {

using realfield::TrigMode;

/// Closed-form value of the inner integral together with its exact
/// y/z components when the parameter k is rational.
struct InnerIntegralValue {
    unsigned n;
    BigReal value;
    bool has_exact_parts = false;
    Rat y, z;  // y_{floor(n/2),k}, z_{floor(n/2),k}
};

struct TrigClosedForm {
    unsigned n;
    BigReal value;
};

enum class SeriesKind { sqrt2, ln2 };

/// Inner integral via the closed form: ((-1)^n + 1)/2 * pi *
/// (-y_j + z_j * 2/sqrt(k(k+1))), j = floor(n/2). Exactly zero for odd n.
/// Rational k uses the exact recurrence values scaled by one square root.
InnerIntegralValue inner_integral_closed(unsigned n, const Rat& k, const PrecisionContext& ctx);
InnerIntegralValue inner_integral_closed(unsigned n, const Real& k, const PrecisionContext& ctx);

/// Raw closed-form inner value at real parameter t (n even), sized for use
/// as a quadrature integrand. alpha = 2t+1+2 sqrt(t(t+1)) is a unit, so the
/// conjugate power is computed as 1/alpha^j with no cancellation.
Real inner_integral_closed_raw(unsigned n, const Real& t, const Real& pi_cached);

/// Binet-style y and hyperbolic-cosine z closed forms at real k > 0.
/// Working precision is raised internally with n so the results carry
/// absolute accuracy at the context's digit target.
std::pair<BigReal, BigReal> yz_closed(unsigned n, const Real& k, const PrecisionContext& ctx);

/// d_n evaluated as cosh(2n arccosh(sqrt 3)), the real form of the
/// alternative evaluation (-1)^n cos(2n arcsin(sqrt 3)); rounds exactly to
/// the companion recurrence.
TrigClosedForm dn_trig(unsigned n, const PrecisionContext& ctx);

/// Kekule number reconstructed from the integral representation:
/// -I(2n, 2)/pi + d_n sqrt(2/3), rounded to the nearest integer. Throws
/// VerificationFailure if the pre-rounding residual exceeds 1e-30.
Int kekule_from_integral(unsigned n, const PrecisionContext& ctx, Real* residual_out = nullptr);

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact antiderivative evaluations of the double integral for n in
/// {0, 2, 4}; re-derived independently and checked by finite differences in
/// the test suite before being used as an oracle anywhere.
BigReal j_closed_oracle(unsigned n, const Real& upper, const PrecisionContext& ctx);

/// Fourier coefficients of ln(sin x + cos x). The sine coefficients follow
/// the stated closed form verbatim. For the cosine coefficients the printed
/// real term carries the wrong sign at n = 0 mod 4 (the quadrature
/// cross-check and the classical ln|sin| expansion both give its negative),
/// so this evaluates that term with the corrected sign; the verbatim value
/// is exposed separately for reporting.
BigComplex prop_fourier_coeff(TrigMode mode, unsigned n, const PrecisionContext& ctx);
BigComplex prop_fourier_coeff_paper(TrigMode mode, unsigned n, const PrecisionContext& ctx);

/// Partial sum through term N of the two closing series (targets -pi/sqrt2
/// and -ln2/4).
BigReal series_partial(SeriesKind which, unsigned long n_terms, const PrecisionContext& ctx);

/// Partial Fourier series of ln(sin x + cos x) through term N, constant
/// term i(pi + i ln 2)/2 included. Throws std::domain_error at the
/// singularities x = -pi/4, 3pi/4 (mod 2pi).
BigComplex fourier_series_eval(const Real& x, unsigned long n_terms, const PrecisionContext& ctx);

}  // namespace quadsurd::closedform
