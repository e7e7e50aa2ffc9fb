#pragma once

#include "quadsurd/real.hpp"

#include <functional>
#include <stdexcept>

namespace quadsurd::realfield {

/// Raised when level doubling fails to reach the target agreement. Carries
/// the best estimate so callers can report it.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(std::string what, BigReal best)
        : std::runtime_error(std::move(what)), best_estimate(std::move(best)) {}
    BigReal best_estimate;
};

using Integrand = std::function<Real(const Real&)>;

/// Tanh-sinh (double-exponential) quadrature of f over the finite interval
/// (a, b). The variable change x = c + h*tanh((pi/2) sinh u) pushes endpoint
/// behaviour into a double-exponentially decaying weight, so integrable
/// algebraic (x^(-1/2)) and logarithmic endpoint singularities need no
/// special casing. The step is halved per level until two successive levels
/// agree to the context's target; the reported error bound is the last level
/// difference (floored at the rounding noise of the working precision).
///
/// Abscissas near an endpoint are formed as endpoint + h*(1 -+ |t|) with the
/// complement computed directly from exp, so an integrand singular at 0
/// sees full relative precision there.
BigReal integrate_tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                            const PrecisionContext& ctx);

}  // namespace quadsurd::realfield
