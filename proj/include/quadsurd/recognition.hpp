#pragma once

#include "quadsurd/numbers.hpp"
#include "quadsurd/real.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadsurd::recognition {

/// A valid "not recognizable at this precision/bound" outcome where the
/// caller asked for a definite form.
class RecognitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// a * (b + c sqrt(d)) * pi with a > 0 carrying the factored maximum,
/// gcd(b, c) = 1 and d squarefree. Zero is (a=1, b=0, c=0, d=1).
struct SurdForm {
    Rat a;
    Int b, c, d;
};

/// -pi (ln a^2 - 2 ln(b + c sqrt(d))), i.e. 2 pi ln((b + c sqrt d)/a),
/// with b + c sqrt(d) > a > 0 and d squarefree.
struct LogSurdForm {
    Int a, b, c, d;
};

struct IntegerRelation {
    std::vector<Int> coefficients;
    unsigned input_dimension = 0;
    BigReal residual;
};

/// Unfactored recognition output: value = pi * (b + c sqrt(d)).
struct RawSurdPi {
    Rat b, c;
    Int d;
};

/// Best continued-fraction convergent of x with denominator <= max_den.
/// Fails if the convergent misses x by more than 10x its error bound.
Rat rational_reconstruct(const BigReal& x, const Int& max_den);

/// Smallest-height integer relation sum(a_i x_i) = 0 with residual < 1e-30,
/// found by LLL reduction of the standard relation lattice. A relation is
/// accepted only if re-evaluating it with the inputs rounded 20 digits
/// shorter worsens the residual by at least 1e15 (or the full-precision
/// residual already sits at the inputs' noise floor); accidental
/// near-relations fail that ladder. nullopt is the valid negative answer.
std::optional<IntegerRelation> integer_relation(const std::vector<BigReal>& xs,
                                                const Int& height_bound,
                                                const PrecisionContext& ctx);

/// Recognize V = pi (b + c sqrt(d)) with rational b, c and d drawn from the
/// candidate list (defaults to the squarefree cores of 1..200 plus the
/// core(m(m+1)) hints when the list is empty).
RawSurdPi recognize_surd_pi(const BigReal& v, const std::vector<Int>& d_candidates,
                            const PrecisionContext& ctx);

/// Recognize V = 2 pi ln E with E a quadratic irrational (b + c sqrt d)/a,
/// via the minimal integer quadratic of E = exp(V/(2 pi)).
LogSurdForm recognize_log_surd(const BigReal& v, const PrecisionContext& ctx);

/// Dedicated template for the nested radical
/// V = 2 pi ln(1 + 2m sqrt2 + a sqrt(b (2m + sqrt2))): recovers (a, b) via
/// rational reconstruction of (exp(V/2pi) - 1 - 2m sqrt2)^2 / (2m + sqrt2).
std::pair<Int, Int> recognize_conj10(const BigReal& v, unsigned m, const PrecisionContext& ctx);

struct FactoredPair {
    Rat a;
    Int b, c;
};

/// Clear denominators and pull the maximal positive rational a out of
/// (b_raw, c_raw) so that b, c are coprime integers, b keeping the sign of
/// b_raw: a*b = b_raw, a*c = c_raw.
FactoredPair factor_max_integer(const Rat& b_raw, const Rat& c_raw);

SurdForm make_surd_form(const RawSurdPi& raw);

Real synthesize(const SurdForm& f, mpfr_prec_t prec);
Real synthesize(const LogSurdForm& f, mpfr_prec_t prec);
Real synthesize_raw_surd(const RawSurdPi& f, mpfr_prec_t prec);

/// Paper-style rendering: "4 (-12 + 5 sqrt(6)) pi",
/// "-pi (ln(9) - 2 ln(10 + sqrt(91)))", "8/3 pi", "0".
std::string to_string(const SurdForm& f);
std::string to_string(const LogSurdForm& f);
std::string conj10_string(unsigned m, const Int& a, const Int& b);

}  // namespace quadsurd::recognition
