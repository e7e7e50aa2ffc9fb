#include "quadsurd/recognition.hpp"

#include <algorithm>
#include <sstream>

namespace quadsurd::recognition {

namespace {

Rat to_rat(const Real& x) {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x.raw());
    return q;
}

Real round_to_digits(const Real& x, unsigned digits) {
    Real r(static_cast<mpfr_prec_t>(digits * 3.322) + 4);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// Decimal digits of absolute accuracy claimed by a BigReal.
long accuracy_digits(const BigReal& x) {
    if (x.error_bound.is_zero()) return x.digits ? x.digits : 60;
    // error_bound = 2^e roughly; digits = -log10(bound)
    long e2 = x.error_bound.exp2();
    long d = static_cast<long>(-e2 * 0.30103);
    return d;
}

// --- LLL on the relation lattice -----------------------------------------
//
// Rows b_0..b_{n-1} of an n x (n+1) integer matrix, b_i = e_i + N x_i e_n.
// Gram-Schmidt runs in mpfr off exact integer dot products; dimensions here
// are at most 5, so everything is recomputed after each basis change.

struct Lattice {
    std::vector<std::vector<Int>> rows;
    mpfr_prec_t prec;

    unsigned dim() const { return static_cast<unsigned>(rows.size()); }

    Int dot(unsigned i, unsigned j) const {
        Int s = 0;
        for (size_t c = 0; c < rows[i].size(); ++c) s += rows[i][c] * rows[j][c];
        return s;
    }
};

struct GramSchmidt {
    std::vector<std::vector<Real>> mu;  // mu[i][j], j < i
    std::vector<Real> B;                // squared lengths of b*_i

    void compute(const Lattice& lat) {
        const unsigned n = lat.dim();
        mu.assign(n, std::vector<Real>(n));
        B.assign(n, Real(lat.prec));
        std::vector<std::vector<Real>> r(n, std::vector<Real>(n));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j <= i; ++j) {
                Real acc = Real::of(lat.dot(i, j), lat.prec);
                for (unsigned l = 0; l < j; ++l) acc = acc - mu[j][l] * r[i][l];
                r[i][j] = acc;
                if (j < i) mu[i][j] = r[i][j] / B[j];
            }
            B[i] = r[i][i];
        }
    }
};

void lll_reduce(Lattice& lat) {
    const unsigned n = lat.dim();
    if (n < 2) return;
    GramSchmidt gs;
    gs.compute(lat);
    const Real delta = Real::of(Rat(99, 100), lat.prec);
    const Real half = Real::of(Rat(1, 2), lat.prec);

    auto size_reduce = [&](unsigned i, unsigned j) {
        if (!(abs(gs.mu[i][j]) > half)) return false;
        Int q = gs.mu[i][j].round_to_int();
        for (size_t c = 0; c < lat.rows[i].size(); ++c)
            lat.rows[i][c] -= q * lat.rows[j][c];
        gs.compute(lat);
        return true;
    };

    unsigned k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) break;  // desk-scale lattices never get close
        size_reduce(k, k - 1);
        Real lhs = gs.B[k];
        Real rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1];
        if (lhs < rhs) {
            std::swap(lat.rows[k], lat.rows[k - 1]);
            gs.compute(lat);
            k = k > 1 ? k - 1 : 1;
        } else {
            for (int j = static_cast<int>(k) - 2; j >= 0; --j)
                size_reduce(k, static_cast<unsigned>(j));
            ++k;
        }
    }
}

Real residual_at(const std::vector<Real>& xs, const std::vector<Int>& coeffs,
                 mpfr_prec_t prec) {
    Real acc = Real::of(0L, prec);
    for (size_t i = 0; i < xs.size(); ++i) acc = acc + Real::of(coeffs[i], prec) * xs[i];
    return abs(acc);
}

}  // namespace

Rat rational_reconstruct(const BigReal& x, const Int& max_den) {
    if (max_den < 1) throw std::domain_error("rational_reconstruct: max_den >= 1");
    if (!x.value.is_finite()) throw std::domain_error("rational_reconstruct: non-finite input");
    Rat v = to_rat(x.value);

    // Continued fraction of the exact dyadic value.
    Int p0 = 1, q0 = 0;  // h_{-1}
    Int p1, q1;          // current convergent
    Int num = v.get_num(), den = v.get_den();
    bool first = true;
    Rat best;
    bool have = false;
    while (den != 0) {
        Int a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Int p = first ? a : a * p1 + p0;
        Int q = first ? Int(1) : a * q1 + q0;
        if (!first) {
            p0 = p1;
            q0 = q1;
        }
        p1 = p;
        q1 = q;
        first = false;
        if (q1 > max_den) break;
        best = Rat(p1, q1);
        best.canonicalize();
        have = true;
        num = den;
        den = r;
    }
    if (!have) throw RecognitionError("rational_reconstruct: no convergent within max_den");

    Real tol = 10 * x.error_bound + 10 * ulp(x.value);
    Real diff = abs(x.value - Real::of(best, x.value.prec()));
    if (diff > tol)
        throw RecognitionError("rational_reconstruct: nearest fraction misses by " +
                               diff.str(5));
    return best;
}

std::optional<IntegerRelation> integer_relation(const std::vector<BigReal>& xs,
                                                const Int& height_bound,
                                                const PrecisionContext& ctx) {
    const unsigned n = static_cast<unsigned>(xs.size());
    if (n < 2 || n > 4)
        throw std::domain_error("integer_relation: 2 to 4 inputs supported");

    long acc_min = accuracy_digits(xs[0]);
    for (const auto& x : xs) acc_min = std::min(acc_min, accuracy_digits(x));
    if (acc_min < 38)
        throw std::domain_error("integer_relation: inputs carry fewer than ~40 digits");

    const long scale_digits = std::min<long>(acc_min - 8, ctx.digits - 8);
    const mpfr_prec_t prec = ctx.bits() + 128;

    Lattice lat;
    lat.prec = prec;
    Real scale = Real::pow10(scale_digits, prec);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Int> row(n + 1, Int(0));
        row[i] = 1;
        row[n] = (scale * xs[i].value).round_to_int();
        lat.rows.push_back(std::move(row));
    }
    lll_reduce(lat);

    std::vector<Real> full(n), rounded(n);
    for (unsigned i = 0; i < n; ++i) {
        full[i] = xs[i].value;
        rounded[i] = round_to_digits(xs[i].value, static_cast<unsigned>(acc_min - 20));
    }

    const Real accept = Real::pow10(-30);
    const Real noise_floor = Real::pow10(-(acc_min - 10));
    const Real improvement = Real::pow10(15);

    std::optional<IntegerRelation> best;
    Int best_height = 0;
    for (const auto& row : lat.rows) {
        std::vector<Int> coeffs(row.begin(), row.begin() + n);
        Int g = 0;
        for (const Int& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 0) continue;  // all-zero coefficient block
        for (Int& c : coeffs) c /= g;
        Int height = 0;
        for (const Int& c : coeffs)
            if (abs(c) > height) height = abs(c);
        if (height > height_bound) continue;

        Real r_full = residual_at(full, coeffs, prec);
        if (r_full >= accept) continue;
        Real r_low = residual_at(rounded, coeffs, prec);
        if (!(r_full <= noise_floor) && !(r_low >= r_full * improvement))
            continue;  // near-relation: no gain from the extra 20 digits

        if (!best || height < best_height) {
            for (const Int& c : coeffs) {
                if (c == 0) continue;
                if (c < 0)
                    for (Int& cc : coeffs) cc = -cc;
                break;
            }
            best = IntegerRelation{coeffs, n, BigReal{r_full, r_full, ctx.digits}};
            best_height = height;
        }
    }
    return best;
}

RawSurdPi recognize_surd_pi(const BigReal& v, const std::vector<Int>& d_candidates,
                            const PrecisionContext& ctx) {
    if (!(v.error_bound < Real::pow10(-45)))
        throw std::domain_error("recognize_surd_pi: error bound must be below 1e-45");

    if (abs(v.value) <= 10 * v.error_bound) return RawSurdPi{Rat(0), Rat(0), Int(1)};

    std::vector<Int> cands = d_candidates;
    if (cands.empty()) {
        for (long j = 1; j <= 200; ++j) cands.push_back(numbers::a007913(j));
        for (unsigned m = 1; m <= 40; ++m) cands.push_back(numbers::a083481(m));
    }
    // squarefree-core and dedupe, preserving first-seen order (hints first)
    std::vector<Int> ds;
    for (const Int& d : cands) {
        Int core = d <= 1 ? Int(1) : numbers::a007913(d);
        if (std::find(ds.begin(), ds.end(), core) == ds.end()) ds.push_back(core);
    }

    const mpfr_prec_t prec = v.value.prec();
    Real pi = Real::pi(prec);
    BigReal x = div_exact(v, pi);
    BigReal one = exact_bigreal(Real::of(1L, prec), v.digits);
    const Int bound("1000000000000000000000000000000");  // default height 1e30

    // Rational multiples of pi (c = 0) are a continued-fraction job, and
    // d = 1 would only hand the lattice the degenerate 1 - sqrt(1) relation.
    try {
        Rat b = rational_reconstruct(x, Int(1000000));
        RawSurdPi out{b, Rat(0), Int(1)};
        Real synth = synthesize_raw_surd(out, prec);
        if (abs(synth - v.value) <= 100 * v.error_bound + 100 * ulp(v.value)) return out;
    } catch (const RecognitionError&) {
    }

    for (const Int& d : ds) {
        if (d == 1) continue;
        BigReal sd = exact_bigreal(sqrt(Real::of(d, prec)), v.digits);
        auto rel = integer_relation({one, sd, x}, bound, ctx);
        if (!rel) continue;
        const Int& p = rel->coefficients[0];
        const Int& q = rel->coefficients[1];
        const Int& r = rel->coefficients[2];
        if (r == 0 || q == 0) continue;
        Rat b(-p, r), c(-q, r);
        b.canonicalize();
        c.canonicalize();
        RawSurdPi out{b, c, d};
        Real synth = synthesize_raw_surd(out, prec);
        if (abs(synth - v.value) <= 100 * v.error_bound + 100 * ulp(v.value)) return out;
    }
    throw RecognitionError("recognize_surd_pi: no candidate d admits a relation");
}

LogSurdForm recognize_log_surd(const BigReal& v, const PrecisionContext& ctx) {
    if (v.value.sgn() <= 0) throw std::domain_error("recognize_log_surd: V must be positive");
    if (!(v.error_bound < Real::pow10(-45)))
        throw std::domain_error("recognize_log_surd: error bound must be below 1e-45");

    const mpfr_prec_t prec = v.value.prec();
    Real two_pi = 2 * Real::pi(prec);
    BigReal e1 = exp(div_exact(v, two_pi));
    BigReal e2 = mul_exact(e1, e1.value);
    e2.error_bound = e2.error_bound + e1.error_bound * abs(e1.value);
    BigReal one = exact_bigreal(Real::of(1L, prec), v.digits);

    const Int bound("1000000000000000000000000000000");  // 1e30
    auto rel = integer_relation({one, e1, e2}, bound, ctx);
    if (!rel)
        throw RecognitionError("recognize_log_surd: exp(V/2pi) is not a quadratic irrational "
                               "within bounds");
    Int r = rel->coefficients[0], q = rel->coefficients[1], p = rel->coefficients[2];
    if (p == 0)
        throw RecognitionError("recognize_log_surd: degenerate (linear) relation");
    if (p < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int disc = q * q - 4 * p * r;
    if (disc < 0) throw RecognitionError("recognize_log_surd: negative discriminant");

    Int s, dd;
    if (disc == 0) {
        s = 0;
        dd = 1;
    } else {
        auto sq = numbers::squarefree_decompose(disc);
        s = sq.s;
        dd = sq.d;
    }
    Int b = -q, c = s, a = 2 * p;
    Int g = 0;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g > 1) {
        b /= g;
        c /= g;
        a /= g;
    }
    LogSurdForm out{a, b, c, dd};

    Real rt = abs(synthesize(out, prec) - v.value);
    if (rt > Real::pow10(-35))
        throw RecognitionError("recognize_log_surd: round-trip residual " + rt.str(5));
    return out;
}

std::pair<Int, Int> recognize_conj10(const BigReal& v, unsigned m, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("recognize_conj10: m >= 1");
    const mpfr_prec_t prec = v.value.prec();
    Real two_pi = 2 * Real::pi(prec);
    BigReal e = exp(div_exact(v, two_pi));
    Real s2 = sqrt(Real::of(2L, prec));
    Real base = 2 * static_cast<long>(m) + s2;

    Real w = e.value - 1 - s2 * (2 * static_cast<long>(m));
    Real r = w * w / base;
    // d(r)/d(e) = 2w/base
    Real err = e.error_bound * 2 * abs(w) / base + 100 * ulp(r);
    BigReal rr{r, err, v.digits};

    Rat ratio = rational_reconstruct(rr, Int(1000000));
    if (ratio.get_den() != 1 || ratio < 1)
        throw RecognitionError("recognize_conj10: (E - 1 - 2m sqrt2)^2/(2m + sqrt2) "
                               "is not a positive integer");
    auto sq = numbers::squarefree_decompose(ratio.get_num());
    (void)ctx;
    return {sq.s, sq.d};
}

FactoredPair factor_max_integer(const Rat& b_in, const Rat& c_in) {
    Rat b_raw = b_in, c_raw = c_in;
    b_raw.canonicalize();
    c_raw.canonicalize();
    if (b_raw == 0 && c_raw == 0)
        throw std::domain_error("factor_max_integer: (0, 0) has no factored form");
    Int lb = b_raw.get_den(), lc = c_raw.get_den();
    Int l;
    mpz_lcm(l.get_mpz_t(), lb.get_mpz_t(), lc.get_mpz_t());
    Int nb = b_raw.get_num() * (l / lb);
    Int nc = c_raw.get_num() * (l / lc);
    Int g;
    mpz_gcd(g.get_mpz_t(), nb.get_mpz_t(), nc.get_mpz_t());
    Rat a(g, l);
    a.canonicalize();
    return FactoredPair{a, nb / g, nc / g};
}

SurdForm make_surd_form(const RawSurdPi& raw) {
    if (raw.b == 0 && raw.c == 0) return SurdForm{Rat(1), Int(0), Int(0), Int(1)};
    Rat b = raw.b, c = raw.c;
    Int d = raw.d;
    if (d == 1) {  // sqrt(1) folds into the rational part
        b += c;
        c = 0;
    }
    if (c == 0) {
        if (b == 0) return SurdForm{Rat(1), Int(0), Int(0), Int(1)};
        d = 1;
    }
    auto f = factor_max_integer(b, c);
    return SurdForm{f.a, f.b, f.c, d};
}

Real synthesize(const SurdForm& f, mpfr_prec_t prec) {
    Real sd = sqrt(Real::of(f.d, prec));
    return Real::of(f.a, prec) * (Real::of(f.b, prec) + Real::of(f.c, prec) * sd) *
           Real::pi(prec);
}

Real synthesize(const LogSurdForm& f, mpfr_prec_t prec) {
    Real sd = sqrt(Real::of(f.d, prec));
    Real e = (Real::of(f.b, prec) + Real::of(f.c, prec) * sd) / Real::of(f.a, prec);
    return 2 * Real::pi(prec) * log(e);
}

Real synthesize_raw_surd(const RawSurdPi& f, mpfr_prec_t prec) {
    Real sd = sqrt(Real::of(f.d, prec));
    return (Real::of(f.b, prec) + Real::of(f.c, prec) * sd) * Real::pi(prec);
}

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string surd_term(const Int& c_abs, const Int& d) {
    std::string s = "sqrt(" + int_str(d) + ")";
    if (c_abs != 1) s = int_str(c_abs) + " " + s;
    return s;
}

}  // namespace

std::string to_string(const SurdForm& f) {
    if (f.b == 0 && f.c == 0) return "0";
    if (f.c == 0) {
        Rat q = f.a * Rat(f.b);
        q.canonicalize();
        return rat_str(q) + " pi";
    }
    std::ostringstream os;
    if (f.a != 1) os << rat_str(f.a) << " ";
    os << "(" << int_str(f.b) << (f.c > 0 ? " + " : " - ") << surd_term(abs(f.c), f.d)
       << ") pi";
    return os.str();
}

std::string to_string(const LogSurdForm& f) {
    std::ostringstream os;
    os << "-pi (ln(" << int_str(f.a * f.a) << ") - 2 ln(" << int_str(f.b);
    if (f.c != 0) os << " + " << surd_term(abs(f.c), f.d);
    os << "))";
    return os.str();
}

std::string conj10_string(unsigned m, const Int& a, const Int& b) {
    std::ostringstream os;
    os << "2 pi ln(1 + " << 2 * m << " sqrt(2) + " << int_str(a) << " sqrt(";
    if (b != 1) os << int_str(b) << " (" << 2 * m << " + sqrt(2))";
    else os << 2 * m << " + sqrt(2)";
    os << "))";
    return os.str();
}

}  // namespace quadsurd::recognition
