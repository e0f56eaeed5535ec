#include "cubiclat/bounds.hpp"

#include <mpfr.h>

namespace cubiclat {

namespace {

// certified comparison Bound(R) <= ap for the n >= 3 branch, escalating
// precision until the enclosure separates (equality cannot occur: the bound
// is an irrational multiple structure in pi)
bool half_C_leq(long R3, long n, const mpz_class& ap, long precision_bits) {
    for (long bits = precision_bits; bits <= (1L << 16); bits *= 2) {
        BoundValue b = bound_C(R3, n, 1, bits);
        mpq_class half_hi = b.hi / 2, half_lo = b.lo / 2;
        if (half_hi <= ap) return true;
        if (half_lo > ap) return false;
    }
    throw internal_error("rank bound comparison undecided at maximal precision");
}

// max{R >= 1 : Bound(R, n) <= ap}, 0 if none, where Bound(R,n) = C(3R,n)/2
mpz_class max_admissible_rank(long n, const mpz_class& ap, long precision_bits) {
    if (n == 1) {
        // Bound(R) = 3R
        mpz_class R0 = ap / 3;
        return R0;  // ap >= 7 so R0 >= 2
    }
    if (n == 2) {
        // Bound(R) = max{240, 3R(3R-1)}; below R = 6 the constant dominates
        if (ap < 240) return 0;
        // largest R with 9R^2 - 3R <= ap
        mpz_class disc = 9 + 36 * ap;
        mpz_class root = sqrt(disc);  // floor
        mpz_class R = (3 + root) / 18;
        while (9 * (R + 1) * (R + 1) - 3 * (R + 1) <= ap) ++R;
        while (R > 0 && 9 * R * R - 3 * R > ap) --R;
        return std::max(R, mpz_class(5));
    }
    // n >= 3: C(3R,n)/2 is strictly increasing in R; doubling then bisection
    if (!half_C_leq(3, n, ap, precision_bits)) return 0;
    mpz_class lo = 1, hi = 2;
    while (half_C_leq(hi.get_si() * 3, n, ap, precision_bits)) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) throw internal_error("rank bound search diverged");
    }
    // invariant: Bound(lo) <= ap < Bound(hi)
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (half_C_leq(mid.get_si() * 3, n, ap, precision_bits))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

mpz_class rank_lower_bound(const RankBoundQuery& q, long precision_bits) {
    if (q.a < 7) throw parameter_error("rank_lower_bound: a must be >= 7");
    if (q.k < 1) throw parameter_error("rank_lower_bound: k must be >= 1");
    if (precision_bits < 16 || precision_bits > (1L << 22))
        throw parameter_error("rank_lower_bound: precision_bits out of range");
    long k_eff = q.classical ? q.k : 2 * q.k;
    long n = q.family == Family::shanks ? k_eff : 2 * k_eff;
    mpz_class ap = aprime(q.family, q.a);
    return max_admissible_rank(n, ap, precision_bits) + 1;
}

mpz_class density_count(Family family, long X, const mpq_class& B) {
    if (X < 7) throw parameter_error("density_count: X must be >= 7");
    mpz_class count = 0;
    for (long a = 7; a <= X; ++a)
        if (aprime(family, a) <= B) ++count;
    return count;
}

std::string lemma_verdict_name(LemmaVerdict v) {
    switch (v) {
        case LemmaVerdict::pass: return "pass";
        case LemmaVerdict::fail: return "fail";
        case LemmaVerdict::precondition_not_satisfied: return "precondition_not_satisfied";
    }
    throw internal_error("lemma_verdict_name: bad enum value");
}

CountingLemmaReport verify_counting_lemma(Family family, long X, const mpq_class& B) {
    CountingLemmaReport rep;
    rep.count = density_count(family, X, B);
    mpq_class Xq(X);
    switch (family) {
        case Family::shanks:
            rep.precondition_ok = Xq > B && X > 7;
            rep.threshold_sq = 2 * Xq;
            break;
        case Family::ennola:
            rep.precondition_ok = Xq > B * B && X > 7;
            rep.threshold_sq = Xq;
            break;
        case Family::family3:
            rep.precondition_ok = Xq > B * B + 1 && X > 7;
            rep.threshold_sq = Xq;
            break;
    }
    if (!rep.precondition_ok)
        rep.verdict = LemmaVerdict::precondition_not_satisfied;
    else
        rep.verdict = mpq_class(rep.count) * rep.count < rep.threshold_sq ? LemmaVerdict::pass
                                                                          : LemmaVerdict::fail;
    return rep;
}

namespace {

mpq_class mpfr_to_mpq_local(const mpfr_t x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    if (e >= 0) {
        mpz_class num = m << static_cast<unsigned long>(e);
        return mpq_class(num);
    }
    mpz_class den = mpz_class(1) << static_cast<unsigned long>(-e);
    mpq_class q(m, den);
    q.canonicalize();
    return q;
}

// directed evaluation of (sqrt2 ? sqrt(2) : 1) * X^expo for positive X
mpq_class power_budget(long X, const mpq_class& expo, bool sqrt2, long bits, mpfr_rnd_t rnd) {
    mpfr_t lx, ex, out;
    mpfr_inits2(bits, lx, ex, out, (mpfr_ptr)0);
    mpfr_set_si(lx, X, rnd);
    mpfr_log(lx, lx, rnd);  // X >= 7 so log X > 0; rounding direction carries
    mpfr_set_q(ex, expo.get_mpq_t(), rnd);
    mpfr_mul(ex, ex, lx, rnd);
    mpfr_exp(out, ex, rnd);
    if (sqrt2) {
        mpfr_t s2;
        mpfr_init2(s2, bits);
        mpfr_sqrt_ui(s2, 2, rnd);
        mpfr_mul(out, out, s2, rnd);
        mpfr_clear(s2);
    }
    mpq_class q = mpfr_to_mpq_local(out);
    mpfr_clears(lx, ex, out, (mpfr_ptr)0);
    return q;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

} // namespace

ExceptionalReport exceptional_count(Family family, long X, const mpq_class& eps, long k,
                                    bool classical, long precision_bits) {
    if (!(eps > 0 && eps < 1))
        throw parameter_error("exceptional_count: eps must lie strictly between 0 and 1");
    if (eps.get_den() > 1000)
        throw parameter_error("exceptional_count: eps denominator too large for exact powering");
    if (X < 7) throw parameter_error("exceptional_count: X must be >= 7");
    if (k < 1) throw parameter_error("exceptional_count: k must be >= 1");

    // rank <= a^{2-2eps}  <=>  rank^qd <= a^pn, with 2-2eps = pn/qd reduced
    mpq_class expo = 2 - 2 * eps;
    mpz_class pn = expo.get_num(), qd = expo.get_den();

    ExceptionalReport rep;
    rep.count = 0;
    for (long a = 7; a <= X; ++a) {
        mpz_class R = rank_lower_bound({family, a, k, classical}, precision_bits);
        mpz_class lhs = pow_z(R, qd.get_ui());
        mpz_class rhs = pow_z(a, pn.get_ui());
        if (lhs <= rhs) ++rep.count;
    }

    // budget = sqrt(2) X^{1-eps} for shanks, X^{1-eps} otherwise
    mpq_class one_eps = 1 - eps;
    bool sqrt2 = family == Family::shanks;
    rep.budget_lo = power_budget(X, one_eps, sqrt2, precision_bits, MPFR_RNDD);
    rep.budget_hi = power_budget(X, one_eps, sqrt2, precision_bits, MPFR_RNDU);

    // exact verdict: count <= budget, after raising both sides to 2v (shanks,
    // clearing the sqrt(2)) or v (others), with 1-eps = u/v reduced
    mpz_class u = one_eps.get_num(), v = one_eps.get_den();
    if (sqrt2) {
        mpz_class lhs = pow_z(rep.count, 2 * v.get_ui());
        mpz_class rhs = pow_z(2, v.get_ui()) * pow_z(X, 2 * u.get_ui());
        rep.pass = lhs <= rhs;
    } else {
        rep.pass = pow_z(rep.count, v.get_ui()) <= pow_z(X, u.get_ui());
    }
    return rep;
}

} // namespace cubiclat
