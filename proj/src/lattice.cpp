#include "cubiclat/lattice.hpp"

#include <algorithm>
#include <limits>

#include <mpfr.h>

namespace cubiclat {

GramMatrix::GramMatrix(long rank, std::vector<mpz_class> entries)
    : rank_(rank), e_(std::move(entries)) {
    if (rank < 1) throw parameter_error("GramMatrix: rank must be >= 1");
    if (e_.size() != std::size_t(rank) * std::size_t(rank))
        throw parameter_error("GramMatrix: entry count does not match rank");
    for (long i = 0; i < rank; ++i)
        for (long j = i + 1; j < rank; ++j)
            if (e_[i * rank + j] != e_[j * rank + i])
                throw parameter_error("GramMatrix: matrix is not symmetric");
}

bool GramMatrix::is_positive_definite() const {
    // symmetric Gaussian elimination; pivots are ratios of leading principal
    // minors, so the matrix is positive definite iff every pivot is positive
    const long r = rank_;
    std::vector<mpq_class> m(e_.begin(), e_.end());
    for (long i = 0; i < r; ++i) {
        mpq_class piv = m[i * r + i];
        if (sgn(piv) <= 0) return false;
        for (long j = i + 1; j < r; ++j) {
            mpq_class f = m[i * r + j] / piv;
            for (long k = j; k < r; ++k) m[j * r + k] -= f * m[i * r + k];
        }
    }
    return true;
}

mpz_class GramMatrix::det() const {
    const long r = rank_;
    std::vector<mpz_class> m(e_);
    mpz_class prev(1);
    int sign = 1;
    for (long i = 0; i < r - 1; ++i) {
        if (m[i * r + i] == 0) {
            long p = -1;
            for (long j = i + 1; j < r; ++j)
                if (m[j * r + i] != 0) {
                    p = j;
                    break;
                }
            if (p < 0) return 0;
            for (long k = 0; k < r; ++k) std::swap(m[i * r + k], m[p * r + k]);
            sign = -sign;
        }
        for (long j = i + 1; j < r; ++j)
            for (long k = i + 1; k < r; ++k) {
                m[j * r + k] = m[j * r + k] * m[i * r + i] - m[j * r + i] * m[i * r + k];
                mpz_divexact(m[j * r + k].get_mpz_t(), m[j * r + k].get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = m[i * r + i];
    }
    return sign > 0 ? m[(r - 1) * r + (r - 1)] : -m[(r - 1) * r + (r - 1)];
}

namespace {

mpz_class ceil_q(const mpq_class& q) {
    mpz_class num = q.get_num(), den = q.get_den(), c;
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return c;
}

struct FPState {
    long r;
    std::vector<mpq_class> d;  // pivots of G = U^T D U
    std::vector<mpq_class> U;  // unit upper triangular, row-major
    bool list_mode;
    mpz_class count;
    std::vector<std::vector<mpz_class>> vectors;
    std::vector<mpz_class> v;
};

void fp_emit(FPState& st) {
    st.count += 2;
    if (!st.list_mode) return;
    std::vector<mpz_class> a(st.v), b(st.v.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = -st.v[i];
    st.vectors.push_back(std::move(a));
    st.vectors.push_back(std::move(b));
}

// enumerate coordinate i given the unused quadratic budget; all_zero means
// every coordinate above i is zero, in which case only v_i >= 0 is visited
// and each completed vector stands for a +-pair
void fp_level(FPState& st, long i, const mpq_class& remaining, bool all_zero) {
    if (i < 0) {
        if (!all_zero && remaining == 0) fp_emit(st);
        return;
    }
    mpq_class c(0);
    for (long j = i + 1; j < st.r; ++j)
        if (st.v[j] != 0) c += st.U[i * st.r + j] * st.v[j];

    auto used = [&](const mpz_class& vi) {
        mpq_class t = vi + c;
        return mpq_class(st.d[i] * t * t);
    };

    mpz_class start = ceil_q(-c);  // smallest integer >= -c
    if (all_zero) start = 0;       // c == 0 here; forward walk only
    for (mpz_class vi = start;; ++vi) {
        mpq_class u = used(vi);
        if (u > remaining) break;
        st.v[i] = vi;
        fp_level(st, i - 1, remaining - u, all_zero && vi == 0);
    }
    if (!all_zero) {
        for (mpz_class vi = start - 1;; --vi) {
            mpq_class u = used(vi);
            if (u > remaining) break;
            st.v[i] = vi;
            fp_level(st, i - 1, remaining - u, false);
        }
    }
    st.v[i] = 0;
}

} // namespace

ShortVectorResult count_short_vectors(const GramMatrix& G, long n, bool list_mode) {
    if (n < 1) throw parameter_error("count_short_vectors: n must be >= 1");
    const long r = G.rank();

    // rational LDL: G = U^T D U with U unit upper triangular
    FPState st;
    st.r = r;
    st.d.assign(r, 0);
    st.U.assign(std::size_t(r) * r, 0);
    {
        std::vector<mpq_class> m(std::size_t(r) * r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) m[i * r + j] = G.at(i, j);
        for (long i = 0; i < r; ++i) {
            mpq_class piv = m[i * r + i];
            if (sgn(piv) <= 0)
                throw definiteness_error("count_short_vectors: matrix is not positive definite");
            st.d[i] = piv;
            st.U[i * r + i] = 1;
            for (long j = i + 1; j < r; ++j) st.U[i * r + j] = m[i * r + j] / piv;
            for (long j = i + 1; j < r; ++j) {
                mpq_class f = st.U[i * r + j];
                for (long k = j; k < r; ++k) m[j * r + k] -= f * m[i * r + k];
            }
        }
    }

    st.list_mode = list_mode;
    st.count = 0;
    st.v.assign(r, 0);
    fp_level(st, r - 1, mpq_class(n), true);
    return {std::move(st.count), std::move(st.vectors)};
}

namespace {

// one addend of the n >= 3 formula: q * pi^pi_pow * (sqrt(n) if has_sqrt_n)
// / (sqrt(det) if over_sqrt_det), with exact rational q
struct BoundTerm {
    mpq_class q;
    long pi_pow;
    bool has_sqrt_n;
    bool over_sqrt_det;
};

mpq_class mpfr_to_mpq(const mpfr_t x) {
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

mpq_class eval_terms(const std::vector<BoundTerm>& terms, long n, const mpq_class& det,
                     long bits, mpfr_rnd_t rnd, mpfr_rnd_t opp) {
    mpfr_t pi, sqn, sqd, t, p, acc;
    mpfr_inits2(bits, pi, sqn, sqd, t, p, acc, (mpfr_ptr)0);
    mpfr_const_pi(pi, rnd);
    mpfr_set_si(sqn, n, rnd);
    mpfr_sqrt(sqn, sqn, rnd);
    // divisor: round the opposite way so the quotient rounds toward rnd
    mpfr_set_q(sqd, det.get_mpq_t(), opp);
    mpfr_sqrt(sqd, sqd, opp);
    mpfr_set_ui(acc, 0, rnd);
    for (const BoundTerm& term : terms) {
        mpfr_set_q(t, term.q.get_mpq_t(), rnd);
        if (term.pi_pow > 0) {
            mpfr_pow_ui(p, pi, static_cast<unsigned long>(term.pi_pow), rnd);
            mpfr_mul(t, t, p, rnd);
        }
        if (term.has_sqrt_n) mpfr_mul(t, t, sqn, rnd);
        if (term.over_sqrt_det) mpfr_div(t, t, sqd, rnd);
        mpfr_add(acc, acc, t, rnd);
    }
    mpq_class out = mpfr_to_mpq(acc);
    mpfr_clears(pi, sqn, sqd, t, p, acc, (mpfr_ptr)0);
    return out;
}

} // namespace

BoundValue bound_C(long r, long n, const mpq_class& det, long precision_bits) {
    if (r < 1) throw parameter_error("bound_C: r must be >= 1");
    if (n < 1) throw parameter_error("bound_C: n must be >= 1");
    if (det < 1) throw parameter_error("bound_C: det must be >= 1");
    if (precision_bits < 16 || precision_bits > (1L << 22))
        throw parameter_error("bound_C: precision_bits out of range");

    BoundValue out;
    out.r = r;
    out.n = n;
    out.det_used = det;
    if (n == 1) {
        out.lo = out.hi = 2 * mpz_class(r);
        out.exact = true;
        return out;
    }
    if (n == 2) {
        mpz_class v = 2 * mpz_class(r) * (r - 1);
        if (v < 480) v = 480;
        out.lo = out.hi = v;
        out.exact = true;
        return out;
    }

    // Gamma at integer and half-integer arguments is exact:
    //   pi^{m/2}/Gamma(m/2+1) = pi^j / j!                          (m = 2j)
    //                         = pi^j sqrt(pi) * 4^{j+1}(j+1)!/(2j+2)! / sqrt(pi)
    //                         = pi^j * 4^{j+1}(j+1)!/(2j+2)!       (m = 2j+1)
    // so every addend is rational * pi^j, times sqrt(n) when m is odd.
    std::vector<BoundTerm> terms;
    mpz_class nz(n);
    auto n_pow = [&](long j) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(j));
        return p;
    };
    auto factorial = [](long m) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        return f;
    };
    auto binom = [&](long top, long bot) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top),
                     static_cast<unsigned long>(bot));
        return b;
    };
    auto half_gamma_coeff = [&](long j) {
        // 4^{j+1} (j+1)! / (2j+2)!
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j + 1));
        mpq_class q(four_pow * factorial(j + 1), factorial(2 * j + 2));
        q.canonicalize();
        return q;
    };

    for (long m = 0; m < r; ++m) {
        if (m % 2 == 0) {
            long j = m / 2;
            mpq_class q(binom(r, m) * n_pow(j), factorial(j));
            q.canonicalize();
            terms.push_back({q, j, false, false});
        } else {
            long j = (m - 1) / 2;
            mpq_class q = mpq_class(binom(r, m) * n_pow(j)) * half_gamma_coeff(j);
            terms.push_back({q, j, true, false});
        }
    }
    if (r % 2 == 0) {
        long j = r / 2;
        mpq_class q(n_pow(j), factorial(j));
        q.canonicalize();
        terms.push_back({q, j, false, true});
    } else {
        long j = (r - 1) / 2;
        mpq_class q = mpq_class(n_pow(j)) * half_gamma_coeff(j);
        terms.push_back({q, j, true, true});
    }

    out.lo = eval_terms(terms, n, det, precision_bits, MPFR_RNDD, MPFR_RNDU);
    out.hi = eval_terms(terms, n, det, precision_bits, MPFR_RNDU, MPFR_RNDD);
    out.exact = false;
    return out;
}

BoundValue bound_B1(long R, long n, long precision_bits) {
    if (R < 1) throw parameter_error("bound_B1: R must be >= 1");
    BoundValue b = bound_C(3 * R, n, 1, precision_bits);
    b.lo /= 2;
    b.hi /= 2;
    return b;
}

BoundValue bound_B2(long R, long n, long precision_bits) {
    if (R < 1) throw parameter_error("bound_B2: R must be >= 1");
    if (n > (std::numeric_limits<long>::max)() / 2)
        throw parameter_error("bound_B2: n too large");
    BoundValue b = bound_C(3 * R, 2 * n, 1, precision_bits);
    b.lo /= 2;
    b.hi /= 2;
    return b;
}

bool verify_count_bound(const GramMatrix& G, long n) {
    mpz_class count = count_short_vectors(G, n, false).count;
    mpq_class det(G.det());
    for (long bits = 128; bits <= (1L << 15); bits *= 2) {
        BoundValue b = bound_C(G.rank(), n, det, bits);
        if (count <= b.lo) return true;
        if (count > b.hi) return false;
    }
    // count lies inside the enclosure at every precision; cannot happen for
    // n >= 3 (the bound is irrational) and n <= 2 is exact
    throw internal_error("verify_count_bound: comparison undecided");
}

OKGramMatrix::OKGramMatrix(CubicOrder order, long rank, std::vector<OrderElement> entries)
    : order_(std::move(order)), rank_(rank), e_(std::move(entries)) {
    if (rank < 1) throw parameter_error("OKGramMatrix: rank must be >= 1");
    if (e_.size() != std::size_t(rank) * std::size_t(rank))
        throw parameter_error("OKGramMatrix: entry count does not match rank");
    for (long i = 0; i < rank; ++i)
        for (long j = i + 1; j < rank; ++j)
            if (!(e_[i * rank + j] == e_[j * rank + i]))
                throw parameter_error("OKGramMatrix: matrix is not symmetric");
}

bool OKGramMatrix::has_totally_positive_diagonal() const {
    for (long i = 0; i < rank_; ++i)
        if (!order_.is_totally_positive(e_[i * rank_ + i])) return false;
    return true;
}

TraceTransferResult trace_transfer(const OKGramMatrix& L, const OrderElement& h) {
    const CubicOrder& ord = L.order();
    const long R = L.rank();
    std::array<OrderElement, 5> rho_pow;
    rho_pow[0] = {1, 0, 0};
    rho_pow[1] = {0, 1, 0};
    rho_pow[2] = {0, 0, 1};
    rho_pow[3] = ord.mul(rho_pow[2], rho_pow[1]);
    rho_pow[4] = ord.mul(rho_pow[2], rho_pow[2]);

    const long m = 3 * R;
    std::vector<mpz_class> g(std::size_t(m) * m);
    for (long s = 0; s < R; ++s)
        for (long sp = 0; sp < R; ++sp) {
            const OrderElement& B = L.at(s, sp);
            for (int t = 0; t < 3; ++t)
                for (int tp = 0; tp < 3; ++tp) {
                    OrderElement prod = ord.mul(B, rho_pow[t + tp]);
                    g[(3 * s + t) * m + (3 * sp + tp)] = ord.dual_trace_pairing(prod, h);
                }
        }
    GramMatrix gram(m, std::move(g));
    bool dtp = ord.is_dual_totally_positive(h);
    bool pd = gram.is_positive_definite();
    return {std::move(gram), dtp, pd};
}

} // namespace cubiclat
