#pragma once

#include <vector>

#include "cubiclat/cubic_order.hpp"

namespace cubiclat {

// Symmetric integer Gram matrix of a classical Z-lattice.  Symmetry is
// enforced at construction; positive definiteness is checked exactly where an
// operation needs it (counting), since useful non-definite instances exist
// (e.g. trace transfers of non-positive pairings).
class GramMatrix {
public:
    GramMatrix(long rank, std::vector<mpz_class> entries);  // row-major

    long rank() const { return rank_; }
    const mpz_class& at(long i, long j) const { return e_[i * rank_ + j]; }

    // exact test: all pivots of the rational LDL decomposition positive
    bool is_positive_definite() const;

    // exact determinant (Bareiss fraction-free elimination)
    mpz_class det() const;

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
        return a.rank_ == b.rank_ && a.e_ == b.e_;
    }

private:
    long rank_;
    std::vector<mpz_class> e_;
};

struct ShortVectorResult {
    mpz_class count;
    // filled in list mode; each +-pair adjacent, deterministic order
    std::vector<std::vector<mpz_class>> vectors;
};

// exact number of integer vectors v != 0 with v^T G v = n, by depth-first
// enumeration over the rational LDL decomposition (no square roots)
ShortVectorResult count_short_vectors(const GramMatrix& G, long n, bool list_mode);

// Certified enclosure of the short-vector bound
//   C(r,n) = 2r                      if n = 1
//          = max{480, 2r(r-1)}       if n = 2
//          = pi^{r/2}/Gamma(r/2+1) * n^{r/2}/sqrt(det)
//            + sum_{m=0}^{r-1} binom(r,m) pi^{m/2}/Gamma(m/2+1) n^{m/2}
//                                   if n >= 3
// hi is a guaranteed upper bound on the exact value, lo a guaranteed lower
// bound; for n in {1,2} the value is an exact integer and lo == hi.
struct BoundValue {
    mpq_class lo, hi;
    bool exact;
    long r, n;
    mpq_class det_used;
};

BoundValue bound_C(long r, long n, const mpq_class& det = 1, long precision_bits = 128);

// B1(R,n) = C(3R,n)/2 and B2(R,n) = C(3R,2n)/2, determinant taken as 1
BoundValue bound_B1(long R, long n, long precision_bits = 128);
BoundValue bound_B2(long R, long n, long precision_bits = 128);

// true iff count_short_vectors(G,n) <= C(rank, n, det(G)); decided by
// escalating the enclosure precision until one side is certain
bool verify_count_bound(const GramMatrix& G, long n);

// Symmetric Gram matrix with entries in Z[rho]: a classical O_K-lattice.
// A totally positive diagonal is necessary for total positive definiteness
// and is reported, not enforced, so counterexample instances can be built.
class OKGramMatrix {
public:
    OKGramMatrix(CubicOrder order, long rank, std::vector<OrderElement> entries);

    const CubicOrder& order() const { return order_; }
    long rank() const { return rank_; }
    const OrderElement& at(long i, long j) const { return e_[i * rank_ + j]; }

    bool has_totally_positive_diagonal() const;

private:
    CubicOrder order_;
    long rank_;
    std::vector<OrderElement> e_;
};

struct TraceTransferResult {
    GramMatrix gram;  // rank 3R, exact integer entries
    bool delta_totally_positive;
    bool positive_definite;
};

// The Z-lattice of rank 3R with entries Tr(delta * B_{ss'} rho^{t+t'}) for
// delta = h(rho)/f'(rho); integral by the dual-basis identity.  When delta is
// totally positive the result is positive definite iff the O_K-lattice is
// totally positive definite.  (Without that anchor the equivalence can fail:
// negative embeddings of delta and of the entries may compensate.)  Both
// reported flags are computed independently and exactly.
TraceTransferResult trace_transfer(const OKGramMatrix& L, const OrderElement& h);

} // namespace cubiclat
