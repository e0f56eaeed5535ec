#pragma once

#include "cubiclat/indecomposables.hpp"
#include "cubiclat/lattice.hpp"

namespace cubiclat {

// A kO_K-universality rank query.  Non-classical lattices reduce to the
// classical case with the multiplier doubled ((lattice, 2Q) is classical and
// 2kO_K-universal), so k_eff = k for classical queries and 2k otherwise.
struct RankBoundQuery {
    Family family;
    long a = 7;
    long k = 1;
    bool classical = true;
};

// Smallest rank not excluded by the short-vector count: returns R0 + 1 where
// R0 = max{R >= 1 : Bound(R, k_eff) <= a'} (0 when no R qualifies), with
// Bound = B1 for shanks and B2 for the other two families.  Every
// kO_K-universal classical lattice has rank >= the returned value.
mpz_class rank_lower_bound(const RankBoundQuery& q, long precision_bits = 128);

// #{7 <= a <= X : a'(family, a) <= B}, by direct evaluation
mpz_class density_count(Family family, long X, const mpq_class& B);

enum class LemmaVerdict { pass, fail, precondition_not_satisfied };

std::string lemma_verdict_name(LemmaVerdict v);

// Counting check: when the precondition on X holds, the density count must
// stay below sqrt(2X) (shanks) or sqrt(X) (ennola, family3); the irrational
// comparison is decided by exact integer squaring.
struct CountingLemmaReport {
    LemmaVerdict verdict;
    bool precondition_ok;
    mpz_class count;
    mpq_class threshold_sq;  // 2X or X: verdict compares count^2 against this
};

CountingLemmaReport verify_counting_lemma(Family family, long X, const mpq_class& B);

// Exceptional-set count at finite X: the a in [7, X] whose proven rank bound
// does not yet exceed a^{2-2eps}, compared against the budget
// sqrt(2) X^{1-eps} (shanks) or X^{1-eps} (ennola, family3).  The comparison
// is exact via integer powers; the budget enclosure is for display.
struct ExceptionalReport {
    mpz_class count;
    mpq_class budget_lo, budget_hi;
    bool pass;
};

ExceptionalReport exceptional_count(Family family, long X, const mpq_class& eps, long k,
                                    bool classical, long precision_bits = 128);

} // namespace cubiclat
