#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubiclat/cubic_order.hpp"

namespace cubiclat {

// Index ranges for the candidate families come in two variants that do not
// coincide (shanks, ennola); both are first-class and reported separately.
enum class RangeMode { lemma, theorem };

std::string range_mode_name(RangeMode m);
RangeMode range_mode_from_name(const std::string& name);

// One candidate indecomposable together with its defining indices.
// v is -1 for the single-index families (ennola, family3).
struct Candidate {
    long v;
    long w;
    OrderElement element;
};

// element formula per family:
//   shanks  : (-v, -w, v+1)
//   ennola  : (1, w, 1)
//   family3 : (-1, (a+2)w+1, -w)
OrderElement candidate_element(const CubicOrder& order, long v, long w);

// index sweep per family and range mode, in (v, w) lexicographic order:
//   shanks  lemma   : 0 <= v <= a,               v(a+2)+1 <= w <= (a+1)(v+1)
//   shanks  theorem : 0 <= v <= floor((a-1)/3),  v(a+3)+1 <= w <= a(v+1)
//   ennola  lemma   : 1 <= w <= a-1
//   ennola  theorem : 3 <= w <= a-1
//   family3 both    : a <= w <= 2a-1
std::vector<Candidate> candidates(const CubicOrder& order, RangeMode mode);

// counting constant a' used by the rank bounds: (a+1)(a+2)/2 for shanks, a
// for ennola and family3.  For ennola this deliberately differs from the
// enumerated candidate count (a-1 in lemma range); both are exposed.
mpz_class aprime(Family family, long a);

struct PositivityReport {
    std::vector<char> totally_positive;  // parallel to the input list
    long pass_count = 0;
    long fail_count = 0;
    bool all_pass = true;
};

PositivityReport verify_total_positivity(const CubicOrder& order,
                                         const std::vector<Candidate>& cands);

// h is the numerator of delta = h(rho)/f'(rho); a certificate for alpha
// witnesses delta totally positive with Tr(alpha * delta) = target.
struct Certificate {
    OrderElement h;
    long target;
};

// Exhaustive scan of h in [-coeff_bound, coeff_bound]^3, returning the first
// hit in lexicographic coordinate order.  Absence in the box is not a
// disproof.  The scan solves the linear pairing constraint for the last
// coordinate, which visits exactly the hits of the cubic box in the same
// order.
std::optional<Certificate> find_certificate(const CubicOrder& order, const OrderElement& alpha,
                                            long target, long coeff_bound);

// Re-check both certificate invariants through the symmetric-function trace
// route, independent of the coefficient-extraction shortcut used in search.
bool verify_certificate(const CubicOrder& order, const OrderElement& alpha,
                        const Certificate& cert);

// All totally positive beta with alpha - beta also totally positive.  Sound
// and complete: coordinate ranges come from outward-rounded interval
// enclosures, membership is decided exactly.
std::vector<OrderElement> enumerate_dominated(const CubicOrder& order, const OrderElement& alpha);

// true iff no totally positive beta has alpha - beta totally positive
bool is_indecomposable(const CubicOrder& order, const OrderElement& alpha);

} // namespace cubiclat
