#pragma once

#include <random>
#include <vector>

#include "cubiclat/lattice.hpp"

namespace cubiclat {

// Deterministic random instances for property checks.  mt19937_64 with raw
// modulo keeps the streams identical across platforms and standard libraries.

inline long corpus_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + long(rng() % std::uint64_t(hi - lo + 1));
}

// positive definite by construction: B^T B + I with small integer B
inline GramMatrix random_pd_gram(long rank, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<long> b(std::size_t(rank) * rank);
    for (auto& v : b) v = corpus_range(rng, -3, 3);
    std::vector<mpz_class> g(std::size_t(rank) * rank);
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) {
            mpz_class s = i == j ? 1 : 0;
            for (long k = 0; k < rank; ++k) s += mpz_class(b[k * rank + i]) * b[k * rank + j];
            g[i * rank + j] = s;
        }
    return GramMatrix(rank, std::move(g));
}

inline OrderElement random_element(std::mt19937_64& rng, long amp) {
    return {mpz_class(corpus_range(rng, -amp, amp)), mpz_class(corpus_range(rng, -amp, amp)),
            mpz_class(corpus_range(rng, -amp, amp))};
}

// A^T A + I over Z[rho]: totally positive definite, so the diagonal is
// totally positive.  When tp_diagonal is false the first diagonal entry is
// replaced by a sampled non-totally-positive element.
inline OKGramMatrix random_ok_gram(const CubicOrder& ord, long rank, std::uint64_t seed,
                                   bool tp_diagonal = true) {
    std::mt19937_64 rng(seed);
    std::vector<OrderElement> a(std::size_t(rank) * rank);
    for (auto& v : a) v = random_element(rng, 2);
    std::vector<OrderElement> g(std::size_t(rank) * rank);
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) {
            OrderElement s = i == j ? OrderElement{1, 0, 0} : OrderElement{0, 0, 0};
            for (long k = 0; k < rank; ++k)
                s = s + ord.mul(a[k * rank + i], a[k * rank + j]);
            g[i * rank + j] = s;
        }
    if (!tp_diagonal) {
        bool replaced = false;
        for (int tries = 0; tries < 10000 && !replaced; ++tries) {
            OrderElement e = random_element(rng, 3);
            if (!e.is_zero() && !ord.is_totally_positive(e) && !ord.is_totally_positive(-e)) {
                g[0] = e;
                replaced = true;
            }
        }
        if (!replaced) throw internal_error("random_ok_gram: no indefinite diagonal entry found");
    }
    return OKGramMatrix(ord, rank, std::move(g));
}

} // namespace cubiclat
