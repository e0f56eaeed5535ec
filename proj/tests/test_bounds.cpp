#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubiclat/bounds.hpp"

using namespace cubiclat;

namespace {

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
    return p;
}

// closed form for the number of a in [7, X] with (a+1)(a+2)/2 <= B
long shanks_density_oracle(long X, long B) {
    long count = 0;
    for (long a = 7; a <= X; ++a)
        if ((a + 1) * (a + 2) / 2 <= B) ++count;
    return count;
}

long ennola_rank_oracle(long a) {
    long best = 0;
    for (long R = 1; R <= 100; ++R) {
        long bound = 9 * R * R - 3 * R;
        if (bound < 240) bound = 240;
        if (bound <= a) best = R;
    }
    return best + 1;
}

} // namespace

TEST_CASE("frozen rank lower bounds") {
    CHECK(rank_lower_bound({Family::shanks, 7, 1, true}) == 13);
    CHECK(rank_lower_bound({Family::ennola, 1000, 1, true}) == 11);
    CHECK(rank_lower_bound({Family::shanks, 7, 3, true}) == 2);
    CHECK(rank_lower_bound({Family::ennola, 7, 1, true}) == 1);
    CHECK(rank_lower_bound({Family::ennola, 239, 1, true}) == 1);
    CHECK(rank_lower_bound({Family::ennola, 240, 1, true}) == 6);
    CHECK(rank_lower_bound({Family::family3, 9, 1, true}) == 1);
    CHECK(rank_lower_bound({Family::shanks, 7, 20, true}) == 1);
}

TEST_CASE("rank bound closed forms across the parameter range") {
    for (long a = 7; a <= 300; ++a) {
        // shanks k=1: B1(R,1) = 3R, so the bound is floor(a'/3) + 1
        mpz_class ap = aprime(Family::shanks, a);
        CHECK(rank_lower_bound({Family::shanks, a, 1, true}) == ap / 3 + 1);
    }
    for (long a : {7L, 100L, 239L, 240L, 241L, 500L, 1000L, 2000L, 5000L})
        CHECK(rank_lower_bound({Family::ennola, a, 1, true}) == ennola_rank_oracle(a));
    for (long a = 7; a <= 299; ++a) {
        // nondecreasing in a (a' is nondecreasing and the bound is monotone)
        REQUIRE(rank_lower_bound({Family::shanks, a + 1, 1, true}) >=
                rank_lower_bound({Family::shanks, a, 1, true}));
        REQUIRE(rank_lower_bound({Family::ennola, a + 1, 1, true}) >=
                rank_lower_bound({Family::ennola, a, 1, true}));
    }
}

TEST_CASE("returned rank is the first not excluded by the bound chain") {
    for (Family f : {Family::shanks, Family::ennola, Family::family3})
        for (long a : {7L, 40L, 240L, 1000L})
            for (long k : {1L, 2L, 3L}) {
                mpz_class V = rank_lower_bound({f, a, k, true});
                REQUIRE(V >= 1);
                long v = long(V.get_si());
                // B1 takes n directly; B2 applies the n -> 2n doubling itself
                auto bnd = [&](long R) {
                    return f == Family::shanks ? bound_B1(R, k, 512) : bound_B2(R, k, 512);
                };
                mpz_class ap = aprime(f, a);
                REQUIRE(bnd(v).lo > ap);
                if (v >= 2) REQUIRE(bnd(v - 1).hi <= ap);
            }
}

TEST_CASE("non-classical queries equal classical queries at doubled k") {
    for (Family f : {Family::shanks, Family::ennola, Family::family3})
        for (long a : {7L, 50L, 300L})
            for (long k : {1L, 2L, 3L})
                REQUIRE(rank_lower_bound({f, a, k, false}) ==
                        rank_lower_bound({f, a, 2 * k, true}));
}

TEST_CASE("rank bound validation and precision invariance") {
    CHECK_THROWS_AS(rank_lower_bound({Family::shanks, 6, 1, true}), parameter_error);
    CHECK_THROWS_AS(rank_lower_bound({Family::shanks, 7, 0, true}), parameter_error);
    CHECK_THROWS_AS(rank_lower_bound({Family::shanks, 7, 1, true}, 8), parameter_error);
    for (long k : {1L, 3L, 5L}) {
        RankBoundQuery q{Family::shanks, 11, k, true};
        CHECK(rank_lower_bound(q, 128) == rank_lower_bound(q, 4096));
        RankBoundQuery p{Family::family3, 11, k, false};
        CHECK(rank_lower_bound(p, 128) == rank_lower_bound(p, 4096));
    }
}

TEST_CASE("frozen density counts") {
    CHECK(density_count(Family::shanks, 100, 36) == 1);
    CHECK(density_count(Family::ennola, 100, 50) == 44);
    CHECK(density_count(Family::family3, 100, 50) == 44);
    CHECK(density_count(Family::shanks, 7, 0) == 0);
    CHECK_THROWS_AS(density_count(Family::shanks, 6, 1000000), parameter_error);
    CHECK(density_count(Family::ennola, 100, mpq_class(-5)) == 0);
    CHECK(density_count(Family::ennola, 100, mpq_class(15, 2)) == 1);  // only a = 7
}

TEST_CASE("density counts match direct oracles") {
    for (long X : {7L, 20L, 100L})
        for (long B : {0L, 10L, 36L, 45L, 100L, 2000L}) {
            REQUIRE(density_count(Family::shanks, X, B) == shanks_density_oracle(X, B));
            long simple = std::max(0L, std::min(X, B) - 6);
            REQUIRE(density_count(Family::ennola, X, B) == simple);
            REQUIRE(density_count(Family::family3, X, B) == simple);
        }
}

TEST_CASE("counting check verdicts") {
    auto r = verify_counting_lemma(Family::shanks, 100, 36);
    CHECK(r.verdict == LemmaVerdict::pass);
    CHECK(r.precondition_ok);
    CHECK(r.count == 1);
    CHECK(r.threshold_sq == 200);

    r = verify_counting_lemma(Family::shanks, 36, 36);  // needs X > max(B, 7)
    CHECK(r.verdict == LemmaVerdict::precondition_not_satisfied);
    CHECK(!r.precondition_ok);

    r = verify_counting_lemma(Family::shanks, 37, 36);
    CHECK(r.verdict == LemmaVerdict::pass);
    CHECK(r.count == 1);

    r = verify_counting_lemma(Family::ennola, 100, 9);  // needs X > max(B^2, 7)
    CHECK(r.verdict == LemmaVerdict::pass);
    CHECK(r.count == 3);
    CHECK(r.threshold_sq == 100);

    r = verify_counting_lemma(Family::ennola, 80, 9);
    CHECK(r.verdict == LemmaVerdict::precondition_not_satisfied);

    r = verify_counting_lemma(Family::family3, 100, 9);  // needs X > max(B^2 + 1, 7)
    CHECK(r.verdict == LemmaVerdict::pass);

    r = verify_counting_lemma(Family::family3, 82, 9);
    CHECK(r.verdict == LemmaVerdict::precondition_not_satisfied);

    CHECK(lemma_verdict_name(LemmaVerdict::pass) == "pass");
    CHECK(lemma_verdict_name(LemmaVerdict::fail) == "fail");
    CHECK(lemma_verdict_name(LemmaVerdict::precondition_not_satisfied) ==
          "precondition_not_satisfied");
}

TEST_CASE("counting check passes on a broad grid whenever unlocked") {
    for (Family f : {Family::shanks, Family::ennola, Family::family3})
        for (long X : {100L, 1000L, 10000L})
            for (long B : {1L, 10L, 100L, 1000L}) {
                auto r = verify_counting_lemma(f, X, B);
                REQUIRE(r.verdict != LemmaVerdict::fail);
                if (r.precondition_ok) {
                    REQUIRE(r.count * r.count < r.threshold_sq);
                    REQUIRE(r.count == density_count(f, X, B));
                }
            }
}

TEST_CASE("frozen exceptional-set reports") {
    auto sh = exceptional_count(Family::shanks, 100, mpq_class(1, 4), 1, true);
    CHECK(sh.count == 23);
    CHECK(sh.pass);
    // budget is sqrt(2) * 100^(3/4) = 44.72135954...
    CHECK(sh.budget_lo <= mpq_class(4472135955, 100000000));
    CHECK(sh.budget_hi >= mpq_class(4472135954, 100000000));
    CHECK(sh.budget_hi - sh.budget_lo < mpq_class(1, 1000000));
    // exact cross-check of the verdict: count^8 <= 2^4 * X^6
    CHECK(pow_z(sh.count, 8) <= pow_z(2, 4) * pow_z(100, 6));

    auto en = exceptional_count(Family::ennola, 100, mpq_class(1, 4), 1, true);
    CHECK(en.count == 94);
    CHECK(!en.pass);
    CHECK(pow_z(en.count, 4) > pow_z(100, 3));  // budget is X^(3/4)

    auto f3 = exceptional_count(Family::family3, 100, mpq_class(1, 4), 1, true);
    CHECK(f3.count == 94);
    CHECK(!f3.pass);
}

TEST_CASE("exceptional counts recomputed from the rank bound") {
    // for eps = 1/4, a is exceptional iff rank_lower_bound(a)^2 <= a^3
    mpz_class count = 0;
    for (long a = 7; a <= 100; ++a) {
        mpz_class R = rank_lower_bound({Family::shanks, a, 1, true});
        if (R * R <= pow_z(a, 3)) ++count;
    }
    CHECK(count == 23);
    count = 0;
    for (long a = 7; a <= 100; ++a) {
        mpz_class R = rank_lower_bound({Family::ennola, a, 1, true});
        if (R * R <= pow_z(a, 3)) ++count;
    }
    CHECK(count == 94);
}

TEST_CASE("exceptional-set validation and precision invariance") {
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 100, mpq_class(0), 1, true),
                    parameter_error);
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 100, mpq_class(1), 1, true),
                    parameter_error);
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 100, mpq_class(-1, 4), 1, true),
                    parameter_error);
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 100, mpq_class(1, 1001), 1, true),
                    parameter_error);
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 6, mpq_class(1, 4), 1, true),
                    parameter_error);
    CHECK_THROWS_AS(exceptional_count(Family::shanks, 100, mpq_class(1, 4), 0, true),
                    parameter_error);

    auto a = exceptional_count(Family::shanks, 200, mpq_class(3, 8), 1, true, 128);
    auto b = exceptional_count(Family::shanks, 200, mpq_class(3, 8), 1, true, 2048);
    CHECK(a.count == b.count);
    CHECK(a.pass == b.pass);
    CHECK(b.budget_lo >= a.budget_lo);
    CHECK(b.budget_hi <= a.budget_hi);

    // eps with denominator at the validation edge works
    auto e = exceptional_count(Family::ennola, 50, mpq_class(999, 1000), 1, true);
    CHECK(e.count >= 0);
}
