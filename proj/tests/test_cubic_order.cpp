#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubiclat/cubic_order.hpp"

using namespace cubiclat;

namespace {

OrderElement rand_elem(std::mt19937_64& rng, long amp) {
    auto draw = [&] { return long(rng() % (2 * amp + 1)) - amp; };
    return {mpz_class(draw()), mpz_class(draw()), mpz_class(draw())};
}

const OrderElement one{1, 0, 0};
const OrderElement rho{0, 1, 0};
const OrderElement rho2{0, 0, 1};

} // namespace

TEST_CASE("family construction and minimal polynomials") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.minpoly_coeffs() == std::array<mpz_class, 4>{1, -7, -10, -1});
    CHECK(sh.deriv_coeffs() == std::array<mpz_class, 3>{3, -14, -10});
    CHECK(sh.derivative_at_rho() == OrderElement{-10, -14, 3});
    CHECK(sh.rho_root_index() == 3);

    CubicOrder en(Family::ennola, 7);
    CHECK(en.minpoly_coeffs() == std::array<mpz_class, 4>{1, 6, -7, -1});
    CHECK(en.rho_root_index() == 1);

    CubicOrder f3(Family::family3, 7);
    CHECK(f3.minpoly_coeffs() == std::array<mpz_class, 4>{1, -16, 63, -1});
    CHECK(f3.rho_root_index() == 1);

    CHECK_THROWS_AS(CubicOrder(Family::shanks, 5), parameter_error);
    CHECK_THROWS_AS(CubicOrder(Family::ennola, 6), parameter_error);
    CHECK_THROWS_AS(CubicOrder(Family::family3, -3), parameter_error);
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::shanks, Family::ennola, Family::family3})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("quartic"), parameter_error);
}

TEST_CASE("products reduce by the minimal polynomial") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.mul(rho, rho2) == OrderElement{1, 10, 7});
    CHECK(sh.mul(rho2, rho2) == OrderElement{7, 71, 59});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        OrderElement a = rand_elem(rng, 50);
        CHECK(sh.mul(one, a) == a);
    }
}

TEST_CASE("integer and rational multiplication agree") {
    std::mt19937_64 rng(12);
    for (Family f : {Family::shanks, Family::ennola, Family::family3}) {
        CubicOrder ord(f, 9);
        for (int i = 0; i < 100; ++i) {
            OrderElement a = rand_elem(rng, 40), b = rand_elem(rng, 40);
            OrderElement zi = ord.mul(a, b);
            FieldVector zq = ord.mul(FieldVector(a), FieldVector(b));
            CHECK(FieldVector(zi) == zq);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(13);
    for (Family f : {Family::shanks, Family::ennola, Family::family3}) {
        for (long a : {7L, 11L}) {
            CubicOrder ord(f, a);
            for (int i = 0; i < 1000; ++i) {
                OrderElement x = rand_elem(rng, 30), y = rand_elem(rng, 30),
                             z = rand_elem(rng, 30);
                REQUIRE(ord.mul(x, y) == ord.mul(y, x));
                REQUIRE(ord.mul(ord.mul(x, y), z) == ord.mul(x, ord.mul(y, z)));
                REQUIRE(ord.mul(x, y + z) == ord.mul(x, y) + ord.mul(x, z));
                REQUIRE(ord.mul(x, one) == x);
            }
        }
    }
}

TEST_CASE("symmetric functions, trace and norm") {
    CubicOrder sh(Family::shanks, 7);
    SymmetricFunctions s = sh.symmetric_functions(FieldVector(rho));
    CHECK(s.e1 == 7);
    CHECK(s.e2 == -10);
    CHECK(s.e3 == 1);
    s = sh.symmetric_functions(FieldVector(one));
    CHECK(s.e1 == 3);
    CHECK(s.e2 == 3);
    CHECK(s.e3 == 1);
    CHECK(sh.trace(rho2) == 69);
    CHECK(sh.trace(rho) == 7);
    CHECK(sh.norm(rho) == 1);

    std::mt19937_64 rng(14);
    for (int i = 0; i < 500; ++i) {
        OrderElement a = rand_elem(rng, 25), b = rand_elem(rng, 25);
        REQUIRE(sh.norm(sh.mul(a, b)) == sh.norm(a) * sh.norm(b));
        REQUIRE(sh.trace(a + b) == sh.trace(a) + sh.trace(b));
        SymmetricFunctions sa = sh.symmetric_functions(FieldVector(a));
        REQUIRE(sa.e1 == sh.trace(a));
        REQUIRE(sa.e3 == sh.norm(a));
    }
}

TEST_CASE("total positivity by symmetric-function signs") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.is_totally_positive(one));
    CHECK(!sh.is_totally_positive(rho));
    CHECK(!sh.is_totally_positive(OrderElement{0, 0, 0}));
    CHECK(sh.is_totally_positive(OrderElement{0, -1, 1}));  // -rho + rho^2
    CHECK(sh.is_totally_positive(rho2));                    // a square

    // in the third family rho itself is totally positive: all coefficient
    // signs of the symmetric functions of rho are positive
    CubicOrder f3(Family::family3, 7);
    CHECK(f3.is_totally_positive(rho));
}

TEST_CASE("field inverses") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.invert(FieldVector(one)) == FieldVector(one));
    CHECK(sh.invert(FieldVector(rho)) == FieldVector(OrderElement{-10, -7, 1}));
    CHECK_THROWS_AS(sh.invert(FieldVector()), division_by_zero);

    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        OrderElement a = rand_elem(rng, 20);
        if (a.is_zero()) continue;
        FieldVector av(a);
        FieldVector inv = sh.invert(av);
        REQUIRE(sh.mul(av, inv) == FieldVector(one));
        REQUIRE(sh.invert(inv) == av);
    }
}

TEST_CASE("root isolation") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.sign_at(-2) < 0);
    CHECK(sh.sign_at(-1) > 0);
    CHECK(sh.sign_at(0) < 0);
    CHECK(sh.sign_at(8) < 0);
    CHECK(sh.sign_at(9) > 0);

    auto roots = sh.isolate_roots();
    CHECK(roots[0].root_index == 1);
    CHECK(roots[2].root_index == 3);
    // pairwise disjoint after refinement
    auto r0 = sh.refine_root(roots[0], mpq_class(1, 100));
    auto r1 = sh.refine_root(roots[1], mpq_class(1, 100));
    auto r2 = sh.refine_root(roots[2], mpq_class(1, 100));
    CHECK(r0.hi < r1.lo);
    CHECK(r1.hi < r2.lo);
    CHECK(r0.lo > -2);
    CHECK(r0.hi < -1);
    CHECK(r1.lo > -1);
    CHECK(r1.hi < 0);
    CHECK(r2.lo > 8);
    CHECK(r2.hi < 9);

    CubicOrder en(Family::ennola, 7);
    CHECK(en.sign_at(-7) < 0);
    CHECK(en.sign_at(-6) > 0);
    auto e0 = en.refine_root(en.isolate_roots()[0], mpq_class(1, 100));
    CHECK(e0.lo > -7);
    CHECK(e0.hi < -6);
}

TEST_CASE("construction succeeds across the parameter range") {
    for (long a = 7; a <= 500; ++a) {
        for (Family f : {Family::shanks, Family::ennola, Family::family3}) {
            CubicOrder ord(f, a);  // throws if the Sturm count is not 3
            auto roots = ord.isolate_roots();
            REQUIRE(roots[0].hi <= roots[1].hi);
            REQUIRE(roots[1].hi <= roots[2].hi);
        }
    }
}

TEST_CASE("refinement keeps the sign bracket and shrinks") {
    CubicOrder sh(Family::shanks, 19);
    for (auto iv : sh.isolate_roots()) {
        auto r = sh.refine_root(iv, mpq_class(1, 1 << 20));
        CHECK(r.hi - r.lo <= mpq_class(1, 1 << 20));
        CHECK(sh.sign_at(r.lo) * sh.sign_at(r.hi) < 0);
        CHECK(r.lo >= iv.lo);
        CHECK(r.hi <= iv.hi);
    }
    CHECK_THROWS_AS(sh.refine_root(sh.isolate_roots()[0], mpq_class(0)), parameter_error);
}

TEST_CASE("embedding enclosures") {
    CubicOrder sh(Family::shanks, 7);
    auto roots = sh.isolate_roots();
    for (auto iv : roots) {
        QInterval e = sh.embed_enclosure(FieldVector(one), iv, 1);
        CHECK(e.contains(1));
    }
    QInterval big = sh.embed_enclosure(FieldVector(rho), roots[2], mpq_class(1, 16));
    CHECK(big.lo > 8);
    CHECK(big.hi < 9);
    CHECK(big.width() <= mpq_class(1, 16));
    QInterval neg = sh.embed_enclosure(FieldVector(rho), roots[0], mpq_class(1, 8));
    CHECK(neg.hi < 0);
    QInterval tight = sh.embed_enclosure(FieldVector(rho2), roots[2], mpq_class(1, 1 << 16));
    CHECK(tight.width() <= mpq_class(1, 1 << 16));
}

TEST_CASE("positivity agrees with refined embeddings") {
    std::mt19937_64 rng(16);
    for (Family f : {Family::shanks, Family::ennola, Family::family3}) {
        CubicOrder ord(f, 8);
        auto roots = ord.isolate_roots();
        int checked = 0;
        while (checked < 100) {
            OrderElement a = rand_elem(rng, 12);
            if (a.is_zero()) continue;
            ++checked;
            bool all_pos = true;
            for (auto iv : roots) {
                mpq_class w(1, 4);
                QInterval e = ord.embed_enclosure(FieldVector(a), iv, w);
                while (e.contains_zero()) {
                    w /= 16;
                    e = ord.embed_enclosure(FieldVector(a), iv, w);
                }
                all_pos = all_pos && sgn(e.lo) > 0;
            }
            REQUIRE(ord.is_totally_positive(a) == all_pos);
        }
    }
}

TEST_CASE("codifferent trace pairing") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(sh.dual_trace_pairing(rho2, one) == 1);
    CHECK(sh.dual_trace_pairing(one, one) == 0);
    CHECK(sh.dual_trace_pairing(rho, one) == 0);
    CHECK(sh.dual_trace_pairing(sh.mul(rho, rho2), one) == 7);

    // second route: Tr(alpha * h * f'(rho)^{-1}) via symmetric functions
    std::mt19937_64 rng(17);
    FieldVector inv_fp = sh.invert(FieldVector(sh.derivative_at_rho()));
    for (int i = 0; i < 500; ++i) {
        OrderElement a = rand_elem(rng, 30), h = rand_elem(rng, 30);
        mpq_class tr =
            sh.symmetric_functions(sh.mul(sh.mul(FieldVector(a), FieldVector(h)), inv_fp)).e1;
        REQUIRE(mpq_class(sh.dual_trace_pairing(a, h)) == tr);
    }
}

TEST_CASE("dual total positivity") {
    CubicOrder sh(Family::shanks, 7);
    CHECK(!sh.is_dual_totally_positive(OrderElement{0, 0, 0}));
    CHECK(!sh.is_dual_totally_positive(one));

    // find some dual totally positive h by scan, then check the pairing with
    // totally positive integers is always >= 1
    OrderElement found{0, 0, 0};
    bool have = false;
    for (long x = -5; x <= 5 && !have; ++x)
        for (long y = -5; y <= 5 && !have; ++y)
            for (long z = -5; z <= 5 && !have; ++z) {
                OrderElement h{x, y, z};
                if (sh.is_dual_totally_positive(h)) {
                    found = h;
                    have = true;
                }
            }
    REQUIRE(have);
    std::mt19937_64 rng(18);
    int done = 0;
    while (done < 50) {
        OrderElement b = rand_elem(rng, 6);
        OrderElement a = sh.mul(b, b) + one;  // square plus one: totally positive
        REQUIRE(sh.is_totally_positive(a));
        REQUIRE(sh.dual_trace_pairing(a, found) >= 1);
        ++done;
    }
}

TEST_CASE("squarefree heuristic") {
    CHECK(shanks_monogenic_heuristic(7));    // 79 prime
    CHECK(shanks_monogenic_heuristic(8));    // 97 prime
    CHECK(!shanks_monogenic_heuristic(12));  // 189 = 27 * 7
    CHECK_THROWS_AS(shanks_monogenic_heuristic(3), parameter_error);
}
