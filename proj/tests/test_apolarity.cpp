#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/apolarity.hpp"
#include "waring_eig/rand.hpp"

using namespace waring_eig;

TEST_CASE("catalecticants of pure powers have rank one") {
    for (unsigned d = 2; d <= 6; ++d) {
        REQUIRE(rank_exact(catalecticant(BForm::monomial(d, 0), 1)) == 1);
        REQUIRE(waring_rank_binary(BForm::monomial(d, 0)) == 1);
    }
}

TEST_CASE("monomial ranks d-j+1") {
    for (unsigned d = 2; d <= 10; ++d)
        for (unsigned j = 1; 2 * j <= d; ++j)
            REQUIRE(waring_rank_binary(BForm::monomial(d, j)) == d - j + 1);
}

TEST_CASE("annihilator generators") {
    SECTION("x0^4") {
        auto a = annihilator_binary(BForm::monomial(4, 0));
        REQUIRE(a.g1 == BForm::monomial(1, 1));
        REQUIRE(a.g2 == BForm::monomial(5, 0));
        REQUIRE(!a.balanced);
    }
    SECTION("x0^4 + x1^4") {
        auto a = annihilator_binary(BForm::monomial(4, 0) + BForm::monomial(4, 4));
        REQUIRE(a.g1 == BForm::monomial(2, 1));
    }
    SECTION("generators annihilate, degrees sum to d+2") {
        Rng rng(7);
        for (int t = 0; t < 10; ++t) {
            BForm f(6);
            for (unsigned k = 0; k <= 6; ++k) f.coeff(k) = rand_gauss(rng, 5);
            if (f.is_zero()) continue;
            auto a = annihilator_binary(f);
            REQUIRE(apolar_apply(a.g1, f).is_zero());
            REQUIRE(apolar_apply(a.g2, f).is_zero());
            REQUIRE(a.g1.degree() + a.g2.degree() == 8);
        }
    }
}

TEST_CASE("decomposition round trip at rank 3, degree 7") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const unsigned d = 7, r = 3;
        std::vector<ProjPoint> pts;
        BForm f(d);
        while (pts.size() < r) {
            ProjPoint p(GaussRat(rand_rat(rng, 5)), GaussRat(1));
            bool dup = false;
            for (auto& q : pts)
                if (q == p) dup = true;
            if (dup) continue;
            pts.push_back(p);
            f = f + BForm::linear_power(p.coords[0], p.coords[1], d);
        }
        REQUIRE(waring_rank_binary(f) == r);
        auto dec = decompose_binary(f);
        REQUIRE(dec.exact);
        REQUIRE(dec.terms.size() == r);
        BForm rec(d);
        for (auto& tm : dec.terms)
            rec = rec + BForm::linear_power(tm.lin.coords[0], tm.lin.coords[1], d) * tm.coef;
        REQUIRE(rec == f);
    }
}

TEST_CASE("2 x0 x1 splits into two squares") {
    auto dec = decompose_binary(BForm::monomial(2, 1, GaussRat(2)));
    REQUIRE(dec.exact);
    REQUIRE(dec.terms.size() == 2);
}

TEST_CASE("apolar_apply agrees with the scaled BW pairing at full degree") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        unsigned d = 2 + rand_int(rng, 0, 5);
        unsigned nv = 2 + rand_int(rng, 0, 2);
        NForm f = rand_nform(rng, nv, d, 4);
        NForm g = rand_nform(rng, nv, d, 4);
        GaussRat lhs = apolar_apply(g, f).coeff(Expo(nv, 0));
        REQUIRE(lhs == rat_factorial(d) * bw_inner(f, g));
    }
}
