#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/locus.hpp"
#include "waring_eig/rand.hpp"

using namespace waring_eig;

TEST_CASE("monomial locus is cofinite") {
    BForm f = BForm::monomial(5, 2);  // x0^3 x1^2
    auto ld = waring_locus_binary(f);
    REQUIRE(ld.kind == LocusKind::CofiniteMinus);
    REQUIRE(forbidden_contains(f, ProjPoint(GaussRat(1), GaussRat(0))));
    REQUIRE(!forbidden_contains(f, ProjPoint(GaussRat(0), GaussRat(1))));
}

TEST_CASE("balanced regime") {
    SECTION("x0 x1") {
        BForm f = BForm::monomial(2, 1);
        auto ld = waring_locus_binary(f);
        REQUIRE(ld.kind == LocusKind::Balanced);
        REQUIRE(forbidden_contains(f, ProjPoint(GaussRat(1), GaussRat(0))));
        REQUIRE(forbidden_contains(f, ProjPoint(GaussRat(0), GaussRat(1))));
        REQUIRE(!forbidden_contains(f, ProjPoint(GaussRat(1), GaussRat(1))));
        // derived form R vanishes exactly on the forbidden directions here
        BForm R = ld.forbidden_form;
        REQUIRE(R.degree() == 4);
        REQUIRE(R.eval(GaussRat(1), GaussRat(0)).is_zero());
        REQUIRE(R.eval(GaussRat(3), GaussRat(2)) != GaussRat(0));
    }
    SECTION("x0^2 x1^2") {
        BForm f = BForm::monomial(4, 2);
        REQUIRE(waring_locus_binary(f).kind == LocusKind::Balanced);
        REQUIRE(waring_rank_binary(f) == 3);
    }
}

TEST_CASE("intersection in the cofinite regime") {
    // x^{d-1}y + (x+y)^d has rank d-1 > (d+1)/2 at d=5; enough eigenpoints
    const unsigned d = 5;
    BForm F = BForm::monomial(d, 1) + BForm::linear_power(GaussRat(1), GaussRat(1), d);
    REQUIRE(waring_rank_binary(F) == d - 1);
    REQUIRE(eig_count_sufficiency(F));
    auto rep = intersect_waring_eigen_binary(F);
    REQUIRE(rep.kind == LocusKind::CofiniteMinus);
    REQUIRE(rep.nonempty);
}

TEST_CASE("generic low-rank forms have empty intersection") {
    Rng rng(23);
    int checked = 0;
    for (int t = 0; t < 10; ++t) {
        const unsigned d = 7, r = 3;
        std::vector<Rat> used;
        BForm f(d);
        unsigned cnt = 0;
        while (cnt < r) {
            Rat a = rand_rat(rng, 9);
            bool dup = false;
            for (auto& u : used)
                if (u == a) dup = true;
            if (dup) continue;
            used.push_back(a);
            f = f + BForm::linear_power(GaussRat(a), GaussRat(1), d);
            ++cnt;
        }
        if (waring_rank_binary(f) != r) continue;
        auto rep = intersect_waring_eigen_binary(f);
        REQUIRE(!rep.nonempty);
        ++checked;
    }
    REQUIRE(checked >= 8);
}

TEST_CASE("monomial loci in n >= 2 variables") {
    auto ml = monomial_loci({2, 2, 3});
    REQUIRE(ml.m == 1);
    REQUIRE(ml.intersection == MonomialIntersection::ForbiddenInsideEigen);
    auto ml2 = monomial_loci({1, 1, 2});
    REQUIRE(ml2.m == 1);
    REQUIRE(ml2.intersection == MonomialIntersection::CodimTwoUnion);
}
