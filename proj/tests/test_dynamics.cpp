#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/dynamics.hpp"

using namespace waring_eig;

TEST_CASE("pencil of x^5 + y^5 along x+y") {
    BForm F = BForm::monomial(5, 0) + BForm::monomial(5, 5);
    auto prof = rank_pencil(F, LinForm(GaussRat(1), GaussRat(1)));
    REQUIRE(prof.base_rank == 2);
    REQUIRE(prof.generic_rank == 3);
    REQUIRE(prof.exact);
    REQUIRE(prof.exceptional.size() == 1);
    CHECK(prof.exceptional[0].exact);
    CHECK(prof.exceptional[0].lambda.is_zero());
    CHECK(prof.exceptional[0].rank == 2);
}

TEST_CASE("rank drops along a decomposition direction") {
    BForm F = BForm::monomial(6, 0) * GaussRat(3) + BForm::monomial(6, 6) * GaussRat(5);
    auto prof = rank_pencil(F, LinForm(GaussRat(1), GaussRat(0)));
    REQUIRE(prof.base_rank == 2);
    REQUIRE(prof.generic_rank == 2);
    bool drop = false;
    for (auto& e : prof.exceptional)
        if (e.exact && e.lambda == GaussRat(-3) && e.rank == 1) drop = true;
    REQUIRE(drop);
}

TEST_CASE("numeric Sylvester agrees with exact ranks") {
    Rng rng(5);
    for (int t = 0; t < 15; ++t) {
        unsigned d = 3 + rand_int(rng, 0, 5);
        unsigned r = 1 + rand_int(rng, 0, (d + 1) / 2 - 1);
        BForm f = rand_rank_form(rng, d, r);
        std::vector<CFloat> c(d + 1);
        for (unsigned k = 0; k <= d; ++k) c[k] = f.coeff(k).to_complex();
        REQUIRE(waring_rank_numeric(c) == r);
    }
}

TEST_CASE("subgeneric growth along forbidden directions") {
    auto rep = verify_subgeneric_growth(5, 2, 8, 101);
    REQUIRE(rep.passes == rep.trials);
    auto rep2 = verify_subgeneric_growth(7, 3, 6, 102);
    REQUIRE(rep2.passes == rep2.trials);
}

TEST_CASE("odd-degree generic growth") {
    auto rep = verify_generic_odd_growth(3, 6, 103);
    REQUIRE(rep.passes == rep.trials);
    auto rep5 = verify_generic_odd_growth(5, 4, 104);
    REQUIRE(rep5.passes == rep5.trials);
}

TEST_CASE("even-degree control: all eigenpoints of L^{d/2} M^{d/2} already lie in W") {
    const unsigned d = 6;
    BForm L(1, {GaussRat(1), GaussRat(2)});
    BForm M(1, {GaussRat(1), GaussRat(-1)});
    BForm F(0, {GaussRat(1)});
    for (unsigned j = 0; j < d / 2; ++j) F = F * L * M;
    REQUIRE(waring_rank_binary(F) == d / 2 + 1);
    auto rep = intersect_waring_eigen_binary(F);
    REQUIRE(rep.witnesses.size() == eigen_support_binary(F).size());
}

TEST_CASE("x^{d-1} y + (a x + b y)^d family") {
    SECTION("generic parameters, d=5") {
        auto rep = analyze_example_family(5, GaussRat(1), GaussRat(1));
        REQUIRE(waring_rank_binary(rep.f) == 4);
        REQUIRE(rep.forbidden_has_x);
        REQUIRE(rep.forbidden_has_ab);
        REQUIRE(!rep.cond_x);
        REQUIRE(rep.d_at_x != GaussRat(0));
        REQUIRE(!rep.cond_ab);
        REQUIRE(rep.d_at_ab != GaussRat(0));
        // rank stays d-1 along x^d
        REQUIRE(rep.pencil_x.generic_rank == 4);
        REQUIRE(rep.pencil_x.exceptional.empty());
        // lambda = -1 along (ax+by)^d leaves x^{d-1}y of rank d
        REQUIRE(rep.pencil_ab.generic_rank == 4);
        bool up = false;
        for (auto& e : rep.pencil_ab.exceptional)
            if (e.exact && e.lambda == GaussRat(-1) && e.rank == 5) up = true;
        REQUIRE(up);
    }
    SECTION("degenerate branches") {
        auto rz = analyze_example_family(4, GaussRat(0), GaussRat(1));
        REQUIRE(rz.cond_ab);
        REQUIRE(rz.d_at_ab == GaussRat(0));
        // a^{d-1} = -1/(d b): satisfied by d=3, a=1, b=-1/3
        auto rc = analyze_example_family(3, GaussRat(1), GaussRat(Rat(-1, 3)));
        REQUIRE(rc.cond_x);
        REQUIRE(rc.d_at_x == GaussRat(0));
    }
    SECTION("conditions match the eigenpolynomial values") {
        for (long aa = -2; aa <= 2; ++aa) {
            auto rr = analyze_example_family(4, GaussRat(Rat(aa)), GaussRat(1));
            REQUIRE(rr.cond_x == (rr.d_at_x == GaussRat(0)));
            REQUIRE(rr.cond_ab == (rr.d_at_ab == GaussRat(0)));
        }
    }
}
