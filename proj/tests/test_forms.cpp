#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/ortho.hpp"
#include "waring_eig/rand.hpp"

using namespace waring_eig;

TEST_CASE("binary form basics") {
    BForm f = BForm::linear_power(GaussRat(1), GaussRat(1), 3);  // (x0+x1)^3
    REQUIRE(f.coeff(1) == GaussRat(3));

    BForm x01 = BForm::monomial(2, 1);
    REQUIRE(roots_numeric(x01, 1e-8).size() == 2);
    REQUIRE(is_squarefree(x01));

    BForm sq = BForm::monomial(3, 1);  // x0^2 x1
    REQUIRE(!is_squarefree(sq));
    REQUIRE(squarefree_part(sq).degree() == 2);

    REQUIRE(discriminant(BForm::linear_power(GaussRat(1), GaussRat(1), 2)) == GaussRat(0));
    BForm c2(2, {GaussRat(1), GaussRat(0), GaussRat(1)});  // x0^2+x1^2
    REQUIRE(discriminant(c2) != GaussRat(0));

    REQUIRE(gcd_binary(BForm::monomial(3, 1), BForm::monomial(3, 2)) == BForm::monomial(2, 1));
}

TEST_CASE("apolar action and the Bombieri-Weyl pairing") {
    BForm F = BForm::monomial(4, 0);
    BForm G = BForm::monomial(3, 0);
    BForm res = apolar_apply(G, F);
    REQUIRE(res.degree() == 1);
    REQUIRE(res.coeff(0) == GaussRat(24));  // 4!/1!
    REQUIRE(bw_inner(F, F) == GaussRat(1));
    BForm H = BForm::monomial(4, 1);
    REQUIRE(bw_inner(H, H) == GaussRat(Rat(1, 4)));

    // <L^d, M^d> = <l, m>^d
    Rng rng(42);
    LinForm u = rand_linform(rng, 3), v = rand_linform(rng, 3);
    REQUIRE(bw_inner(NForm::linear_power(u, 4), NForm::linear_power(v, 4)) ==
            pow(lin_inner(u, v), 4));
}

TEST_CASE("isotropic vectors and perps") {
    LinForm L(GaussRat(1), GaussRat(2));
    REQUIRE(lin_inner(perp(L), L).is_zero());
    REQUIRE(is_isotropic(LinForm(GaussRat(1), GaussRat::i())));
    REQUIRE(!is_isotropic(L));
}

TEST_CASE("linear powers evaluate as inner-product powers") {
    Rng rng(42);
    LinForm l3 = rand_linform(rng, 3);
    NForm lp = NForm::linear_power(l3, 3);
    std::vector<GaussRat> pt{GaussRat(2), GaussRat(-1), GaussRat(3)};
    REQUIRE(lp.eval(pt) == pow(lin_inner(l3, LinForm(pt)), 3));
}

TEST_CASE("orthogonal group action") {
    Rng rng(42);
    auto A = random_ortho(2, rng);
    REQUIRE(is_orthogonal(A));
    auto d = det_exact(A);
    REQUIRE((d == GaussRat(1) || d == GaussRat(-1)));

    NForm nf = rand_nform(rng, 3, 4);
    auto A3 = random_ortho(3, rng);
    auto B3 = random_ortho(3, rng);
    SECTION("composition") {
        REQUIRE(ortho_act(A3 * B3, nf) == ortho_act(A3, ortho_act(B3, nf)));
    }
    SECTION("BW invariance") {
        REQUIRE(bw_inner(ortho_act(A3, nf), ortho_act(A3, nf)) == bw_inner(nf, nf));
    }
    SECTION("powers of linear forms map to powers") {
        LinForm l = rand_linform(rng, 3);
        NForm img = ortho_act(A3, NForm::linear_power(l, 4));
        REQUIRE(img == NForm::linear_power(ortho_act_lin(A3, l), 4));
    }
}
