#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/eigensch.hpp"
#include "waring_eig/locus.hpp"
#include "waring_eig/ortho.hpp"
#include "waring_eig/rand.hpp"

using namespace waring_eig;

namespace {
BForm three_powers(unsigned d) {  // x^d + y^d + (x+y)^d
    return BForm::monomial(d, 0) + BForm::monomial(d, d) +
           BForm::linear_power(GaussRat(1), GaussRat(1), d);
}
}  // namespace

TEST_CASE("x^d + y^d + (x+y)^d eigen structure") {
    for (unsigned d = 3; d <= 8; ++d) {
        BForm F = three_powers(d);
        LinForm L(GaussRat(1), GaussRat(1));
        REQUIRE(is_eigenvector(F, L));
        REQUIRE(!is_eigenvector(F, LinForm(GaussRat(1), GaussRat(0))));
        REQUIRE(!is_eigenvector(F, LinForm(GaussRat(0), GaussRat(1))));
        auto sv = singular_value(F, L);
        REQUIRE(sv.kind == SVKind::Exact);
        REQUIRE(sv.value == GaussRat(Rat(1) + Rat(1, 1L << (d - 1))));  // 1 + 2^{1-d}

        // removing the eigen-summand leaves a squarefree cubic annihilator
        if (d >= 4) {
            BForm G = F - BForm::linear_power(GaussRat(1), GaussRat(1), d) * sv.value;
            auto a = annihilator_binary(G);
            REQUIRE(a.g1.degree() == 3);
            REQUIRE(is_squarefree(a.g1));
            BForm Ld1 = BForm::linear_power(GaussRat(1), GaussRat(1), d - 1);
            REQUIRE(apolar_apply(Ld1, G).is_zero());
        }
    }
}

TEST_CASE("eigen support of x0^4") {
    auto sup = eigen_support_binary(BForm::monomial(4, 0));
    REQUIRE(sup.size() == 2);
    unsigned m10 = 0, m01 = 0;
    for (auto& ep : sup) {
        REQUIRE(ep.exact);
        if (ep.pt == ProjPoint(GaussRat(1), GaussRat(0))) m10 = ep.multiplicity;
        if (ep.pt == ProjPoint(GaussRat(0), GaussRat(1))) m01 = ep.multiplicity;
    }
    REQUIRE(m10 == 1);
    REQUIRE(m01 == 3);
}

TEST_CASE("monomial eigenpolynomial factorization") {
    // L=x, M=y, j=1, d=4: quadric 3y^2 - x^2; D = x^2 (3y^2 - x^2)
    LinForm L(GaussRat(1), GaussRat(0)), M(GaussRat(0), GaussRat(1));
    auto me = monomial_eigen_binary(4, 1, L, M);
    REQUIRE(me.quadric == BForm(2, {GaussRat(-1), GaussRat(0), GaussRat(3)}));
    BForm D = eigen_poly_binary(BForm::monomial(4, 1));
    REQUIRE(D.proportional_to(BForm::monomial(2, 0) * me.quadric));
}

TEST_CASE("isotropic eigenvectors") {
    BForm F = BForm::linear_power(GaussRat(1), GaussRat::i(), 4);
    LinForm L(GaussRat(1), GaussRat::i());
    REQUIRE(is_eigenvector(F, L));
    REQUIRE(singular_value(F, L).kind == SVKind::Indeterminate);
}

TEST_CASE("eigenpolynomial transforms with det(A)") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix A = random_ortho(2, rng);
        BForm f(5);
        for (unsigned k = 0; k <= 5; ++k) f.coeff(k) = rand_gauss(rng, 4);
        if (f.is_zero()) continue;
        BForm lhs = eigen_poly_binary(ortho_act(A, f));
        BForm rhs = ortho_act(A, eigen_poly_binary(f)) * det_exact(A);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("eigenvectors map to eigenvectors under the orthogonal action") {
    Rng rng(19);
    for (int t = 0; t < 6; ++t) {
        unsigned nv = 3 + rand_int(rng, 0, 1);
        ExactMatrix A = random_ortho(nv, rng);
        // sum c_i x_i^d has the coordinate points as eigenvectors
        NForm f(nv, 4);
        for (unsigned i = 0; i < nv; ++i) {
            Expo e(nv, 0);
            e[i] = 4;
            f.add_term(e, GaussRat(rand_rat_nonzero(rng, 5)));
        }
        NForm af = ortho_act(A, f);
        for (unsigned i = 0; i < nv; ++i) {
            std::vector<GaussRat> ei(nv, GaussRat(0));
            ei[i] = GaussRat(1);
            ProjPoint img = ortho_act_point(A, ProjPoint(ei));
            REQUIRE(is_eigenvector(af, img.as_linform()));
        }
    }
}
