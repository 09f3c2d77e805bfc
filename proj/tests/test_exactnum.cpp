#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/linalg.hpp"
#include "waring_eig/rand.hpp"
#include "waring_eig/upoly.hpp"

using namespace waring_eig;

TEST_CASE("gaussian rational arithmetic") {
    GaussRat z(Rat(1), Rat(2));  // 1+2i
    REQUIRE(z * z.conj() == GaussRat(Rat(5)));
    REQUIRE(pow(GaussRat::i(), 4) == GaussRat(1));
    REQUIRE(GaussRat(1) / GaussRat(Rat(0), Rat(1)) == GaussRat(Rat(0), Rat(-1)));
    REQUIRE(gauss_str(GaussRat(Rat(3, 4))) == "3/4");
    REQUIRE(gauss_str(GaussRat(Rat(0), Rat(-1))) == "-i");
}

TEST_CASE("exact kernels and ranks") {
    ExactMatrix m(2, 3);
    m(0, 0) = GaussRat(1);
    m(0, 1) = GaussRat(1);
    m(1, 1) = GaussRat(1);
    m(1, 2) = GaussRat(1);
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == GaussRat(1));
    CHECK(kb[0][1] == GaussRat(-1));
    CHECK(kb[0][2] == GaussRat(1));

    // [[1, i], [i, -1]] is rank one over Q(i)
    ExactMatrix r2(2, 2);
    r2(0, 0) = GaussRat(1);
    r2(0, 1) = GaussRat::i();
    r2(1, 0) = GaussRat::i();
    r2(1, 1) = GaussRat(-1);
    REQUIRE(rank_exact(r2) == 1);

    ExactMatrix id = ExactMatrix::identity(4);
    REQUIRE(inverse(id) == id);
}

TEST_CASE("squarefree decomposition of univariate polynomials") {
    UPoly<GaussRat> p(std::vector<GaussRat>{GaussRat(-1), GaussRat(0), GaussRat(1)});  // t^2-1
    auto fac = yun_squarefree(p);
    REQUIRE(fac.size() == 1);
    REQUIRE(fac[0].degree() == 2);
    auto fac2 = yun_squarefree(p * p);
    REQUIRE(fac2.size() == 2);
    CHECK(fac2[0].degree() == 0);
    CHECK(fac2[1].degree() == 2);
}

TEST_CASE("numeric rank matches exact rank on rational matrices") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = GaussRat(rand_rat(rng, 5));
        REQUIRE(rank_numeric(to_numeric(m), 1e-9) == rank_exact(m));
    }
}
