#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/critvar.hpp"

using namespace waring_eig;

TEST_CASE("critical-locus equations") {
    SECTION("n=1, r=3, d=3") {
        auto eqs = we_equations(1, 3, 3);
        REQUIRE(eqs.gs.size() == 1);
        NForm exp(4, 3);
        exp.add_term({2, 1, 0, 0}, GaussRat(1));
        exp.add_term({0, 0, 2, 1}, GaussRat(1));
        REQUIRE(eqs.gs[0] == exp);
        REQUIRE(eqs.g0prime.coeff({3, 0, 0, 0}) == GaussRat(1));
    }
    SECTION("n=2, r=2, d=2") {
        auto eqs = we_equations(2, 2, 2);
        REQUIRE(eqs.gs.size() == 2);
        REQUIRE(eqs.gs[0] == NForm::monomial(3, {1, 1, 0}, GaussRat(1)));
        REQUIRE(eqs.gs[1] == NForm::monomial(3, {1, 0, 1}, GaussRat(1)));
    }
    SECTION("term counts") {
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned r = 2; r <= 5; ++r)
                for (unsigned d = 2; d <= 4; ++d) {
                    auto eqs = we_equations(n, r, d);
                    for (auto& g : eqs.gs) {
                        REQUIRE(g.terms().size() == r - 1);
                        REQUIRE(g.degree() == d);
                    }
                }
    }
}

TEST_CASE("x0-eigenvector membership") {
    SecantParams p{1, 3, 4, {{GaussRat(1), GaussRat(1)}, {GaussRat(1), GaussRat(-1)}}};
    REQUIRE(is_eigen_x0(p));
    LinForm x0(GaussRat(1), GaussRat(0));
    REQUIRE(is_eigenvector(p.expand_binary(), x0));

    SecantParams q{1, 2, 4, {{GaussRat(1), GaussRat(1)}}};
    REQUIRE(!is_eigen_x0(q));
    REQUIRE(!is_eigenvector(q.expand_binary(), x0));

    // rows with alpha_{i,0} = 0 never obstruct
    SecantParams z{2, 3, 3,
                   {{GaussRat(0), GaussRat(2), GaussRat(1)},
                    {GaussRat(0), GaussRat(1), GaussRat(5)}}};
    REQUIRE(is_eigen_x0(z));
    std::vector<GaussRat> e0{GaussRat(1), GaussRat(0), GaussRat(0)};
    REQUIRE(is_eigenvector(z.expand(), LinForm(e0)));
}

TEST_CASE("sampler gives smooth points with the expected Jacobian ranks") {
    for (auto [n, r, d] : std::vector<std::array<unsigned, 3>>{
             {1, 3, 5}, {1, 3, 7}, {1, 4, 8}, {2, 3, 4}, {2, 4, 5}, {3, 4, 4}}) {
        auto ws = sample_X_x0(n, r, d, 42 + n + 10 * r + 100 * d);
        REQUIRE(is_eigen_x0(ws.params));
        auto eqs = we_equations(n, r, d);
        auto x = ws.params.flat();
        REQUIRE(jacobian_rank_at(eqs, x) == n);
        REQUIRE(jacobian_rank_at(eqs, x, true) == n + 1);
        if (n == 1 && 2 * r <= d + 1) {
            REQUIRE(ws.rank_certified);
            REQUIRE(ws.rank == r);
            REQUIRE(we_membership_binary(ws.params.expand_binary()).member);
        }
    }
}

TEST_CASE("roots-of-unity samples") {
    for (unsigned r : {3u, 5u}) {
        auto p = sample_X_x0_unity(r, 11);
        REQUIRE(is_eigen_x0(p));
        if (2 * r <= 12) REQUIRE(waring_rank_binary(p.expand_binary()) == r);
    }
}

TEST_CASE("zero leading coordinates kill the Jacobian for d >= 3") {
    auto eqs = we_equations(2, 3, 4);
    std::vector<GaussRat> pt(eqs.nparams(), GaussRat(0));
    pt[1] = GaussRat(2);
    pt[2] = GaussRat(3);
    pt[4] = GaussRat(1);
    pt[5] = GaussRat(7);
    REQUIRE(jacobian_rank_at(eqs, pt) == 0);
}

TEST_CASE("degree certificates") {
    REQUIRE(degree_check_line(3, 3, 7) == 3);
    REQUIRE(degree_check_line(5, 3, 8) == 5);
    REQUIRE(degree_check_line(5, 4, 9) == 5);
    REQUIRE(degree_check_line(6, 3, 10) == 6);
    REQUIRE(degree_check_surface(2, 4, 11) == 4);
    REQUIRE(degree_check_surface(3, 4, 12) == 9);
}

TEST_CASE("hyperplane functionals") {
    SECTION("identity matrix reduces to the coordinate pairing") {
        ExactMatrix id = ExactMatrix::identity(3);
        auto h = h_tilde(id, 2, 4);
        Rng rng(31);
        NForm f = rand_nform(rng, 3, 4, 5);
        REQUIRE(h.apply(f) == h_pairing(f, 2));
    }
    SECTION("equivariance under the orthogonal action") {
        Rng rng(33);
        ExactMatrix A = random_ortho(3, rng);
        NForm f = rand_nform(rng, 3, 3, 4);
        NForm af = ortho_act(A, f);
        for (unsigned i = 0; i < 3; ++i) REQUIRE(h_tilde(A, i, 3).apply(af) == h_pairing(f, i));
    }
    SECTION("vanishing pairings match eigenvector membership") {
        Rng rng(37);
        for (int t = 0; t < 8; ++t) {
            const unsigned n = 2, d = 4;
            NForm g(n + 1, d);
            for (int s = 0; s < 3; ++s) {
                std::vector<GaussRat> c(n + 1);
                for (auto& x : c) x = GaussRat(rand_rat(rng, 4));
                if (LinForm(c).is_zero()) continue;
                g = g + NForm::linear_power(LinForm(c), d);
            }
            if (g.is_zero()) continue;
            Expo e0(n + 1, 0);
            e0[0] = d;
            NForm F = NForm::monomial(n + 1, e0, GaussRat(1)) + g;
            bool hvanish = true;
            for (unsigned i = 1; i <= n; ++i)
                if (!h_pairing(g, i).is_zero()) hvanish = false;
            std::vector<GaussRat> x0v{GaussRat(1), GaussRat(0), GaussRat(0)};
            REQUIRE(hvanish == is_eigenvector(F, LinForm(x0v)));
        }
    }
}

TEST_CASE("exact membership certificates") {
    for (unsigned d = 5; d <= 7; ++d) {
        BForm F = BForm::monomial(d, 0) + BForm::monomial(d, d) +
                  BForm::linear_power(GaussRat(1), GaussRat(1), d);
        REQUIRE(we_membership_binary(F).member);
    }
    // membership is an orbit invariant
    Rng rng(43);
    BForm F = BForm::monomial(5, 0) + BForm::monomial(5, 5) +
              BForm::linear_power(GaussRat(1), GaussRat(1), 5);
    for (int t = 0; t < 4; ++t) {
        ExactMatrix A = random_ortho(2, rng);
        REQUIRE(we_membership_binary(ortho_act(A, F)).member == we_membership_binary(F).member);
    }
}

TEST_CASE("dimension estimates") {
    auto e1 = dim_estimate_we(1, 2, 4, 5);
    REQUIRE(e1.proj_dim == 2);
    auto e2 = dim_estimate_we(1, 3, 5, 6);
    REQUIRE(e2.proj_dim == 4);
    auto e3 = dim_estimate_we(2, 3, 4, 7);
    REQUIRE(e3.proj_dim >= 6);
}
