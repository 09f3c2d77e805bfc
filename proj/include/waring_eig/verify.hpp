// The acceptance suite: twelve self-contained checks covering the exact
// identities, the Sylvester rank machinery, eigenscheme/locus interplay,
// critical-variety certificates, and the pencil rank dynamics.  Shared by
// the `verify-paper` CLI verb and the acceptance test binary.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "waring_eig/critvar.hpp"
#include "waring_eig/dynamics.hpp"
#include "waring_eig/locus.hpp"
#include "waring_eig/ortho.hpp"
#include "waring_eig/rand.hpp"

namespace waring_eig {

struct CheckResult {
    std::string id;
    std::string suite;
    bool pass = false;
    std::string evidence;
    double seconds = 0.0;
};

namespace detail {

struct CheckOutcome {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string& why) {
        pass = false;
        if (!note.str().empty()) note << "; ";
        note << why;
    }
};

/// Sum of d-th powers of r distinct rational points [a_i : 1]; such a form
/// always has rank exactly r when 2r <= d+1, so the rank assertion is an
/// independent check rather than a sampler filter.
inline BForm distinct_power_sum(Rng& rng, unsigned d, unsigned r, long h = 9) {
    std::vector<Rat> used;
    BForm f(d);
    while (used.size() < r) {
        Rat a = rand_rat(rng, h);
        bool dup = false;
        for (const auto& u : used)
            if (u == a) dup = true;
        if (dup) continue;
        used.push_back(a);
        f = f + BForm::linear_power(GaussRat(a), GaussRat(1), d);
    }
    return f;
}

inline CheckOutcome check_bw_apolarity(std::uint64_t seed) {
    CheckOutcome out;
    Rng rng(seed);
    unsigned done = 0;
    while (done < 200) {
        unsigned d = static_cast<unsigned>(rand_int(rng, 2, 8));
        unsigned nv = static_cast<unsigned>(rand_int(rng, 2, 4));
        NForm f = rand_nform(rng, nv, d, 5);
        NForm g = rand_nform(rng, nv, d, 5);
        if (f.is_zero() || g.is_zero()) continue;
        NForm a = apolar_apply(g, f);
        GaussRat lhs = a.coeff(Expo(nv, 0));
        GaussRat rhs = GaussRat(rat_factorial(d)) * bw_inner(f, g);
        if (lhs != rhs) {
            out.fail("mismatch at d=" + std::to_string(d) + " nvars=" + std::to_string(nv));
            break;
        }
        ++done;
    }
    out.note << "pairs=" << done;
    return out;
}

inline CheckOutcome check_sylvester_ranks(std::uint64_t seed) {
    CheckOutcome out;
    for (unsigned d = 2; d <= 10 && out.pass; ++d)
        for (unsigned j = 1; 2 * j <= d; ++j)
            if (waring_rank_binary(BForm::monomial(d, j)) != d - j + 1) {
                out.fail("monomial d=" + std::to_string(d) + " j=" + std::to_string(j));
                break;
            }
    Rng rng(seed);
    unsigned done = 0;
    while (done < 100 && out.pass) {
        unsigned d = static_cast<unsigned>(rand_int(rng, 3, 9));
        unsigned r = static_cast<unsigned>(rand_int(rng, 1, (d + 1) / 2));
        BForm f = distinct_power_sum(rng, d, r);
        if (waring_rank_binary(f) != r) {
            out.fail("power sum d=" + std::to_string(d) + " r=" + std::to_string(r));
            break;
        }
        ++done;
    }
    out.note << "monomials d<=10, power sums=" << done;
    return out;
}

inline BForm three_power_family(unsigned d) {
    return BForm::monomial(d, 0) + BForm::monomial(d, d) +
           BForm::linear_power(GaussRat(1), GaussRat(1), d);
}

inline CheckOutcome check_family_witness(std::uint64_t) {
    CheckOutcome out;
    for (unsigned d = 3; d <= 8; ++d) {
        BForm f = three_power_family(d);
        LinForm l(GaussRat(1), GaussRat(1));
        if (!is_eigenvector(f, l)) out.fail("d=" + std::to_string(d) + ": [1:1] not eigen");
        if (is_eigenvector(f, LinForm(GaussRat(1), GaussRat(0))) ||
            is_eigenvector(f, LinForm(GaussRat(0), GaussRat(1))))
            out.fail("d=" + std::to_string(d) + ": coordinate point eigen");
        auto sv = singular_value(f, l);
        GaussRat mu{Rat(1) + Rat(1, 1L << (d - 1))};
        if (sv.kind != SVKind::Exact || sv.value != mu)
            out.fail("d=" + std::to_string(d) + ": singular value");
        auto rep = intersect_waring_eigen_binary(f);
        bool witness = false;
        for (const auto& w : rep.witnesses)
            if (w.exact && w.pt == ProjPoint(GaussRat(1), GaussRat(1))) witness = true;
        if (!rep.nonempty || !witness)
            out.fail("d=" + std::to_string(d) + ": [1:1] not a W(F) witness (rank " +
                     std::to_string(waring_rank_binary(f)) + ")");
    }
    if (out.pass) out.note << "d=3..8";
    return out;
}

inline CheckOutcome check_rank3_structure(std::uint64_t) {
    CheckOutcome out;
    for (unsigned d = 4; d <= 8; ++d) {
        BForm f = three_power_family(d);
        GaussRat mu{Rat(1) + Rat(1, 1L << (d - 1))};
        BForm g = f - BForm::linear_power(GaussRat(1), GaussRat(1), d) * mu;
        BForm ld1 = BForm::linear_power(GaussRat(1), GaussRat(1), d - 1);
        if (!apolar_apply(ld1, g).is_zero()) out.fail("d=" + std::to_string(d) + ": L^{d-1} apolar");
        auto a = annihilator_binary(g);
        if (a.g1.degree() != 3 || !is_squarefree(a.g1))
            out.fail("d=" + std::to_string(d) + ": annihilator structure");
        LinForm l(GaussRat(1), GaussRat(1));
        if (is_isotropic(l)) out.fail("witness isotropic");
        if (mu == GaussRat(1)) out.fail("mu equals the decomposition coefficient");
    }
    if (out.pass) out.note << "d=4..8";
    return out;
}

inline CheckOutcome check_monomial_eigenschemes(std::uint64_t seed) {
    CheckOutcome out;
    Rng rng(seed);
    auto eval_all = [](const std::vector<EigIdealGen>& gens, const std::vector<GaussRat>& p) {
        for (const auto& g : gens)
            if (!g.minor.eval(p).is_zero()) return false;
        return true;
    };
    for (int t = 0; t < 30 && out.pass; ++t) {
        unsigned n = static_cast<unsigned>(rand_int(rng, 2, 3));
        // ascending exponents, all positive, total degree <= 8
        std::vector<unsigned> e(n + 1);
        for (;;) {
            unsigned total = 0;
            for (auto& x : e) {
                x = static_cast<unsigned>(rand_int(rng, 1, 3));
                total += x;
            }
            if (total <= 8) break;
        }
        std::sort(e.begin(), e.end());
        unsigned d0 = e[0];
        unsigned m = 0;
        while (m + 1 <= n && e[m + 1] == d0) ++m;
        NForm f = NForm::monomial(n + 1, Expo(e.begin(), e.end()), GaussRat(1));
        auto gens = eigen_ideal(f);
        if (d0 >= 2) {
            for (int s = 0; s < 50; ++s) {
                std::vector<GaussRat> p(n + 1);
                for (auto& c : p) c = GaussRat(rand_rat_nonzero(rng, 7));
                p[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(m)))] = GaussRat(0);
                if (!eval_all(gens, p)) {
                    out.fail("forbidden point escapes Eig, exponents d0>=2");
                    break;
                }
            }
        } else {
            // single hyperplane: generically outside the eigenscheme
            std::vector<GaussRat> p(n + 1);
            for (auto& c : p) c = GaussRat(rand_rat_nonzero(rng, 7));
            p[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(m)))] = GaussRat(0);
            if (eval_all(gens, p)) out.fail("single-hyperplane point passed with d0=1");
            // codim-2 pieces H_{i,j}, i <= m, j != i: inside the eigenscheme
            for (int s = 0; s < 10; ++s) {
                unsigned i = static_cast<unsigned>(rand_int(rng, 0, static_cast<long>(m)));
                unsigned j;
                do {
                    j = static_cast<unsigned>(rand_int(rng, 0, static_cast<long>(n)));
                } while (j == i);
                std::vector<GaussRat> q(n + 1);
                for (auto& c : q) c = GaussRat(rand_rat_nonzero(rng, 7));
                q[i] = GaussRat(0);
                q[j] = GaussRat(0);
                if (!eval_all(gens, q)) {
                    out.fail("H_{i,j} point failed with d0=1");
                    break;
                }
            }
        }
    }
    if (out.pass) out.note << "30 exponent vectors, n=2,3";
    return out;
}

inline CheckOutcome check_generic_emptiness(std::uint64_t seed) {
    CheckOutcome out;
    Rng rng(seed);
    unsigned done = 0;
    while (done < 100 && out.pass) {
        unsigned d = static_cast<unsigned>(rand_int(rng, 3, 9));
        // r >= 2: a rank-one form always has its unique power point in both
        // W(F) and Eig(F), so emptiness is a statement about 2 <= r
        unsigned r = static_cast<unsigned>(rand_int(rng, 2, (d + 1) / 2));
        BForm f = distinct_power_sum(rng, d, r);
        if (waring_rank_binary(f) != r) {
            out.fail("rank draw failed");
            break;
        }
        auto rep = intersect_waring_eigen_binary(f);
        if (rep.nonempty) {
            out.fail("nonempty intersection at d=" + std::to_string(d) + " r=" + std::to_string(r));
            break;
        }
        ++done;
    }
    // constructed points of the critical variety do intersect
    for (auto [r, d] : std::vector<std::array<unsigned, 2>>{{3u, 7u}, {3u, 9u}, {4u, 9u}}) {
        auto ws = sample_X_x0(1, r, d, seed + r + 10 * d);
        if (!we_membership_binary(ws.params.expand_binary()).member)
            out.fail("constructed sample r=" + std::to_string(r) + " d=" + std::to_string(d) +
                     " not a member");
    }
    out.note << "generic draws=" << done << ", constructed samples=3";
    return out;
}

inline CheckOutcome check_critvar_certificates(std::uint64_t seed) {
    CheckOutcome out;
    for (unsigned n = 1; n <= 2 && out.pass; ++n)
        for (unsigned r = 3; r <= 5 && out.pass; ++r)
            for (unsigned d = 4; d <= 6; ++d) {
                auto ws = sample_X_x0(n, r, d, seed + n + 10 * r + 100 * d);
                auto eqs = we_equations(n, r, d);
                auto x = ws.params.flat();
                if (jacobian_rank_at(eqs, x) != n) {
                    out.fail("Jacobian rank != n at (" + std::to_string(n) + "," +
                             std::to_string(r) + "," + std::to_string(d) + ")");
                    break;
                }
                if (jacobian_rank_at(eqs, x, true) != n + 1) {
                    out.fail("augmented Jacobian rank != n+1 at (" + std::to_string(n) + "," +
                             std::to_string(r) + "," + std::to_string(d) + ")");
                    break;
                }
            }
    for (unsigned d = 4; d <= 6 && out.pass; ++d)
        for (unsigned s = 0; s < 10; ++s) {
            unsigned got = degree_check_line(d, 3, seed + 13 * d + s);
            if (got != d) {
                out.fail("line degree " + std::to_string(got) + " != " + std::to_string(d));
                break;
            }
        }
    if (out.pass && degree_check_surface(2, 4, seed + 1) != 4) out.fail("surface degree d=2");
    if (out.pass && degree_check_surface(3, 4, seed + 2) != 9) out.fail("surface degree d=3");
    if (out.pass) out.note << "grid n<=2, r=3..5, d=4..6; 30 lines; 2 surfaces";
    return out;
}

inline CheckOutcome check_dimension(std::uint64_t seed) {
    CheckOutcome out;
    for (auto [r, d] :
         std::vector<std::array<unsigned, 2>>{{2u, 4u}, {3u, 5u}, {3u, 6u}, {4u, 7u}}) {
        auto e = dim_estimate_we(1, r, d, seed + r + 10 * d);
        if (e.cone_dim != 2 * (r - 1) + 1)
            out.fail("cone dim " + std::to_string(e.cone_dim) + " at (r,d)=(" + std::to_string(r) +
                     "," + std::to_string(d) + ")");
        if (e.gap < 1e6)
            out.fail("gap " + std::to_string(e.gap) + " at (r,d)=(" + std::to_string(r) + "," +
                     std::to_string(d) + ")");
    }
    auto e2 = dim_estimate_we(2, 3, 4, seed + 99);
    if (e2.proj_dim < 6) out.fail("n=2 lower bound");
    if (out.pass) out.note << "(r,d) in {(2,4),(3,5),(3,6),(4,7)}; n=2 at (3,4)";
    return out;
}

inline CheckOutcome check_subgeneric_growth(std::uint64_t seed) {
    CheckOutcome out;
    for (auto [d, r] :
         std::vector<std::array<unsigned, 2>>{{5u, 2u}, {7u, 2u}, {7u, 3u}, {9u, 4u}}) {
        auto rep = verify_subgeneric_growth(d, r, 20, seed + d + 100 * r);
        if (rep.passes != rep.trials)
            out.fail("(d,r)=(" + std::to_string(d) + "," + std::to_string(r) + "): " +
                     std::to_string(rep.passes) + "/" + std::to_string(rep.trials));
    }
    if (out.pass) out.note << "20 trials each of (5,2),(7,2),(7,3),(9,4)";
    return out;
}

inline CheckOutcome check_odd_growth(std::uint64_t seed) {
    CheckOutcome out;
    for (unsigned d : {3u, 5u, 7u}) {
        auto rep = verify_generic_odd_growth(d, 10, seed + d);
        if (rep.passes != rep.trials)
            out.fail("d=" + std::to_string(d) + ": " + std::to_string(rep.passes) + "/" +
                     std::to_string(rep.trials));
    }
    // negative control: every eigenpoint of L^{d/2} M^{d/2} sits inside W(F)
    for (unsigned d : {4u, 6u}) {
        BForm l(1, {GaussRat(1), GaussRat(2)});
        BForm m(1, {GaussRat(1), GaussRat(-1)});
        BForm f(0, {GaussRat(1)});
        for (unsigned j = 0; j < d / 2; ++j) f = f * l * m;
        auto rep = intersect_waring_eigen_binary(f);
        auto sup = eigen_support_binary(f);
        if (rep.witnesses.size() != sup.size())
            out.fail("negative control d=" + std::to_string(d));
    }
    if (out.pass) out.note << "10 trials each d=3,5,7; controls d=4,6";
    return out;
}

inline CheckOutcome check_example_family(std::uint64_t) {
    CheckOutcome out;
    for (unsigned d = 4; d <= 7; ++d)
        for (long aa = -2; aa <= 2; ++aa)
            for (long bb : {1L, 2L, -3L}) {
                auto rep = analyze_example_family(d, GaussRat(Rat(aa)), GaussRat(Rat(bb)));
                if (rep.cond_x != (rep.d_at_x == GaussRat(0)))
                    out.fail("x-condition at d=" + std::to_string(d) + " a=" + std::to_string(aa));
                if (rep.cond_ab != (rep.d_at_ab == GaussRat(0)))
                    out.fail("ab-condition at d=" + std::to_string(d) + " a=" + std::to_string(aa));
                if (!intersect_waring_eigen_binary(rep.f).nonempty)
                    out.fail("empty W cap Eig at d=" + std::to_string(d) + " a=" + std::to_string(aa));
            }
    // the exact vanishing witness a^{d-1} = -1/(d b): d=3, a=1, b=-1/3
    {
        auto rc = analyze_example_family(3, GaussRat(1), GaussRat(Rat(-1, 3)));
        if (!rc.cond_x || rc.d_at_x != GaussRat(0)) out.fail("exact x-vanishing witness");
    }
    // pencil behaviors (d=5, a=b=1): rank d-1 for every lambda along x^d;
    // lambda=-1 along (ax+by)^d recovers x^{d-1}y of rank d
    {
        auto rep = analyze_example_family(5, GaussRat(1), GaussRat(1));
        if (rep.pencil_x.generic_rank != 4 || !rep.pencil_x.exceptional.empty())
            out.fail("x-direction pencil");
        bool up = false;
        for (const auto& e : rep.pencil_ab.exceptional)
            if (e.exact && e.lambda == GaussRat(-1) && e.rank == 5) up = true;
        if (rep.pencil_ab.generic_rank != 4 || !up) out.fail("ab-direction pencil");
    }
    if (out.pass) out.note << "d=4..7, a=-2..2, b in {1,2,-3}; pencils at d=5";
    return out;
}

inline CheckOutcome check_equivariance(std::uint64_t seed) {
    CheckOutcome out;
    Rng rng(seed);
    for (int t = 0; t < 50 && out.pass; ++t) {
        // binary transformation law D_{A.F} = det(A) * (D_F o A^T)
        {
            ExactMatrix a = random_ortho(2, rng);
            unsigned d = static_cast<unsigned>(rand_int(rng, 2, 6));
            BForm f(d);
            for (unsigned k = 0; k <= d; ++k) f.coeff(k) = rand_gauss(rng, 5);
            if (f.is_zero()) continue;
            BForm lhs = eigen_poly_binary(ortho_act(a, f));
            BForm rhs = ortho_act(a, eigen_poly_binary(f)) * det_exact(a);
            if (!(lhs == rhs)) {
                out.fail("binary D law at trial " + std::to_string(t));
                break;
            }
        }
        // point-level eigenscheme equivariance, n = 2 or 3
        {
            unsigned nv = static_cast<unsigned>(rand_int(rng, 3, 4));
            unsigned d = static_cast<unsigned>(rand_int(rng, 2, 4));
            ExactMatrix a = random_ortho(nv, rng);
            NForm f(nv, d);
            std::vector<GaussRat> coefs(nv);
            for (unsigned i = 0; i < nv; ++i) {
                Expo e(nv, 0);
                e[i] = d;
                coefs[i] = GaussRat(rand_rat_nonzero(rng, 5));
                f = f + NForm::monomial(nv, e, coefs[i]);
            }
            NForm af = ortho_act(a, f);
            unsigned j = static_cast<unsigned>(rand_int(rng, 0, nv - 1));
            std::vector<GaussRat> p(nv, GaussRat(0));
            p[j] = GaussRat(1);  // coordinate points are eigenvectors of sum c_i x_i^d
            ProjPoint ap = ortho_act_point(a, ProjPoint(p));
            for (const auto& g : eigen_ideal(af))
                if (!g.minor.eval(ap.coords).is_zero()) {
                    out.fail("point equivariance at trial " + std::to_string(t));
                    break;
                }
            if (!out.pass) break;
            // bw_inner invariance
            NForm g2 = rand_nform(rng, nv, d, 3);
            if (!g2.is_zero() && bw_inner(ortho_act(a, f), ortho_act(a, g2)) != bw_inner(f, g2)) {
                out.fail("bw invariance at trial " + std::to_string(t));
                break;
            }
        }
        // Waring-witness equivariance for an exact binary decomposition
        if (t % 10 == 0) {
            ExactMatrix a = random_ortho(2, rng);
            unsigned d = 7, r = 3;
            BForm f = distinct_power_sum(rng, d, r, 5);
            if (waring_rank_binary(f) != r) {
                out.fail("witness draw");
                break;
            }
            auto dec = decompose_binary(f);
            auto deca = decompose_binary(ortho_act(a, f));
            if (!dec.exact || !deca.exact || deca.terms.size() != dec.terms.size()) {
                out.fail("witness decomposition at trial " + std::to_string(t));
                break;
            }
            for (const auto& tm : dec.terms) {
                ProjPoint img = ortho_act_point(a, ProjPoint(tm.lin.coords));
                bool found = false;
                for (const auto& ta : deca.terms)
                    if (ProjPoint(ta.lin.coords) == img) found = true;
                if (!found) {
                    out.fail("witness image missing at trial " + std::to_string(t));
                    break;
                }
            }
        }
    }
    if (out.pass) out.note << "50 orthogonal trials";
    return out;
}

}  // namespace detail

inline unsigned verify_thread_cap() {
    if (const char* env = std::getenv("WARING_EIG_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 2;
}

/// Run the acceptance checks for one suite ("all" for everything; a single
/// check id also works as a selector).  Checks
/// are independent and run concurrently up to the WARING_EIG_THREADS cap.
inline std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t seed) {
    struct Entry {
        const char* id;
        const char* suite;
        std::function<detail::CheckOutcome(std::uint64_t)> fn;
    };
    const std::vector<Entry> entries = {
        {"bw-apolarity-identity", "bw", detail::check_bw_apolarity},
        {"sylvester-ranks", "sylvester", detail::check_sylvester_ranks},
        {"three-power-family-witness", "eig", detail::check_family_witness},
        {"rank3-structure", "eig", detail::check_rank3_structure},
        {"monomial-eigenschemes", "monomial", detail::check_monomial_eigenschemes},
        {"generic-emptiness", "locus", detail::check_generic_emptiness},
        {"critical-variety-certificates", "critvar", detail::check_critvar_certificates},
        {"dimension-estimates", "critvar", detail::check_dimension},
        {"subgeneric-rank-growth", "dynamics", detail::check_subgeneric_growth},
        {"odd-degree-rank-growth", "dynamics", detail::check_odd_growth},
        {"example-family", "dynamics", detail::check_example_family},
        {"equivariance", "eig", detail::check_equivariance},
    };
    std::vector<const Entry*> todo;
    for (const auto& e : entries)
        if (suite == "all" || suite == e.suite || suite == e.id) todo.push_back(&e);
    std::vector<CheckResult> results(todo.size());
    const unsigned cap = verify_thread_cap();
    std::size_t next = 0;
    while (next < todo.size()) {
        std::size_t batch = std::min<std::size_t>(cap, todo.size() - next);
        std::vector<std::future<void>> fs;
        for (std::size_t b = 0; b < batch; ++b) {
            std::size_t idx = next + b;
            fs.push_back(std::async(std::launch::async, [&, idx] {
                const Entry& e = *todo[idx];
                auto t0 = std::chrono::steady_clock::now();
                detail::CheckOutcome oc;
                try {
                    oc = e.fn(seed);
                } catch (const std::exception& ex) {
                    oc.pass = false;
                    oc.note << "exception: " << ex.what();
                }
                auto t1 = std::chrono::steady_clock::now();
                CheckResult r;
                r.id = e.id;
                r.suite = e.suite;
                r.pass = oc.pass;
                r.evidence = oc.note.str();
                r.seconds = std::chrono::duration<double>(t1 - t0).count();
                results[idx] = std::move(r);
            }));
        }
        for (auto& f : fs) f.get();
        next += batch;
    }
    return results;
}

}  // namespace waring_eig
