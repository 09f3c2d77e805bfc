#pragma once

// The critical Waring variety WE_{n,r}^d: equations on the secant parameter
// space, rational samplers with exact rank certificates, hyperplane
// functionals attached to orthogonal matrices, exact codimension/degree
// certificates, and a numeric dimension estimator.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "waring_eig/apolarity.hpp"
#include "waring_eig/linalg.hpp"
#include "waring_eig/locus.hpp"
#include "waring_eig/nform.hpp"
#include "waring_eig/ortho.hpp"
#include "waring_eig/rand.hpp"
#include "waring_eig/upoly.hpp"

namespace waring_eig {

/// Parameters of F = x_0^d + sum_{i=1}^{r-1} (alpha_{i,0} x_0 + ... +
/// alpha_{i,n} x_n)^d.  Row i-1 of alpha holds (alpha_{i,0}, ..., alpha_{i,n}).
struct SecantParams {
    unsigned n = 1, r = 2, d = 2;
    std::vector<std::vector<GaussRat>> alpha;  // (r-1) rows, n+1 columns

    std::vector<GaussRat> flat() const {
        std::vector<GaussRat> v;
        v.reserve(alpha.size() * (n + 1));
        for (const auto& row : alpha)
            for (const auto& c : row) v.push_back(c);
        return v;
    }

    NForm expand() const {
        Expo e(n + 1, 0);
        e[0] = d;
        NForm f = NForm::monomial(n + 1, e, GaussRat(1));
        for (const auto& row : alpha) f = f + NForm::linear_power(LinForm(row), d);
        return f;
    }

    BForm expand_binary() const {
        if (n != 1) throw std::domain_error("SecantParams: not binary");
        return to_bform(expand());
    }
};

/// The n equations g_j = sum_i alpha_{i,0}^{d-1} alpha_{i,j} cutting out the
/// locus where x_0 is an eigenvector, plus g0' = sum_i alpha_{i,0}^d whose
/// vanishing additionally pins the singular value of x_0 to 1.  All live in
/// the (n+1)(r-1) variables alpha_{i,j}, ordered row by row.
struct WEEquations {
    unsigned n = 1, r = 2, d = 2;
    std::vector<NForm> gs;
    NForm g0prime;

    std::size_t nparams() const { return static_cast<std::size_t>(n + 1) * (r - 1); }
    std::size_t var(unsigned i, unsigned j) const {
        return static_cast<std::size_t>(i) * (n + 1) + j;  // i = 0..r-2 here
    }
};

inline WEEquations we_equations(unsigned n, unsigned r, unsigned d) {
    if (n < 1 || r < 2 || d < 2) throw std::invalid_argument("we_equations: need n>=1, r>=2, d>=2");
    WEEquations eqs;
    eqs.n = n;
    eqs.r = r;
    eqs.d = d;
    const unsigned nv = static_cast<unsigned>(eqs.nparams());
    for (unsigned j = 1; j <= n; ++j) {
        NForm g(nv, d);
        for (unsigned i = 0; i + 1 < r; ++i) {
            Expo e(nv, 0);
            e[eqs.var(i, 0)] = d - 1;
            e[eqs.var(i, j)] += 1;
            g.add_term(e, GaussRat(1));
        }
        eqs.gs.push_back(std::move(g));
    }
    eqs.g0prime = NForm(nv, d);
    for (unsigned i = 0; i + 1 < r; ++i) {
        Expo e(nv, 0);
        e[eqs.var(i, 0)] = d;
        eqs.g0prime.add_term(e, GaussRat(1));
    }
    return eqs;
}

/// Pairing of a degree-d tail against x_0^{d-1} x_i (Bombieri-Weyl
/// normalization); the hyperplane H_i is its kernel.
inline GaussRat h_pairing(const NForm& g, unsigned i) {
    if (i >= g.nvars()) throw std::invalid_argument("h_pairing: variable out of range");
    Expo e(g.nvars(), 0);
    e[0] = g.degree() - 1;
    e[i] += 1;
    return bw_inner(g, NForm::monomial(g.nvars(), e, GaussRat(1)));
}

/// Whether x_0 is an eigenvector of the expanded form, decided on the
/// parameters: all g_j vanish at alpha.
inline bool is_eigen_x0(const SecantParams& p) {
    WEEquations eqs = we_equations(p.n, p.r, p.d);
    auto x = p.flat();
    for (const auto& g : eqs.gs)
        if (!g.eval(x).is_zero()) return false;
    return true;
}

struct WESample {
    SecantParams params;
    bool rank_certified = false;  // n = 1 only
    unsigned rank = 0;
};

/// Rational point of the x_0-eigenvector locus with all alpha_{i,0} = 1:
/// fixing the leading coordinates turns each g_j into the linear condition
/// sum_i alpha_{i,j} = 0, solved with random distinct tails.  For n = 1 with
/// r <= (d+1)/2 the expanded binary form is certified to have rank exactly r.
inline WESample sample_X_x0(unsigned n, unsigned r, unsigned d, std::uint64_t seed) {
    if (n < 1 || d < 2) throw std::invalid_argument("sample_X_x0: need n >= 1, d >= 2");
    if (r < 3)
        throw std::invalid_argument(
            "sample_X_x0: r >= 3 required, the cancellation has no solution with alpha_{i,0} != 0");
    Rng rng(seed);
    const bool want_rank = (n == 1) && (2 * r <= d + 1);
    for (int attempt = 0; attempt < 400; ++attempt) {
        SecantParams p;
        p.n = n;
        p.r = r;
        p.d = d;
        p.alpha.assign(r - 1, std::vector<GaussRat>(n + 1, GaussRat(0)));
        for (unsigned i = 0; i + 1 < r; ++i) p.alpha[i][0] = GaussRat(1);
        for (unsigned j = 1; j <= n; ++j) {
            Rat sum(0);
            for (unsigned i = 0; i + 2 < r; ++i) {
                Rat a = rand_rat(rng, 6);
                p.alpha[i][j] = GaussRat(a);
                sum += a;
            }
            p.alpha[r - 2][j] = GaussRat(-sum);
        }
        // distinct summand points, all away from [x_0]
        bool ok = true;
        for (unsigned i = 0; i + 1 < r && ok; ++i) {
            bool tail_zero = true;
            for (unsigned j = 1; j <= n; ++j)
                if (!p.alpha[i][j].is_zero()) tail_zero = false;
            if (tail_zero) ok = false;
            for (unsigned k = i + 1; k + 1 < r && ok; ++k)
                if (p.alpha[i] == p.alpha[k]) ok = false;
        }
        if (!ok) continue;
        if (!is_eigen_x0(p)) throw std::logic_error("sample_X_x0: constructed point misses the locus");
        WESample out;
        out.params = p;
        if (want_rank) {
            out.rank = waring_rank_binary(p.expand_binary());
            if (out.rank != r) continue;
            out.rank_certified = true;
        }
        return out;
    }
    throw std::runtime_error("sample_X_x0: sampling failed");
}

/// The root-of-unity solution rows [1 : xi^i] with xi of order r-1, exact in
/// Q(i) for r-1 in {2, 4}.
inline SecantParams sample_X_x0_unity(unsigned r, unsigned d) {
    if (r != 3 && r != 5)
        throw std::invalid_argument("sample_X_x0_unity: exact roots of unity need r-1 in {2,4}");
    GaussRat xi = (r == 3) ? GaussRat(-1) : GaussRat::i();
    SecantParams p;
    p.n = 1;
    p.r = r;
    p.d = d;
    GaussRat w(1);
    for (unsigned i = 1; i < r; ++i) {
        w *= xi;
        p.alpha.push_back({GaussRat(1), w});
    }
    return p;
}

/// Exact rank of the Jacobian of g_1..g_n (optionally with g0' appended) at
/// a parameter point.
inline std::size_t jacobian_rank_at(const WEEquations& eqs, const std::vector<GaussRat>& point,
                                    bool with_g0prime = false) {
    if (point.size() != eqs.nparams())
        throw std::invalid_argument("jacobian_rank_at: point dimension mismatch");
    std::vector<const NForm*> rows;
    for (const auto& g : eqs.gs) rows.push_back(&g);
    if (with_g0prime) rows.push_back(&eqs.g0prime);
    ExactMatrix jac(rows.size(), point.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t v = 0; v < point.size(); ++v)
            jac(a, v) = rows[a]->derivative(static_cast<unsigned>(v)).eval(point);
    return rank_exact(jac);
}

namespace detail {
/// Substitute alpha_v = u_v s + v_v t into a form, yielding a binary form in
/// (s, t) of the same degree (or zero).
inline BForm restrict_to_line(const NForm& g, const std::vector<GaussRat>& u,
                              const std::vector<GaussRat>& v) {
    BForm out(g.degree());
    for (const auto& [al, c] : g.terms()) {
        BForm term(0, {c});
        for (unsigned i = 0; i < g.nvars(); ++i)
            if (al[i] > 0) term = term * BForm::linear_power(u[i], v[i], al[i]);
        out = out + term;
    }
    return out;
}

/// Roots counted with multiplicity: the multiplicity at [1:0] plus the Yun
/// multiplicities of the dehomogenization.  Equals deg f when the counting is
/// consistent.
inline unsigned roots_with_multiplicity(const BForm& f) {
    unsigned count = f.mult_at_infinity();
    auto u = f.dehomogenize();
    if (u.degree() > 0) {
        auto factors = yun_squarefree(u);
        for (std::size_t m = 0; m < factors.size(); ++m)
            count += static_cast<unsigned>(m + 1) * static_cast<unsigned>(factors[m].degree());
    }
    return count;
}
}  // namespace detail

/// n = 1 degree certificate: restrict g_1 to a random rational line in the
/// parameter space and count roots with multiplicity; the x_0-eigenvector
/// locus is a hypersurface of degree d, so the count is d.
inline unsigned degree_check_line(unsigned d, unsigned r, std::uint64_t seed) {
    WEEquations eqs = we_equations(1, r, d);
    const std::size_t nv = eqs.nparams();
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<GaussRat> u(nv), v(nv);
        for (auto& c : u) c = GaussRat(rand_rat(rng, 8));
        for (auto& c : v) c = GaussRat(rand_rat(rng, 8));
        BForm rest = detail::restrict_to_line(eqs.gs[0], u, v);
        if (rest.is_zero()) continue;  // degenerate section, redraw
        return detail::roots_with_multiplicity(rest);
    }
    throw std::runtime_error("degree_check_line: no nondegenerate section found");
}

/// n = 2 degree certificate: restrict (g_1, g_2) to a random plane, eliminate
/// one variable by an exact Sylvester resultant, and count the roots of the
/// eliminant with multiplicity (including the point at infinity).  The locus
/// has degree d^2, so the count is d^2.  Use r >= 4 so a generic plane misses
/// the coordinate stratum alpha_{i,0} = 0.
inline unsigned degree_check_surface(unsigned d, unsigned r, std::uint64_t seed) {
    WEEquations eqs = we_equations(2, r, d);
    const std::size_t nv = eqs.nparams();
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        // alpha = s*u + t*v + q*w
        std::vector<std::vector<GaussRat>> dirs(3, std::vector<GaussRat>(nv));
        for (auto& dir : dirs)
            for (auto& c : dir) c = GaussRat(rand_rat(rng, 8));
        // coefficients in q, dehomogenized at s = 1
        auto q_coeffs = [&](const NForm& g) {
            std::vector<UPoly<GaussRat>> cs(d + 1);
            for (const auto& [al, c] : g.terms()) {
                // expand c * prod_v (u_v s + v_v t + w_v q)^{al[v]}, then read
                // off q-degrees with s set to 1
                NForm prod(3, 0);
                prod.set(Expo(3, 0), c);
                for (unsigned vv = 0; vv < g.nvars(); ++vv)
                    for (unsigned e = 0; e < al[vv]; ++e)
                        prod = prod * NForm::lin_as_form(LinForm({dirs[0][vv], dirs[1][vv], dirs[2][vv]}));
                for (const auto& [be, cc] : prod.terms())
                    cs[be[2]] = cs[be[2]] + UPoly<GaussRat>::monomial(cc, be[1]);
            }
            return cs;
        };
        auto ac = q_coeffs(eqs.gs[0]);
        auto bc = q_coeffs(eqs.gs[1]);
        if (ac[d].is_zero() || bc[d].is_zero()) continue;  // leading q-coefficient lost
        // Sylvester matrix in q over Q[t]
        const std::size_t sz = 2 * d;
        Mat<UPoly<GaussRat>> syl(sz, sz);
        for (unsigned row = 0; row < d; ++row)
            for (unsigned k = 0; k <= d; ++k) {
                syl(row, row + k) = ac[d - k];
                syl(d + row, row + k) = bc[d - k];
            }
        UPoly<GaussRat> res = bareiss_det(syl);
        if (res.is_zero()) continue;  // common component on this plane, redraw
        const unsigned dd = d * d;
        unsigned count = dd - static_cast<unsigned>(res.degree());  // multiplicity at infinity
        auto factors = yun_squarefree(res);
        for (std::size_t m = 0; m < factors.size(); ++m)
            count += static_cast<unsigned>(m + 1) * static_cast<unsigned>(factors[m].degree());
        return count;
    }
    throw std::runtime_error("degree_check_surface: no nondegenerate section found");
}

/// Linear functional on Sym^d whose kernel is the rotated hyperplane
/// H-tilde_i: pairing against (g.x_0)^{d-1} (g.x_i) under the Bombieri-Weyl
/// product.  At g = identity this is the x_0^{d-1} x_i coordinate functional
/// up to the pairing normalization.
struct HyperplaneFunctional {
    NForm form;  // (g.x_0)^{d-1} (g.x_i), expanded

    GaussRat apply(const NForm& f) const { return bw_inner(form, f); }
};

inline HyperplaneFunctional h_tilde(const ExactMatrix& gmat, unsigned i, unsigned d) {
    if (!is_orthogonal(gmat)) throw std::invalid_argument("h_tilde: matrix not orthogonal");
    const std::size_t nv = gmat.rows();
    if (i >= nv) throw std::invalid_argument("h_tilde: variable out of range");
    if (d < 1) throw std::invalid_argument("h_tilde: degree must be positive");
    auto column = [&](std::size_t j) {
        std::vector<GaussRat> c(nv);
        for (std::size_t l = 0; l < nv; ++l) c[l] = gmat(l, j);
        return LinForm(std::move(c));
    };
    HyperplaneFunctional h;
    h.form = NForm::linear_power(column(0), d - 1) * NForm::lin_as_form(column(i));
    return h;
}

struct WEMembership {
    bool member = false;
    BForm certificate;  // gcd(g_1, D); nonconstant iff member
};

/// Exact WE membership for identifiable binary forms (squarefree minimal
/// annihilator): W(F) is the complement of the roots of g_1, so the
/// intersection with the eigenscheme is cut out by gcd(g_1, D).
inline WEMembership we_membership_binary(const BForm& f) {
    LocusDesc ld = waring_locus_binary(f);
    if (ld.kind != LocusKind::Finite)
        throw std::domain_error(
            "we_membership_binary: needs a squarefree minimal annihilator; use the pointwise "
            "intersection methods instead");
    WEMembership out;
    out.certificate = gcd_binary(ld.ann.g1, eigen_poly_binary(f));
    out.member = out.certificate.degree() >= 1;
    return out;
}

struct DimEstimate {
    unsigned cone_dim = 0;  // numeric rank of the affine-cone Jacobian
    unsigned proj_dim = 0;  // cone_dim - 1
    double gap = 0;         // sigma ratio across the rank cut; inf when full rank
    std::size_t ncols = 0;
    std::vector<double> sigmas;
};

/// Numeric dimension of WE_{n,r}^d at a random smooth sample: rank of the
/// Jacobian of (A, alpha) -> A.(x_0^d + sum (alpha_i . x)^d) restricted to
/// g_j = 0.  Columns: the radial direction F, the rotation directions
/// x_p dF/dx_q - x_q dF/dx_p, and the parameter tangents d L_i^{d-1} (da . x)
/// for da in the exact kernel of the Jacobian of (g_1..g_n).  For r = 2 the
/// sample is taken on the stratum alpha_{1,0} = 0 (the component through the
/// orthogonally decomposable forms) with its coordinate tangents.
inline DimEstimate dim_estimate_we(unsigned n, unsigned r, unsigned d, std::uint64_t seed,
                                   double tol = 1e-8) {
    if (n < 1 || r < 2 || d < 2) throw std::invalid_argument("dim_estimate_we: bad sizes");
    Rng rng(seed);
    SecantParams params;
    std::vector<std::vector<GaussRat>> deltas;  // tangent directions in parameter space
    const std::size_t nparams = static_cast<std::size_t>(n + 1) * (r - 1);
    if (r == 2) {
        params.n = n;
        params.r = r;
        params.d = d;
        params.alpha.assign(1, std::vector<GaussRat>(n + 1, GaussRat(0)));
        for (unsigned j = 1; j <= n; ++j) params.alpha[0][j] = GaussRat(rand_rat_nonzero(rng, 6));
        for (unsigned j = 1; j <= n; ++j) {
            std::vector<GaussRat> e(nparams, GaussRat(0));
            e[j] = GaussRat(1);
            deltas.push_back(std::move(e));
        }
    } else {
        WESample ws = sample_X_x0(n, r, d, rand_int(rng, 1, 1 << 30));
        params = ws.params;
        WEEquations eqs = we_equations(n, r, d);
        auto x = params.flat();
        ExactMatrix jac(n, nparams);
        for (unsigned a = 0; a < n; ++a)
            for (std::size_t v = 0; v < nparams; ++v)
                jac(a, v) = eqs.gs[a].derivative(static_cast<unsigned>(v)).eval(x);
        deltas = kernel_basis(jac);
    }
    NForm f = params.expand();
    const auto monos = all_exponents(n + 1, d);
    std::vector<NForm> cols;
    cols.push_back(f);
    for (unsigned p = 0; p <= n; ++p)
        for (unsigned q = p + 1; q <= n; ++q) {
            Expo ep(n + 1, 0), eq(n + 1, 0);
            ep[p] = 1;
            eq[q] = 1;
            cols.push_back(NForm::monomial(n + 1, ep, GaussRat(1)) * f.derivative(q) -
                           NForm::monomial(n + 1, eq, GaussRat(1)) * f.derivative(p));
        }
    GaussRat dd{Rat(static_cast<long>(d))};
    for (const auto& da : deltas) {
        NForm t(n + 1, d);
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(params.r); ++i) {
            std::vector<GaussRat> dir(n + 1);
            bool nonzero = false;
            for (unsigned j = 0; j <= n; ++j) {
                dir[j] = da[i * (n + 1) + j];
                if (!dir[j].is_zero()) nonzero = true;
            }
            if (!nonzero) continue;
            LinForm li(params.alpha[i]);
            if (li.is_zero()) continue;
            t = t + NForm::linear_power(li, d - 1) * NForm::lin_as_form(LinForm(dir)) * dd;
        }
        cols.push_back(std::move(t));
    }
    CMatrix m(static_cast<Eigen::Index>(monos.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                cols[b].coeff(monos[a]).to_complex();
    DimEstimate out;
    out.ncols = cols.size();
    out.sigmas = singular_values(m);
    std::size_t rank = 0;
    for (double s : out.sigmas)
        if (s > tol * out.sigmas[0]) ++rank;
    out.cone_dim = static_cast<unsigned>(rank);
    if (out.cone_dim == 0) throw std::domain_error("dim_estimate_we: zero Jacobian");
    out.proj_dim = out.cone_dim - 1;
    out.gap = (rank < out.sigmas.size() && out.sigmas[rank] > 0)
                  ? out.sigmas[rank - 1] / out.sigmas[rank]
                  : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace waring_eig
