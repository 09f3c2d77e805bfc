#pragma once

// Catalecticant matrices, apolar ideal generators of binary forms,
// Sylvester's rank algorithm, and decomposition in the identifiable regime.

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

#include "waring_eig/bform.hpp"
#include "waring_eig/linalg.hpp"
#include "waring_eig/nform.hpp"

namespace waring_eig {

/// Matrix of the contraction Sym^k -> Sym^{d-k} induced by F, in the
/// monomial bases.  Column q is the dual monomial D0^{k-q} D1^q applied to F,
/// written in the coefficient convention of BForm, so cat(F,k) * g = coeffs
/// of G(d/dx) F.
inline ExactMatrix catalecticant(const BForm& f, unsigned k) {
    const unsigned d = f.degree();
    if (k > d) throw std::invalid_argument("catalecticant: k out of range");
    ExactMatrix m(d - k + 1, k + 1);
    for (unsigned p = 0; p <= d - k; ++p)
        for (unsigned q = 0; q <= k; ++q) {
            // D0^{k-q} D1^q on x0^{d-p-q} x1^{p+q}
            Rat w = rat_factorial(d - p - q) / rat_factorial(d - k - p) *
                    (rat_factorial(p + q) / rat_factorial(p));
            m(p, q) = f.coeff(p + q) * GaussRat(w);
        }
    return m;
}

/// Coefficient vector of a degree-k dual form, convention coeffs[q] =
/// coefficient of D0^{k-q} D1^q.
inline BForm vec_to_bform(const std::vector<GaussRat>& v) {
    return BForm(static_cast<unsigned>(v.size()) - 1, v);
}

/// Apolar ideal generators of a binary form.  deg g1 + deg g2 = d + 2.
/// In the balanced case (kernel of the critical catalecticant has dimension
/// two) g1, g2 are the echelon basis of the pencil of minimal-degree
/// annihilators.
struct AnnPair {
    BForm g1;
    BForm g2;
    bool balanced = false;
};

namespace detail {
/// Remainder of v after reduction by an rref matrix with the given pivots.
inline std::vector<GaussRat> reduce_by_rref(std::vector<GaussRat> v, const ExactMatrix& r,
                                            const std::vector<std::size_t>& pivots) {
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        GaussRat f = v[pivots[row]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * r(row, j);
    }
    return v;
}
}  // namespace detail

inline AnnPair annihilator_binary(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("annihilator_binary: zero form");
    const unsigned d = f.degree();
    unsigned k1 = 0;
    std::vector<std::vector<GaussRat>> ker;
    for (unsigned k = 1; k <= d; ++k) {
        ker = kernel_basis(catalecticant(f, k));
        if (!ker.empty()) {
            k1 = k;
            break;
        }
    }
    if (k1 == 0) {
        // only for d = 0: Ann = (D1, D0) up to convention
        AnnPair a;
        a.g1 = BForm::monomial(1, 1);
        a.g2 = BForm::monomial(1, 0);
        return a;
    }
    AnnPair a;
    if (ker.size() >= 2) {
        // balanced pencil: echelon-normalize the kernel basis
        ExactMatrix pm(ker.size(), k1 + 1);
        for (std::size_t i = 0; i < ker.size(); ++i)
            for (unsigned j = 0; j <= k1; ++j) pm(i, j) = ker[i][j];
        rref(pm);
        std::vector<GaussRat> v1(k1 + 1), v2(k1 + 1);
        for (unsigned j = 0; j <= k1; ++j) {
            v1[j] = pm(0, j);
            v2[j] = pm(1, j);
        }
        a.g1 = vec_to_bform(v1);
        a.g2 = vec_to_bform(v2);
        a.balanced = true;
        return a;
    }
    a.g1 = vec_to_bform(ker[0]).normalized();
    const unsigned k2 = d + 2 - k1;
    // annihilators of degree k2
    std::vector<std::vector<GaussRat>> ann2;
    if (k2 <= d) {
        ann2 = kernel_basis(catalecticant(f, k2));
    } else {
        // k2 = d+1: every form of degree d+1 annihilates F
        for (unsigned j = 0; j <= k2; ++j) {
            std::vector<GaussRat> e(k2 + 1, GaussRat(0));
            e[j] = GaussRat(1);
            ann2.push_back(std::move(e));
        }
    }
    // quotient out g1 * Sym^{k2-k1}
    ExactMatrix mult(k2 - k1 + 1, k2 + 1);
    for (unsigned s = 0; s <= k2 - k1; ++s) {
        // g1 * x0^{k2-k1-s} x1^s shifts coefficients by s
        for (unsigned j = 0; j <= k1; ++j) mult(s, j + s) = a.g1.coeff(j);
    }
    auto pivots = rref(mult);
    for (const auto& v : ann2) {
        auto rem = detail::reduce_by_rref(v, mult, pivots);
        bool nonzero = false;
        for (const auto& c : rem)
            if (!c.is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            a.g2 = vec_to_bform(rem).normalized();
            return a;
        }
    }
    throw std::logic_error("annihilator_binary: no second generator found");
}

/// A squarefree member of the pencil spanned by (g1, g2), searched
/// deterministically; empty when (provably impossible for apolar pencils)
/// none of the probed members is squarefree.
inline std::optional<BForm> pencil_squarefree_member(const BForm& g1, const BForm& g2) {
    if (is_squarefree(g1)) return g1;
    if (is_squarefree(g2)) return g2;
    // a pencil of degree-m forms has at most 2m-2 non-squarefree members
    // unless all are; probe enough distinct values
    const long probes = 2 * static_cast<long>(g1.degree()) + 3;
    for (long t = 1; t <= probes; ++t) {
        BForm cand = g1 + g2 * GaussRat(Rat(t));
        if (!cand.is_zero() && is_squarefree(cand)) return cand;
    }
    return std::nullopt;
}

/// Sylvester: rank = deg g1 if g1 is squarefree, deg g2 otherwise.  In the
/// balanced case both degrees agree and a squarefree pencil member realizes
/// the rank.
inline unsigned waring_rank_binary(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("waring_rank_binary: zero form");
    if (f.degree() == 0) return 1;
    AnnPair a = annihilator_binary(f);
    if (a.balanced) {
        if (!pencil_squarefree_member(a.g1, a.g2))
            throw std::logic_error("waring_rank_binary: balanced pencil with no squarefree member");
        return a.g1.degree();
    }
    return is_squarefree(a.g1) ? a.g1.degree() : a.g2.degree();
}

struct DecompTerm {
    LinForm lin;
    GaussRat coef;
};
struct DecompTermC {
    std::vector<CFloat> lin;
    CFloat coef;
};
struct Decomposition {
    bool exact = false;
    std::vector<DecompTerm> terms;     // populated in exact mode
    std::vector<DecompTermC> nterms;   // populated in numeric mode
    double residual = 0.0;
};

namespace detail {
/// Exact roots of a squarefree binary form, when they all lie in Q(i):
/// numeric roots reconstructed and verified exactly.  Roots are returned as
/// projective points [a:b], which double as the linear forms a x0 + b x1 of
/// the corresponding Waring summands.
inline std::optional<std::vector<ProjPoint>> exact_roots(const BForm& g) {
    std::vector<ProjPoint> out;
    for (const auto& r : roots_numeric(g, 1e-9)) {
        if (r.multiplicity != 1) return std::nullopt;
        GaussRat a, b;
        if (std::abs(r.x1) < 1e-12) {
            a = GaussRat(1);
            b = GaussRat(0);
        } else {
            a = gauss_reconstruct(r.x0 / r.x1, 1000000);
            b = GaussRat(1);
        }
        if (!g.eval(a, b).is_zero()) return std::nullopt;
        out.emplace_back(a, b);
    }
    return out;
}
}  // namespace detail

/// Decomposition F = sum c_i L_i^d in the identifiable regime (squarefree
/// minimal annihilator realizing the rank).  Exact when the annihilator
/// splits over Q(i); numeric otherwise.  Wild forms are rejected.
inline Decomposition decompose_binary(const BForm& f, bool want_exact = true, double tol = 1e-9) {
    if (f.is_zero()) throw std::domain_error("decompose_binary: zero form");
    const unsigned d = f.degree();
    if (d == 0) throw std::domain_error("decompose_binary: constant form");
    AnnPair a = annihilator_binary(f);
    BForm g = a.g1;
    if (a.balanced) {
        auto m = pencil_squarefree_member(a.g1, a.g2);
        if (!m) throw std::domain_error("decompose_binary: no squarefree pencil member");
        g = *m;
    } else if (!is_squarefree(a.g1)) {
        throw std::domain_error("decompose_binary: wild case, not decomposable by this routine");
    }
    const unsigned r = g.degree();
    Decomposition out;
    if (want_exact) {
        auto roots = detail::exact_roots(g);
        if (roots) {
            // solve sum c_i L_i^d = F over Q(i)
            ExactMatrix sys(d + 1, r + 1);
            for (unsigned i = 0; i < r; ++i) {
                BForm lp = BForm::linear_power((*roots)[i].coords[0], (*roots)[i].coords[1], d);
                for (unsigned k = 0; k <= d; ++k) sys(k, i) = lp.coeff(k);
            }
            for (unsigned k = 0; k <= d; ++k) sys(k, r) = f.coeff(k);
            auto pivots = rref(sys);
            // consistent iff no pivot in the last column
            if (!pivots.empty() && pivots.back() == r)
                throw std::logic_error("decompose_binary: inconsistent system");
            std::vector<GaussRat> c(r, GaussRat(0));
            for (std::size_t row = 0; row < pivots.size(); ++row) c[pivots[row]] = sys(row, r);
            out.exact = true;
            for (unsigned i = 0; i < r; ++i)
                out.terms.push_back({(*roots)[i].as_linform(), c[i]});
            return out;
        }
    }
    // numeric path
    auto roots = roots_numeric(g, tol);
    std::vector<std::pair<CFloat, CFloat>> pts;
    for (const auto& rr : roots)
        for (unsigned m = 0; m < rr.multiplicity; ++m) pts.push_back({rr.x0, rr.x1});
    Eigen::MatrixXcd sys(d + 1, pts.size());
    Eigen::VectorXcd rhs(d + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        // (a x0 + b x1)^d coefficients, numeric
        CFloat binom = 1.0;
        for (unsigned k = 0; k <= d; ++k) {
            sys(k, i) = binom * std::pow(pts[i].first, static_cast<int>(d - k)) *
                        std::pow(pts[i].second, static_cast<int>(k));
            binom *= static_cast<double>(d - k);
            binom /= static_cast<double>(k + 1);
        }
    }
    for (unsigned k = 0; k <= d; ++k) rhs(k) = f.coeff(k).to_complex();
    Eigen::VectorXcd c = sys.colPivHouseholderQr().solve(rhs);
    out.exact = false;
    out.residual = (sys * c - rhs).norm();
    if (out.residual > tol * std::max(1.0, rhs.norm()))
        throw std::domain_error("decompose_binary: numeric residual exceeds tolerance");
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.nterms.push_back({{pts[i].first, pts[i].second}, c(static_cast<Eigen::Index>(i))});
    return out;
}

}  // namespace waring_eig
