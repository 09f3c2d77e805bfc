#pragma once

// Waring and forbidden loci of binary forms in all three Sylvester regimes,
// exact W(F)-intersect-Eig(F) decision procedures, and monomial loci for
// n >= 2.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring_eig/apolarity.hpp"
#include "waring_eig/eigensch.hpp"
#include "waring_eig/nform.hpp"

namespace waring_eig {

enum class LocusKind {
    Finite,              // g1 squarefree, deg g1 < deg g2: W(F) = roots of g1
    CofiniteMinus,       // g1 not squarefree, deg g1 < deg g2: F(F) = roots of g1
    Balanced,            // deg g1 = deg g2 = (d+2)/2: pencil regime
    MonomialComplement,  // n >= 2 monomial: F(F) = V(x_0...x_m)
};

struct LocusDesc {
    LocusKind kind;
    AnnPair ann;              // binary regimes
    BForm forbidden_form;     // Balanced: the derived form R with F(F) ⊂ V(R); reporting only
    unsigned monomial_m = 0;  // MonomialComplement
};

/// R(p) = disc(G_p) with G_p = g2(p) g1 - g1(p) g2, the member of the pencil
/// vanishing at p.  For p not a common root of the pencil, p lies in the
/// forbidden locus iff R(p) = 0.  R can pick up spurious factors at common
/// roots of the pencil; pointwise decisions use G_p squarefreeness directly.
/// Computed exactly by interpolation: R is a binary form of degree
/// 2 k (k-1) in p, where k = (d+2)/2.
inline BForm balanced_forbidden_form(const BForm& g1, const BForm& g2) {
    if (g1.degree() != g2.degree())
        throw std::invalid_argument("balanced_forbidden_form: pencil degrees differ");
    const unsigned k = g1.degree();
    if (k < 2) throw std::invalid_argument("balanced_forbidden_form: degree < 2 pencil");
    if (!pencil_squarefree_member(g1, g2))
        throw std::domain_error("balanced_forbidden_form: pencil has no squarefree member");
    const unsigned degR = 2 * k * (k - 1);
    // evaluate at p = (1, t) for degR+1 integer t and interpolate
    std::vector<GaussRat> ts, vals;
    for (long t = 0; static_cast<unsigned>(ts.size()) <= degR; ++t) {
        GaussRat p0(1);
        GaussRat p1{Rat(t)};
        GaussRat a = g2.eval(p0, p1), b = g1.eval(p0, p1);
        BForm gp = g1 * a - g2 * b;
        GaussRat v = gp.is_zero() ? GaussRat(0) : discriminant(gp);
        ts.push_back(p1);
        vals.push_back(v);
    }
    // Lagrange interpolation of r(t) = R(1, t), degree <= degR
    std::vector<GaussRat> coeffs(degR + 1, GaussRat(0));
    for (std::size_t i = 0; i <= degR; ++i) {
        // basis polynomial prod_{j != i} (t - t_j) / (t_i - t_j)
        std::vector<GaussRat> num{GaussRat(1)};
        GaussRat den(1);
        for (std::size_t j = 0; j <= degR; ++j) {
            if (j == i) continue;
            std::vector<GaussRat> next(num.size() + 1, GaussRat(0));
            for (std::size_t s = 0; s < num.size(); ++s) {
                next[s] -= num[s] * ts[j];
                next[s + 1] += num[s];
            }
            num = std::move(next);
            den *= ts[i] - ts[j];
        }
        GaussRat w = vals[i] / den;
        for (std::size_t s = 0; s < num.size(); ++s) coeffs[s] += num[s] * w;
    }
    // r(t) = sum coeffs[s] t^s; R(p0,p1) = sum coeffs[s] p0^{degR-s} p1^s
    BForm R(degR);
    for (unsigned s = 0; s <= degR; ++s) R.coeff(s) = coeffs[s];
    return R;
}

inline LocusDesc waring_locus_binary(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("waring_locus_binary: zero form");
    if (f.degree() < 2) throw std::domain_error("waring_locus_binary: degree < 2");
    LocusDesc out;
    out.ann = annihilator_binary(f);
    if (out.ann.balanced) {
        out.kind = LocusKind::Balanced;
        out.forbidden_form = balanced_forbidden_form(out.ann.g1, out.ann.g2);
    } else if (is_squarefree(out.ann.g1)) {
        out.kind = LocusKind::Finite;
    } else {
        out.kind = LocusKind::CofiniteMinus;
    }
    return out;
}

/// Exact membership of an exact point in the forbidden locus F(F).
inline bool forbidden_contains(const BForm& f, const ProjPoint& p) {
    LocusDesc ld = waring_locus_binary(f);
    GaussRat v1 = ld.ann.g1.eval(p.coords[0], p.coords[1]);
    switch (ld.kind) {
        case LocusKind::Finite:
            // W(F) = roots of g1; everything else is forbidden
            return !v1.is_zero();
        case LocusKind::CofiniteMinus:
            return v1.is_zero();
        case LocusKind::Balanced: {
            GaussRat v2 = ld.ann.g2.eval(p.coords[0], p.coords[1]);
            if (v1.is_zero() && v2.is_zero()) {
                // common root of the pencil: in W(F) iff some member is squarefree
                return !pencil_squarefree_member(ld.ann.g1, ld.ann.g2).has_value();
            }
            BForm gp = ld.ann.g1 * v2 - ld.ann.g2 * v1;
            return !is_squarefree(gp);
        }
        default:
            throw std::logic_error("forbidden_contains: unexpected locus kind");
    }
}

struct IntersectionReport {
    bool nonempty = false;
    std::vector<EigPoint> witnesses;  // eigenpoints known to lie in W(F)
    std::string method;               // "exact-gcd", "exact-divisibility", "pointwise"
    BForm certificate;                // gcd / quotient polynomial where applicable
    LocusKind kind;
};

/// Decides whether W(F) and Eig(F) intersect, per the three Sylvester
/// regimes.  Finite: gcd(g1, D) nonconstant.  CofiniteMinus: the squarefree
/// part of D does not divide the squarefree part of g1.  Balanced: pointwise
/// forbidden-locus membership of each eigenpoint.
inline IntersectionReport intersect_waring_eigen_binary(const BForm& f, double tol = 1e-9) {
    if (f.is_zero()) throw std::domain_error("intersect_waring_eigen_binary: zero form");
    BForm D = eigen_poly_binary(f);
    if (D.is_zero())
        throw std::domain_error("intersect_waring_eigen_binary: degenerate eigenpolynomial");
    LocusDesc ld = waring_locus_binary(f);
    IntersectionReport rep;
    rep.kind = ld.kind;
    auto support = eigen_support_binary(f, tol);
    auto in_w_exact = [&](const ProjPoint& p) { return !forbidden_contains(f, p); };
    switch (ld.kind) {
        case LocusKind::Finite: {
            BForm g = gcd_binary(ld.ann.g1, D);
            rep.method = "exact-gcd";
            rep.certificate = g;
            rep.nonempty = g.degree() >= 1;
            if (rep.nonempty) {
                for (const auto& ep : support) {
                    if (ep.exact) {
                        if (ld.ann.g1.eval(ep.pt.coords[0], ep.pt.coords[1]).is_zero())
                            rep.witnesses.push_back(ep);
                    } else {
                        CFloat v = ld.ann.g1.eval(ep.npt.coords[0], ep.npt.coords[1]);
                        if (std::abs(v) < tol) rep.witnesses.push_back(ep);
                    }
                }
            }
            return rep;
        }
        case LocusKind::CofiniteMinus: {
            BForm sd = squarefree_part(D);
            BForm sg = squarefree_part(ld.ann.g1);
            rep.method = "exact-divisibility";
            rep.nonempty = !divides(sd, sg);
            // quotient of sd by its part supported on roots of g1
            BForm common = gcd_binary(sd, sg);
            rep.certificate = common;
            if (rep.nonempty) {
                for (const auto& ep : support) {
                    if (ep.exact) {
                        if (!ld.ann.g1.eval(ep.pt.coords[0], ep.pt.coords[1]).is_zero())
                            rep.witnesses.push_back(ep);
                    } else {
                        CFloat v = ld.ann.g1.eval(ep.npt.coords[0], ep.npt.coords[1]);
                        if (std::abs(v) > tol) rep.witnesses.push_back(ep);
                    }
                }
            }
            return rep;
        }
        case LocusKind::Balanced: {
            rep.method = "pointwise";
            for (const auto& ep : support) {
                bool in_w;
                if (ep.exact) {
                    in_w = in_w_exact(ep.pt);
                } else {
                    // numeric: member through p, squarefree iff discriminant
                    // stays away from zero
                    CFloat v1 = ld.ann.g1.eval(ep.npt.coords[0], ep.npt.coords[1]);
                    CFloat v2 = ld.ann.g2.eval(ep.npt.coords[0], ep.npt.coords[1]);
                    CFloat rv = 0;
                    for (unsigned k = 0; k <= ld.forbidden_form.degree(); ++k)
                        rv += ld.forbidden_form.coeff(k).to_complex() *
                              std::pow(ep.npt.coords[0], static_cast<int>(ld.forbidden_form.degree() - k)) *
                              std::pow(ep.npt.coords[1], static_cast<int>(k));
                    double scale = std::pow(std::abs(v1) + std::abs(v2) + 1.0,
                                            2.0 * (ld.ann.g1.degree() - 1));
                    in_w = std::abs(rv) > tol * scale;
                }
                if (in_w) {
                    rep.nonempty = true;
                    rep.witnesses.push_back(ep);
                }
            }
            return rep;
        }
        default:
            throw std::logic_error("intersect_waring_eigen_binary: unexpected kind");
    }
}

/// Sufficient criterion for forms of rank above (d+1)/2: if Eig(F) has at
/// least d - rk(F) + 2 distinct points, the intersection with W(F) is
/// nonempty.  A false return is inconclusive.
inline bool eig_count_sufficiency(const BForm& f) {
    const unsigned d = f.degree();
    unsigned r = waring_rank_binary(f);
    if (2 * r <= d + 1) throw std::domain_error("eig_count_sufficiency: rank <= (d+1)/2");
    BForm D = eigen_poly_binary(f);
    if (D.is_zero()) throw std::domain_error("eig_count_sufficiency: degenerate eigenpolynomial");
    unsigned distinct = squarefree_part(D).degree();
    return distinct + r >= d + 2;
}

enum class MonomialIntersection {
    ForbiddenInsideEigen,  // d_0 >= 2: F(F) strictly contained in Eig(F)
    CodimTwoUnion,         // d_0 = 1: Eig ∩ F = union of V(x_i, x_j), i <= m, j != i
};

struct MonomialLoci {
    unsigned m;  // F(F) = V(x_0 ... x_m)
    MonomialIntersection intersection;
    NForm form;  // the expanded monomial
};

/// Loci of F = x_0^{d_0} ... x_n^{d_n}, exponents sorted ascending, n >= 2.
inline MonomialLoci monomial_loci(const std::vector<unsigned>& exponents) {
    const unsigned nv = static_cast<unsigned>(exponents.size());
    if (nv < 3) throw std::invalid_argument("monomial_loci: need n >= 2");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1) throw std::invalid_argument("monomial_loci: exponents must be >= 1");
        if (i > 0 && exponents[i] < exponents[i - 1])
            throw std::invalid_argument("monomial_loci: exponents must be sorted ascending");
    }
    MonomialLoci out;
    out.m = 0;
    while (out.m + 1 < nv && exponents[out.m + 1] == exponents[0]) ++out.m;
    out.intersection = exponents[0] >= 2 ? MonomialIntersection::ForbiddenInsideEigen
                                         : MonomialIntersection::CodimTwoUnion;
    Expo alpha(exponents.begin(), exponents.end());
    out.form = NForm::monomial(nv, alpha, GaussRat(1));
    return out;
}

}  // namespace waring_eig
