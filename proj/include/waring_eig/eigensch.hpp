#pragma once

// Eigenschemes of symmetric tensors: the binary eigenpolynomial D, the
// 2x2-minors ideal for general n, eigenvector tests, singular values, and
// the closed-form eigenschemes of binary monomials L^{d-j} M^j.

#include <optional>
#include <stdexcept>
#include <vector>

#include "waring_eig/apolarity.hpp"
#include "waring_eig/bform.hpp"
#include "waring_eig/nform.hpp"

namespace waring_eig {

/// D(x0,x1) = (dF/dx0) x1 - (dF/dx1) x0; degree d unless identically zero.
inline BForm eigen_poly_binary(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("eigen_poly_binary: zero form");
    return f.dx0() * BForm::monomial(1, 1) - f.dx1() * BForm::monomial(1, 0);
}

struct EigIdealGen {
    unsigned i, j;  // column pair, i < j
    NForm minor;    // dF/dx_i * x_j - dF/dx_j * x_i
};

/// All 2x2 minors of [grad F(x); x].  Every eigenvector satisfies all of
/// them; for n = 1 the single minor is eigen_poly_binary.
inline std::vector<EigIdealGen> eigen_ideal(const NForm& f) {
    if (f.is_zero()) throw std::domain_error("eigen_ideal: zero form");
    const unsigned nv = f.nvars();
    std::vector<EigIdealGen> out;
    std::vector<NForm> partials;
    for (unsigned i = 0; i < nv; ++i) partials.push_back(f.derivative(i));
    for (unsigned i = 0; i < nv; ++i)
        for (unsigned j = i + 1; j < nv; ++j) {
            Expo ei(nv, 0), ej(nv, 0);
            ei[i] = 1;
            ej[j] = 1;
            NForm xi = NForm::monomial(nv, ei, GaussRat(1));
            NForm xj = NForm::monomial(nv, ej, GaussRat(1));
            out.push_back({i, j, partials[i] * xj - partials[j] * xi});
        }
    return out;
}

/// Exact test that grad F(L) is proportional to L.
inline bool is_eigenvector(const NForm& f, const LinForm& l) {
    if (l.is_zero()) throw std::invalid_argument("is_eigenvector: zero vector");
    auto g = f.gradient_at(l.coords);
    const std::size_t nv = l.coords.size();
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (!(g[i] * l.coords[j] - g[j] * l.coords[i]).is_zero()) return false;
    return true;
}

inline bool is_eigenvector(const BForm& f, const LinForm& l) {
    return is_eigenvector(to_nform(f), l);
}

enum class SVKind {
    Exact,               // rational singular value
    Numeric,             // floating singular value
    Indeterminate,       // isotropic eigenvector with grad F(L) = 0: any value works
    UndefinedIsotropic   // isotropic with grad F(L) proportional but nonzero: no value works
};

struct SingularValue {
    SVKind kind = SVKind::Exact;
    GaussRat value;   // valid when kind == Exact
    CFloat nvalue{};  // valid when kind == Numeric
};

/// The unique mu with L^{d-1}(d/dx) (F - mu L^d) = 0, for non-isotropic
/// eigenvectors L; equivalently grad F(l) = mu * d * <l,l>^{d-1} * l.
inline SingularValue singular_value(const NForm& f, const LinForm& l) {
    if (!is_eigenvector(f, l)) throw std::invalid_argument("singular_value: not an eigenvector");
    const unsigned d = f.degree();
    auto g = f.gradient_at(l.coords);
    GaussRat k(0);
    bool have_k = false;
    for (std::size_t i = 0; i < l.coords.size(); ++i) {
        if (!l.coords[i].is_zero()) {
            k = g[i] / l.coords[i];
            have_k = true;
            break;
        }
    }
    if (!have_k) throw std::invalid_argument("singular_value: zero vector");
    GaussRat c = lin_inner(l, l);
    SingularValue sv;
    if (c.is_zero()) {
        bool grad_zero = true;
        for (const auto& gi : g)
            if (!gi.is_zero()) grad_zero = false;
        sv.kind = grad_zero ? SVKind::Indeterminate : SVKind::UndefinedIsotropic;
        return sv;
    }
    sv.kind = SVKind::Exact;
    sv.value = k / (GaussRat(Rat(static_cast<long>(d))) * pow(c, d - 1));
    return sv;
}

inline SingularValue singular_value(const BForm& f, const LinForm& l) {
    return singular_value(to_nform(f), l);
}

/// Numeric singular value at a floating point presumed (close to) an
/// eigenvector; callers supply the tolerance context.
inline SingularValue singular_value_numeric(const BForm& f, const CFloat& p0, const CFloat& p1,
                                            double iso_tol = 1e-9) {
    const unsigned d = f.degree();
    CFloat g0 = 0, g1 = 0;
    {
        BForm fx = f.dx0(), fy = f.dx1();
        g0 = fx.eval(p0, p1);
        g1 = fy.eval(p0, p1);
    }
    CFloat k = std::abs(p0) >= std::abs(p1) ? g0 / p0 : g1 / p1;
    CFloat c = p0 * p0 + p1 * p1;
    double scale = std::norm(p0) + std::norm(p1);
    SingularValue sv;
    if (std::abs(c) < iso_tol * scale) {
        double gn = std::abs(g0) + std::abs(g1);
        sv.kind = gn < iso_tol ? SVKind::Indeterminate : SVKind::UndefinedIsotropic;
        return sv;
    }
    sv.kind = SVKind::Numeric;
    sv.nvalue = k / (static_cast<double>(d) * std::pow(c, static_cast<int>(d - 1)));
    return sv;
}

struct EigPoint {
    bool exact = false;
    ProjPoint pt;    // valid when exact
    ProjPointC npt;  // always populated
    unsigned multiplicity = 1;
    SingularValue sv;
};

/// Support of the eigenscheme of a binary form: the roots of D with
/// multiplicities and singular values.  Rational (and Gaussian-rational)
/// roots are certified exactly; the rest carry numeric certificates.
inline std::vector<EigPoint> eigen_support_binary(const BForm& f, double tol = 1e-9) {
    BForm D = eigen_poly_binary(f);
    if (D.is_zero())
        throw std::domain_error("eigen_support_binary: eigenpolynomial vanishes identically");
    std::vector<EigPoint> out;
    for (const auto& r : roots_numeric(D, tol)) {
        EigPoint ep;
        ep.multiplicity = r.multiplicity;
        ep.npt = ProjPointC(r.x0, r.x1);
        // exact reconstruction attempt
        std::optional<ProjPoint> exact_pt;
        if (std::abs(r.x1) < 1e-12) {
            exact_pt = ProjPoint(GaussRat(1), GaussRat(0));
        } else {
            GaussRat a = gauss_reconstruct(r.x0 / r.x1, 1000000);
            ProjPoint cand(a, GaussRat(1));
            if (D.eval(cand.coords[0], cand.coords[1]).is_zero()) exact_pt = cand;
        }
        if (exact_pt && is_eigenvector(f, exact_pt->as_linform())) {
            ep.exact = true;
            ep.pt = *exact_pt;
            ep.sv = singular_value(f, exact_pt->as_linform());
        } else {
            ep.exact = false;
            ep.sv = singular_value_numeric(f, r.x0, r.x1);
        }
        out.push_back(std::move(ep));
    }
    return out;
}

/// Closed-form eigenscheme of F = L^{d-j} M^j (L, M independent):
/// D_F = L^{d-j-1} M^{j-1} Q with quadric Q = (d-j) M Lperp + j L Mperp.
struct MonomialEigen {
    ProjPoint l_perp;                // root of L, multiplicity d-j-1 in D (when d-j > 1)
    std::optional<ProjPoint> m_perp; // root of M, multiplicity j-1 in D (when j > 1)
    BForm quadric;                   // Q; its roots are the remaining eigenpoints
};

inline BForm lin_to_bform(const LinForm& l) {
    if (l.nvars() != 2) throw std::invalid_argument("lin_to_bform: binary only");
    return BForm(1, {l.coords[0], l.coords[1]});
}

inline MonomialEigen monomial_eigen_binary(unsigned d, unsigned j, const LinForm& l,
                                           const LinForm& m) {
    if (j < 1 || 2 * j > d) throw std::invalid_argument("monomial_eigen_binary: need 1 <= j <= d/2");
    if (l.nvars() != 2 || m.nvars() != 2)
        throw std::invalid_argument("monomial_eigen_binary: binary only");
    if ((l.coords[0] * m.coords[1] - l.coords[1] * m.coords[0]).is_zero())
        throw std::invalid_argument("monomial_eigen_binary: L and M proportional");
    MonomialEigen out;
    // the root of L is the point [L^perp]
    out.l_perp = ProjPoint(perp(l).coords);
    if (j > 1) out.m_perp = ProjPoint(perp(m).coords);
    GaussRat dj(Rat(static_cast<long>(d - j))), jj(Rat(static_cast<long>(j)));
    out.quadric =
        lin_to_bform(m) * lin_to_bform(perp(l)) * dj + lin_to_bform(l) * lin_to_bform(perp(m)) * jj;
    return out;
}

}  // namespace waring_eig
