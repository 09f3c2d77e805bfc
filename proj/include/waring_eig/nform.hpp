#pragma once

// Sparse multivariate homogeneous forms, linear forms, projective points,
// and the two pairings everything else is built on: the apolar action
// G(d/dx) F and the Bombieri-Weyl inner product.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring_eig/bform.hpp"
#include "waring_eig/gaussrat.hpp"

namespace waring_eig {

using Expo = std::vector<unsigned>;

inline unsigned expo_total(const Expo& a) {
    unsigned t = 0;
    for (auto e : a) t += e;
    return t;
}

/// All exponent vectors with nvars entries of total degree d, in
/// lexicographic order by leading variables.
inline std::vector<Expo> all_exponents(unsigned nvars, unsigned d) {
    std::vector<Expo> out;
    Expo alpha(nvars, 0);
    auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
        if (var + 1 == nvars) {
            alpha[var] = rem;
            out.push_back(alpha);
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            alpha[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

struct LinForm {
    std::vector<GaussRat> coords;

    LinForm() {}
    explicit LinForm(std::vector<GaussRat> c) : coords(std::move(c)) {}
    LinForm(const GaussRat& a, const GaussRat& b) : coords{a, b} {}

    unsigned nvars() const { return static_cast<unsigned>(coords.size()); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// Complexified bilinear (not Hermitian) pairing sum l_i m_i.
inline GaussRat lin_inner(const LinForm& l, const LinForm& m) {
    if (l.coords.size() != m.coords.size()) throw std::invalid_argument("lin_inner: size mismatch");
    GaussRat s(0);
    for (std::size_t i = 0; i < l.coords.size(); ++i) s += l.coords[i] * m.coords[i];
    return s;
}

inline bool is_isotropic(const LinForm& l) {
    if (l.is_zero()) throw std::domain_error("is_isotropic: zero form");
    return lin_inner(l, l).is_zero();
}

/// For binary L = a x0 + b x1: the form (-b, a), orthogonal to L under the
/// complexified pairing.  Isotropic L is proportional to its own perp.
inline LinForm perp(const LinForm& l) {
    if (l.coords.size() != 2) throw std::invalid_argument("perp: binary only");
    if (l.is_zero()) throw std::domain_error("perp: zero form");
    return LinForm(-l.coords[1], l.coords[0]);
}

class NForm {
public:
    NForm() : nv_(1), d_(0) {}
    NForm(unsigned nvars, unsigned degree) : nv_(nvars), d_(degree) {
        if (nvars == 0) throw std::invalid_argument("NForm: need at least one variable");
    }

    static NForm monomial(unsigned nvars, const Expo& alpha, const GaussRat& c) {
        NForm f(nvars, expo_total(alpha));
        if (alpha.size() != nvars) throw std::invalid_argument("NForm::monomial: bad exponent");
        f.set(alpha, c);
        return f;
    }

    /// L^d expanded by the multinomial theorem.
    static NForm linear_power(const LinForm& l, unsigned d) {
        NForm f(l.nvars(), d);
        Expo alpha(l.nvars(), 0);
        GaussRat dfact(rat_factorial(d));
        expand_power(f, l, alpha, 0, d, dfact);
        return f;
    }

    unsigned nvars() const { return nv_; }
    unsigned degree() const { return d_; }
    const std::map<Expo, GaussRat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    GaussRat coeff(const Expo& alpha) const {
        auto it = t_.find(alpha);
        return it == t_.end() ? GaussRat(0) : it->second;
    }

    void set(const Expo& alpha, const GaussRat& c) {
        if (alpha.size() != nv_ || expo_total(alpha) != d_)
            throw std::invalid_argument("NForm::set: exponent mismatch");
        if (c.is_zero())
            t_.erase(alpha);
        else
            t_[alpha] = c;
    }

    void add_term(const Expo& alpha, const GaussRat& c) {
        if (alpha.size() != nv_ || expo_total(alpha) != d_)
            throw std::invalid_argument("NForm::add_term: exponent mismatch");
        auto it = t_.find(alpha);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[alpha] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NForm operator-() const {
        NForm r(nv_, d_);
        for (const auto& [a, c] : t_) r.t_[a] = -c;
        return r;
    }
    friend NForm operator+(const NForm& a, const NForm& b) {
        if (a.nv_ != b.nv_ || a.d_ != b.d_) throw std::invalid_argument("NForm: shape mismatch");
        NForm r = a;
        for (const auto& [al, c] : b.t_) r.add_term(al, c);
        return r;
    }
    friend NForm operator-(const NForm& a, const NForm& b) { return a + (-b); }
    friend NForm operator*(const NForm& a, const NForm& b) {
        if (a.nv_ != b.nv_) throw std::invalid_argument("NForm: variable mismatch");
        NForm r(a.nv_, a.d_ + b.d_);
        for (const auto& [al, ca] : a.t_)
            for (const auto& [be, cb] : b.t_) {
                Expo g(a.nv_);
                for (unsigned i = 0; i < a.nv_; ++i) g[i] = al[i] + be[i];
                r.add_term(g, ca * cb);
            }
        return r;
    }
    friend NForm operator*(const NForm& a, const GaussRat& s) {
        NForm r(a.nv_, a.d_);
        if (s.is_zero()) return r;
        for (const auto& [al, c] : a.t_) r.t_[al] = c * s;
        return r;
    }
    friend bool operator==(const NForm& a, const NForm& b) {
        return a.nv_ == b.nv_ && a.d_ == b.d_ && a.t_ == b.t_;
    }
    friend bool operator!=(const NForm& a, const NForm& b) { return !(a == b); }

    NForm derivative(unsigned i) const {
        if (i >= nv_) throw std::invalid_argument("NForm::derivative: bad variable");
        NForm r(nv_, d_ == 0 ? 0 : d_ - 1);
        if (d_ == 0) return r;
        for (const auto& [al, c] : t_) {
            if (al[i] == 0) continue;
            Expo b = al;
            --b[i];
            r.add_term(b, c * GaussRat(Rat(static_cast<long>(al[i]))));
        }
        return r;
    }

    GaussRat eval(const std::vector<GaussRat>& x) const {
        if (x.size() != nv_) throw std::invalid_argument("NForm::eval: size mismatch");
        GaussRat acc(0);
        for (const auto& [al, c] : t_) {
            GaussRat m = c;
            for (unsigned i = 0; i < nv_; ++i) m *= pow(x[i], al[i]);
            acc += m;
        }
        return acc;
    }
    CFloat eval(const std::vector<CFloat>& x) const {
        if (x.size() != nv_) throw std::invalid_argument("NForm::eval: size mismatch");
        CFloat acc(0);
        for (const auto& [al, c] : t_) {
            CFloat m = c.to_complex();
            for (unsigned i = 0; i < nv_; ++i) m *= std::pow(x[i], static_cast<int>(al[i]));
            acc += m;
        }
        return acc;
    }

    /// Gradient evaluated at an exact point.
    std::vector<GaussRat> gradient_at(const std::vector<GaussRat>& x) const {
        std::vector<GaussRat> g(nv_);
        for (unsigned i = 0; i < nv_; ++i) g[i] = derivative(i).eval(x);
        return g;
    }

    /// Substitute x_i -> subs[i] (a linear form each); used for linear group
    /// actions.  Degree is preserved.
    NForm substitute_linear(const std::vector<LinForm>& subs) const {
        if (subs.size() != nv_) throw std::invalid_argument("substitute_linear: size mismatch");
        unsigned out_nv = subs.empty() ? nv_ : subs[0].nvars();
        NForm r(out_nv, d_);
        for (const auto& [al, c] : t_) {
            NForm prod(out_nv, 0);
            prod.set(Expo(out_nv, 0), GaussRat(1));
            for (unsigned i = 0; i < nv_; ++i)
                for (unsigned e = 0; e < al[i]; ++e) prod = prod * lin_as_form(subs[i]);
            r = r + prod * c;
        }
        return r;
    }

    static NForm lin_as_form(const LinForm& l) {
        NForm f(l.nvars(), 1);
        for (unsigned i = 0; i < l.nvars(); ++i) {
            if (l.coords[i].is_zero()) continue;
            Expo a(l.nvars(), 0);
            a[i] = 1;
            f.t_[a] = l.coords[i];
        }
        return f;
    }

    std::string str() const;

private:
    static void expand_power(NForm& f, const LinForm& l, Expo& alpha, unsigned var,
                             unsigned rem, const GaussRat& mult) {
        if (var + 1 == l.nvars()) {
            alpha[var] = rem;
            GaussRat c = mult / GaussRat(rat_factorial(rem));
            for (unsigned i = 0; i < var; ++i) c /= GaussRat(rat_factorial(alpha[i]));
            for (unsigned i = 0; i < l.nvars(); ++i) c *= pow(l.coords[i], alpha[i]);
            f.add_term(alpha, c);
            alpha[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            alpha[var] = e;
            expand_power(f, l, alpha, var + 1, rem - e, mult);
        }
        alpha[var] = 0;
    }

    unsigned nv_;
    unsigned d_;
    std::map<Expo, GaussRat> t_;
};

inline std::string NForm::str() const {
    std::string s;
    for (const auto& [al, c] : t_) {
        std::string mono;
        for (unsigned i = 0; i < nv_; ++i) {
            if (al[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (al[i] > 1) mono += "^" + std::to_string(al[i]);
        }
        std::string cs = gauss_str(c);
        std::string term;
        if (mono.empty()) term = cs;
        else if (cs == "1") term = mono;
        else if (cs == "-1") term = "-" + mono;
        else if (!c.is_real()) term = "(" + cs + ")*" + mono;
        else term = cs + "*" + mono;
        if (s.empty()) s = term;
        else if (term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s.empty() ? "0" : s;
}

/// Conversions between the dense binary and sparse representations.
inline NForm to_nform(const BForm& f) {
    NForm g(2, f.degree());
    for (unsigned k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k).is_zero()) continue;
        g.set({f.degree() - k, k}, f.coeff(k));
    }
    return g;
}

inline BForm to_bform(const NForm& f) {
    if (f.nvars() != 2) throw std::invalid_argument("to_bform: needs 2 variables");
    BForm g(f.degree());
    for (const auto& [al, c] : f.terms()) g.coeff(al[1]) = c;
    return g;
}

/// Apolar action G(d/dx) F.  Requires deg G <= deg F; bilinear; the result
/// has degree deg F - deg G.
inline NForm apolar_apply(const NForm& g, const NForm& f) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("apolar_apply: variable mismatch");
    if (g.degree() > f.degree()) throw std::invalid_argument("apolar_apply: deg G > deg F");
    const unsigned nv = f.nvars();
    NForm r(nv, f.degree() - g.degree());
    for (const auto& [be, cg] : g.terms()) {
        for (const auto& [al, cf] : f.terms()) {
            bool ok = true;
            for (unsigned i = 0; i < nv; ++i)
                if (al[i] < be[i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            GaussRat w = cg * cf;
            Expo gam(nv);
            for (unsigned i = 0; i < nv; ++i) {
                gam[i] = al[i] - be[i];
                w *= GaussRat(rat_factorial(al[i]) / rat_factorial(gam[i]));
            }
            r.add_term(gam, w);
        }
    }
    return r;
}

inline BForm apolar_apply(const BForm& g, const BForm& f) {
    return to_bform(apolar_apply(to_nform(g), to_nform(f)));
}

/// Bombieri-Weyl product: sum over |alpha|=d of F_alpha G_alpha / multinom(d,alpha).
/// Satisfies d! <F,G> = G(d/dx) F and <u^d, v^d> = <u,v>^d.
inline GaussRat bw_inner(const NForm& f, const NForm& g) {
    if (f.nvars() != g.nvars() || f.degree() != g.degree())
        throw std::invalid_argument("bw_inner: shape mismatch");
    Rat dfact = rat_factorial(f.degree());
    GaussRat acc(0);
    for (const auto& [al, cf] : f.terms()) {
        GaussRat cg = g.coeff(al);
        if (cg.is_zero()) continue;
        Rat w(1);
        for (auto e : al) w *= rat_factorial(e);
        acc += cf * cg * GaussRat(w / dfact);
    }
    return acc;
}

inline GaussRat bw_inner(const BForm& f, const BForm& g) {
    return bw_inner(to_nform(f), to_nform(g));
}

/// Projective point with exact coordinates; normalized so the first nonzero
/// coordinate is 1.
struct ProjPoint {
    std::vector<GaussRat> coords;

    ProjPoint() {}
    explicit ProjPoint(std::vector<GaussRat> c) : coords(std::move(c)) { normalize(); }
    ProjPoint(const GaussRat& a, const GaussRat& b) : coords{a, b} { normalize(); }

    void normalize() {
        for (const auto& c : coords) {
            if (!c.is_zero()) {
                GaussRat inv = GaussRat(1) / c;
                for (auto& x : coords) x *= inv;
                return;
            }
        }
        throw std::domain_error("ProjPoint: zero vector");
    }

    LinForm as_linform() const { return LinForm(coords); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        auto key = [](const GaussRat& z) { return std::make_pair(z.re, z.im); };
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] != b.coords[i]) return key(a.coords[i]) < key(b.coords[i]);
        }
        return false;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ":";
            s += gauss_str(coords[i]);
        }
        return s + "]";
    }
};

/// Projective point with floating coordinates; scaled to unit max modulus.
struct ProjPointC {
    std::vector<CFloat> coords;

    ProjPointC() {}
    explicit ProjPointC(std::vector<CFloat> c) : coords(std::move(c)) { normalize(); }
    ProjPointC(const CFloat& a, const CFloat& b) : coords{a, b} { normalize(); }

    void normalize() {
        double mx = 0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (std::abs(coords[i]) > mx) {
                mx = std::abs(coords[i]);
                arg = i;
            }
        if (mx == 0) throw std::domain_error("ProjPointC: zero vector");
        CFloat inv = 1.0 / coords[arg];
        for (auto& x : coords) x *= inv;
    }

    /// Chordal distance in projective space (binary case uses the cross term).
    double chordal(const ProjPointC& o) const {
        double num = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = i + 1; j < coords.size(); ++j)
                num += std::norm(coords[i] * o.coords[j] - coords[j] * o.coords[i]);
        double na = 0, nb = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            na += std::norm(coords[i]);
            nb += std::norm(o.coords[i]);
        }
        return std::sqrt(num / (na * nb));
    }
};

inline ProjPointC to_numeric(const ProjPoint& p) {
    std::vector<CFloat> c;
    c.reserve(p.coords.size());
    for (const auto& z : p.coords) c.push_back(z.to_complex());
    return ProjPointC(std::move(c));
}

}  // namespace waring_eig
