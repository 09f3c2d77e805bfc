#pragma once

// Binary homogeneous forms with exact univariate machinery: gcd, squarefree
// structure, resultants, discriminants, and numeric root extraction.
//
// Storage convention: coeffs[k] is the plain monomial coefficient of
// x0^{d-k} x1^k.  All binomial weights live in the pairing operations.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "waring_eig/gaussrat.hpp"
#include "waring_eig/upoly.hpp"

namespace waring_eig {

class BForm {
public:
    BForm() : d_(0), c_(1, GaussRat(0)) {}
    explicit BForm(unsigned degree) : d_(degree), c_(degree + 1, GaussRat(0)) {}
    BForm(unsigned degree, std::vector<GaussRat> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (c_.size() != d_ + 1) throw std::invalid_argument("BForm: wrong coefficient count");
    }

    static BForm monomial(unsigned d, unsigned k, const GaussRat& c = GaussRat(1)) {
        if (k > d) throw std::invalid_argument("BForm::monomial: exponent out of range");
        BForm f(d);
        f.c_[k] = c;
        return f;
    }

    /// (a x0 + b x1)^d expanded in the monomial basis.
    static BForm linear_power(const GaussRat& a, const GaussRat& b, unsigned d) {
        BForm f(d);
        GaussRat binom(1);
        for (unsigned k = 0; k <= d; ++k) {
            f.c_[k] = binom * pow(a, d - k) * pow(b, k);
            binom *= GaussRat(Rat(static_cast<long>(d - k)));
            binom /= GaussRat(Rat(static_cast<long>(k + 1)));
        }
        return f;
    }

    unsigned degree() const { return d_; }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    const GaussRat& coeff(unsigned k) const { return c_[k]; }
    GaussRat& coeff(unsigned k) { return c_[k]; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    GaussRat eval(const GaussRat& x0, const GaussRat& x1) const {
        GaussRat acc(0);
        for (unsigned k = 0; k <= d_; ++k) acc += c_[k] * pow(x0, d_ - k) * pow(x1, k);
        return acc;
    }
    CFloat eval(const CFloat& x0, const CFloat& x1) const {
        CFloat acc(0);
        for (unsigned k = 0; k <= d_; ++k)
            acc += c_[k].to_complex() * std::pow(x0, static_cast<int>(d_ - k)) *
                   std::pow(x1, static_cast<int>(k));
        return acc;
    }

    BForm dx0() const {
        if (d_ == 0) return BForm(0);
        BForm g(d_ - 1);
        for (unsigned k = 0; k < d_; ++k) g.c_[k] = c_[k] * GaussRat(Rat(static_cast<long>(d_ - k)));
        return g;
    }
    BForm dx1() const {
        if (d_ == 0) return BForm(0);
        BForm g(d_ - 1);
        for (unsigned k = 1; k <= d_; ++k) g.c_[k - 1] = c_[k] * GaussRat(Rat(static_cast<long>(k)));
        return g;
    }

    BForm operator-() const {
        BForm r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend BForm operator+(const BForm& a, const BForm& b) {
        if (a.d_ != b.d_) throw std::invalid_argument("BForm: degree mismatch");
        BForm r(a.d_);
        for (unsigned k = 0; k <= a.d_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend BForm operator-(const BForm& a, const BForm& b) { return a + (-b); }
    friend BForm operator*(const BForm& a, const BForm& b) {
        BForm r(a.d_ + b.d_);
        for (unsigned i = 0; i <= a.d_; ++i)
            for (unsigned j = 0; j <= b.d_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend BForm operator*(const BForm& a, const GaussRat& s) {
        BForm r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend bool operator==(const BForm& a, const BForm& b) {
        return a.d_ == b.d_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BForm& a, const BForm& b) { return !(a == b); }

    bool proportional_to(const BForm& o) const {
        if (d_ != o.d_) return false;
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        unsigned k0 = 0;
        while (c_[k0].is_zero() && o.c_[k0].is_zero()) ++k0;
        if (c_[k0].is_zero() || o.c_[k0].is_zero()) return false;
        GaussRat s = c_[k0] / o.c_[k0];
        for (unsigned k = 0; k <= d_; ++k)
            if (c_[k] != o.c_[k] * s) return false;
        return true;
    }

    /// Multiplicity of the root [1:0], i.e. the exponent of x1 dividing F.
    unsigned mult_at_infinity() const {
        if (is_zero()) throw std::domain_error("BForm: zero form");
        unsigned m = 0;
        while (c_[m].is_zero()) ++m;
        return m;
    }

    /// F(t,1) as a univariate polynomial in t; coefficient of t^j is c_{d-j}.
    UPoly<GaussRat> dehomogenize() const {
        std::vector<GaussRat> v(d_ + 1);
        for (unsigned k = 0; k <= d_; ++k) v[d_ - k] = c_[k];
        return UPoly<GaussRat>(std::move(v));
    }

    /// Inverse of dehomogenize: p(t) of degree e plus x1-multiplicity m gives
    /// a form of degree e+m.
    static BForm homogenize(const UPoly<GaussRat>& p, unsigned x1_mult = 0) {
        if (p.is_zero()) throw std::domain_error("BForm::homogenize: zero polynomial");
        unsigned e = static_cast<unsigned>(p.degree());
        BForm f(e + x1_mult);
        for (unsigned j = 0; j <= e; ++j) f.c_[e - j + x1_mult] = p.coeff(j);
        return f;
    }

    /// First nonzero coefficient scaled to 1 (monomial order x0 > x1).
    BForm normalized() const {
        if (is_zero()) return *this;
        return *this * (GaussRat(1) / c_[mult_at_infinity()]);
    }

    std::string str(const std::string& v0 = "x0", const std::string& v1 = "x1") const;

private:
    unsigned d_;
    std::vector<GaussRat> c_;
};

inline std::string BForm::str(const std::string& v0, const std::string& v1) const {
    std::string s;
    for (unsigned k = 0; k <= d_; ++k) {
        if (c_[k].is_zero()) continue;
        std::string term;
        std::string cs = gauss_str(c_[k]);
        unsigned e0 = d_ - k, e1 = k;
        std::string mono;
        auto app = [&](const std::string& v, unsigned e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        app(v0, e0);
        app(v1, e1);
        if (mono.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = mono;
        } else if (cs == "-1") {
            term = "-" + mono;
        } else if (!c_[k].is_real()) {
            term = "(" + cs + ")*" + mono;
        } else {
            term = cs + "*" + mono;
        }
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s.empty() ? "0" : s;
}

/// GCD of two binary forms: the x1 factor is handled by multiplicity at
/// [1:0], the rest by the univariate Euclidean algorithm.  Result is
/// normalized (first nonzero coefficient 1).
inline BForm gcd_binary(const BForm& f, const BForm& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd_binary: both zero");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    unsigned mf = f.mult_at_infinity(), mg = g.mult_at_infinity();
    auto uf = f.dehomogenize();
    auto ug = g.dehomogenize();
    auto u = upoly_gcd(uf, ug);
    return BForm::homogenize(u, std::min(mf, mg)).normalized();
}

inline BForm squarefree_part(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero form");
    unsigned m = f.mult_at_infinity();
    auto u = f.dehomogenize();
    if (u.degree() <= 0) return BForm::homogenize(UPoly<GaussRat>(GaussRat(1)), m > 0 ? 1 : 0);
    auto g = upoly_gcd(u, u.derivative());
    auto sf = u / g;
    return BForm::homogenize(sf, m > 0 ? 1 : 0).normalized();
}

inline bool is_squarefree(const BForm& f) {
    if (f.is_zero()) return false;
    if (f.mult_at_infinity() > 1) return false;
    auto u = f.dehomogenize();
    if (u.degree() <= 0) return true;
    return upoly_gcd(u, u.derivative()).degree() == 0;
}

/// Exact divisibility a | b; on squarefree inputs this is containment of
/// projective root sets.
inline bool divides(const BForm& a, const BForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("divides: zero form");
    if (a.degree() > b.degree()) return false;
    if (a.mult_at_infinity() > b.mult_at_infinity()) return false;
    auto [q, r] = divmod(b.dehomogenize(), a.dehomogenize());
    (void)q;
    return r.is_zero();
}

/// Resultant of homogeneous binary forms of their full formal degrees, via
/// the Sylvester matrix determinant.  Zero iff F and G share a projective
/// root (including [1:0], which shows up as vanishing leading coefficients).
inline GaussRat resultant(const BForm& f, const BForm& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero form");
    const unsigned m = f.degree(), n = g.degree();
    if (m == 0) return pow(f.coeff(0), n);
    if (n == 0) return pow(g.coeff(0), m);
    const unsigned sz = m + n;
    // Bareiss needs a Mat; build the classical Sylvester layout with
    // coefficients in x0-descending order.
    std::vector<GaussRat> a(m + 1), b(n + 1);
    for (unsigned k = 0; k <= m; ++k) a[k] = f.coeff(k);
    for (unsigned k = 0; k <= n; ++k) b[k] = g.coeff(k);
    std::vector<std::vector<GaussRat>> s(sz, std::vector<GaussRat>(sz, GaussRat(0)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k <= m; ++k) s[i][i + k] = a[k];
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k <= n; ++k) s[n + i][i + k] = b[k];
    // cofactor-free fraction-free determinant (small sizes only)
    // Bareiss in place:
    GaussRat prev(1);
    int sign = 1;
    for (unsigned k = 0; k + 1 < sz; ++k) {
        unsigned piv = k;
        while (piv < sz && s[piv][k].is_zero()) ++piv;
        if (piv == sz) return GaussRat(0);
        if (piv != k) {
            sign = -sign;
            std::swap(s[piv], s[k]);
        }
        for (unsigned i = k + 1; i < sz; ++i) {
            for (unsigned j = k + 1; j < sz; ++j)
                s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]) / prev;
            s[i][k] = GaussRat(0);
        }
        prev = s[k][k];
    }
    GaussRat det = s[sz - 1][sz - 1];
    return sign < 0 ? -det : det;
}

/// Discriminant-style invariant: Res(dF/dx0, dF/dx1).  Vanishes iff F has a
/// repeated projective root (degree >= 2).
inline GaussRat discriminant(const BForm& f) {
    if (f.is_zero()) throw std::domain_error("discriminant: zero form");
    if (f.degree() < 2) throw std::domain_error("discriminant: degree < 2");
    BForm f0 = f.dx0(), f1 = f.dx1();
    if (f0.is_zero() || f1.is_zero()) return GaussRat(0);
    return resultant(f0, f1);
}

struct NumRoot {
    CFloat x0, x1;  // projective, normalized so |max coord| = 1-ish
    unsigned multiplicity;
};

namespace detail {
inline std::vector<CFloat> companion_roots(const UPoly<GaussRat>& p) {
    const long n = p.degree();
    std::vector<CFloat> out;
    if (n <= 0) return out;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    CFloat lead = p.coeff(static_cast<std::size_t>(n)).to_complex();
    for (long j = 0; j < n; ++j) c(j, n - 1) = -p.coeff(static_cast<std::size_t>(j)).to_complex() / lead;
    for (long j = 1; j < n; ++j) c(j, j - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    for (long j = 0; j < n; ++j) out.push_back(es.eigenvalues()(j));
    return out;
}
}  // namespace detail

/// Numeric roots in P^1 with multiplicity: Yun squarefree split, companion
/// matrices per squarefree factor, plus [1:0] from the x1 multiplicity.
/// Roots within tol (chordal) are merged with summed multiplicity.
inline std::vector<NumRoot> roots_numeric(const BForm& f, double tol) {
    if (f.is_zero()) throw std::domain_error("roots_numeric: zero form");
    if (tol <= 0) throw std::invalid_argument("roots_numeric: tol must be positive");
    std::vector<NumRoot> out;
    unsigned m = f.mult_at_infinity();
    if (m > 0) out.push_back({CFloat(1), CFloat(0), m});
    auto u = f.dehomogenize();
    if (u.degree() > 0) {
        auto factors = yun_squarefree(u);
        for (std::size_t mi = 0; mi < factors.size(); ++mi) {
            for (const auto& t : detail::companion_roots(factors[mi])) {
                double s = std::max(1.0, std::abs(t));
                out.push_back({t / s, CFloat(1) / s, static_cast<unsigned>(mi + 1)});
            }
        }
    }
    // chordal-metric cluster merge
    auto chordal = [](const NumRoot& a, const NumRoot& b) {
        CFloat cr = a.x0 * b.x1 - a.x1 * b.x0;
        double na = std::sqrt(std::norm(a.x0) + std::norm(a.x1));
        double nb = std::sqrt(std::norm(b.x0) + std::norm(b.x1));
        return std::abs(cr) / (na * nb);
    };
    std::vector<NumRoot> merged;
    for (const auto& r : out) {
        bool absorbed = false;
        for (auto& mr : merged) {
            if (chordal(mr, r) < tol) {
                mr.multiplicity += r.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(r);
    }
    return merged;
}

}  // namespace waring_eig
