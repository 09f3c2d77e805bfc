#pragma once

// Dense univariate polynomials over a generic coefficient ring.  Used with
// GaussRat coefficients for dehomogenized binary forms and for catalecticant
// entries that are polynomials in a pencil parameter.

#include <stdexcept>
#include <vector>

#include "waring_eig/gaussrat.hpp"

namespace waring_eig {

template <typename K>
class UPoly {
public:
    UPoly() {}
    UPoly(const K& c) {
        if (!is_zero_coeff(c)) c_.push_back(c);
    }
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const K& c, std::size_t e) {
        if (is_zero_coeff(c)) return UPoly();
        std::vector<K> v(e + 1, K(0));
        v[e] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t e) const { return e < c_.size() ? c_[e] : K(0); }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("UPoly: zero has no leading coefficient");
        return c_.back();
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * K(static_cast<long>(j));
        return UPoly(std::move(d));
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t j = 0; j < a.c_.size(); ++j) v[j] += a.c_[j];
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[j] += b.c_[j];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const K& s) {
        UPoly r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Exact division; throws when the division leaves a remainder.  This is
    /// what Bareiss elimination over UPoly entries relies on.
    friend UPoly operator/(const UPoly& a, const UPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
        return q;
    }

    /// Polynomial long division over a field.
    friend std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
        UPoly q;
        q.c_.assign(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, K(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            K f = a.lead() / b.lead();
            q.c_[shift] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j) a.c_[shift + j] -= f * b.c_[j];
            a.trim();
        }
        q.trim();
        return {q, a};
    }

private:
    static bool is_zero_coeff(const K& c) { return c.is_zero(); }
    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;  // ascending powers
};

/// Monic gcd over a field; gcd(0,0) throws.
template <typename K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("upoly_gcd: both zero");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a * (K(1) / a.lead());
}

template <typename K>
UPoly<K> upoly_monic(const UPoly<K>& a) {
    if (a.is_zero()) return a;
    return a * (K(1) / a.lead());
}

/// Squarefree decomposition (Yun): returns factors f_1, f_2, ... with
/// a = lc * prod f_m^m, each f_m squarefree, pairwise coprime (may be 1).
template <typename K>
std::vector<UPoly<K>> yun_squarefree(const UPoly<K>& a) {
    std::vector<UPoly<K>> out;
    if (a.degree() <= 0) return out;
    UPoly<K> f = upoly_monic(a);
    UPoly<K> g = upoly_gcd(f, f.derivative());
    UPoly<K> w = f / g;
    UPoly<K> y = f.derivative() / g;
    UPoly<K> z = y - w.derivative();
    while (w.degree() > 0) {
        UPoly<K> h = z.is_zero() ? w : upoly_gcd(w, z);
        out.push_back(upoly_monic(h));
        w = w / h;
        if (w.degree() == 0) break;
        y = z.is_zero() ? UPoly<K>() : z / h;
        z = y - w.derivative();
    }
    return out;
}

}  // namespace waring_eig
