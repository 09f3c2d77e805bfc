#pragma once

// Exact scalars: rationals (GMP) and Gaussian rationals a+bi, the base
// field for all exact computation in this library.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring_eig {

using Rat = mpq_class;
using CFloat = std::complex<double>;

inline double to_double(const Rat& r) { return r.get_d(); }

/// Complex number with rational real and imaginary parts.  Field operations
/// throughout; division by zero throws.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(int v) : re(v), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    /// re^2 + im^2; zero iff the value is zero.
    Rat norm() const { return re * re + im * im; }

    CFloat to_complex() const { return CFloat(re.get_d(), im.get_d()); }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat pow(const GaussRat& z, unsigned e) {
    GaussRat acc(1);
    GaussRat base = z;
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

inline Rat rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string gauss_str(const GaussRat& z) {
    if (z.im == 0) return rat_str(z.re);
    std::string s;
    if (z.re != 0) s = rat_str(z.re);
    if (z.im > 0 && !s.empty()) s += "+";
    if (z.im == 1)
        s += "i";
    else if (z.im == -1)
        s += "-i";
    else
        s += rat_str(z.im) + "i";
    return s;
}

/// Parse "p" or "p/q" (with optional sign) into a rational.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

/// Nearest rational with denominator <= max_den via continued fractions.
/// Intended for reconstructing exact values from numeric roots; callers must
/// verify the result exactly.
inline Rat rat_reconstruct(double x, unsigned long max_den = 1000000) {
    if (!std::isfinite(x)) throw std::domain_error("rat_reconstruct: non-finite");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // continued fraction convergents
    unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        unsigned long a = static_cast<unsigned long>(fl);
        unsigned long p2 = a * p1 + p0;
        unsigned long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-12) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rat(0);
    Rat r(static_cast<long>(p1), static_cast<long>(q1));
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

inline GaussRat gauss_reconstruct(const CFloat& z, unsigned long max_den = 1000000) {
    return GaussRat(rat_reconstruct(z.real(), max_den), rat_reconstruct(z.imag(), max_den));
}

}  // namespace waring_eig
