#pragma once

// Seeded randomness helpers.  Every sampler in the library takes an explicit
// seed or an Rng&, so runs are reproducible.

#include <random>
#include <vector>

#include "waring_eig/gaussrat.hpp"
#include "waring_eig/nform.hpp"

namespace waring_eig {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng);
}

/// Small-height rational with numerator in [-h,h] and denominator in [1,h].
inline Rat rand_rat(Rng& rng, long h = 9) {
    Rat r(rand_int(rng, -h, h), rand_int(rng, 1, h));
    r.canonicalize();
    return r;
}

inline Rat rand_rat_nonzero(Rng& rng, long h = 9) {
    for (;;) {
        Rat r = rand_rat(rng, h);
        if (r != 0) return r;
    }
}

inline GaussRat rand_gauss(Rng& rng, long h = 9) {
    return GaussRat(rand_rat(rng, h), rand_rat(rng, h));
}

inline LinForm rand_linform(Rng& rng, unsigned nvars, long h = 9) {
    for (;;) {
        std::vector<GaussRat> c(nvars);
        for (auto& x : c) x = GaussRat(rand_rat(rng, h));
        LinForm l(std::move(c));
        if (!l.is_zero()) return l;
    }
}

/// Random exact form with every monomial coefficient drawn independently.
inline NForm rand_nform(Rng& rng, unsigned nvars, unsigned degree, long h = 9) {
    NForm f(nvars, degree);
    for (const auto& a : all_exponents(nvars, degree)) f.set(a, GaussRat(rand_rat(rng, h)));
    return f;
}

}  // namespace waring_eig
