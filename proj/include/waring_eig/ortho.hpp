#pragma once

// Exact complex-orthogonal matrices (A^T A = I over the Gaussian rationals)
// via the Cayley transform, and their action on forms and points.

#include <stdexcept>
#include <vector>

#include "waring_eig/bform.hpp"
#include "waring_eig/linalg.hpp"
#include "waring_eig/nform.hpp"
#include "waring_eig/rand.hpp"

namespace waring_eig {

inline bool is_orthogonal(const ExactMatrix& a) {
    if (a.rows() != a.cols()) return false;
    return a.transpose() * a == ExactMatrix::identity(a.rows());
}

/// A = (I - S)(I + S)^{-1} for skew-symmetric S; always special orthogonal.
inline ExactMatrix cayley(const ExactMatrix& s) {
    const std::size_t n = s.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s(i, j) != -s(j, i)) throw std::invalid_argument("cayley: not skew-symmetric");
    ExactMatrix id = ExactMatrix::identity(n);
    return (id - s) * inverse(id + s);
}

/// Random exact orthogonal matrix: Cayley transform of a small random
/// skew-symmetric matrix, retried when I + S is singular; optionally
/// composed with diag(-1,1,...,1) so both determinant signs occur.
inline ExactMatrix random_ortho(std::size_t size, Rng& rng, bool allow_reflection = true) {
    for (;;) {
        ExactMatrix s(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) {
                GaussRat v(rand_rat(rng, 3));
                s(i, j) = v;
                s(j, i) = -v;
            }
        try {
            ExactMatrix a = cayley(s);
            if (allow_reflection && rand_int(rng, 0, 1) == 1)
                for (std::size_t j = 0; j < size; ++j) a(0, j) = -a(0, j);
            return a;
        } catch (const std::domain_error&) {
            // I + S singular; redraw
        }
    }
}

inline ExactMatrix random_ortho(std::size_t size, std::uint64_t seed, bool allow_reflection = true) {
    Rng rng(seed);
    return random_ortho(size, rng, allow_reflection);
}

/// (A.F)(x) = F(A^T x): substitute column i of A for x_i.
inline NForm ortho_act(const ExactMatrix& a, const NForm& f) {
    if (!is_orthogonal(a)) throw std::invalid_argument("ortho_act: matrix not orthogonal");
    if (a.rows() != f.nvars()) throw std::invalid_argument("ortho_act: size mismatch");
    std::vector<LinForm> subs;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        std::vector<GaussRat> col(a.rows());
        for (std::size_t j = 0; j < a.rows(); ++j) col[j] = a(j, i);
        subs.emplace_back(std::move(col));
    }
    return f.substitute_linear(subs);
}

inline BForm ortho_act(const ExactMatrix& a, const BForm& f) {
    return to_bform(ortho_act(a, to_nform(f)));
}

inline ProjPoint ortho_act_point(const ExactMatrix& a, const ProjPoint& p) {
    if (!is_orthogonal(a)) throw std::invalid_argument("ortho_act_point: matrix not orthogonal");
    return ProjPoint(a.mul_vec(p.coords));
}

inline LinForm ortho_act_lin(const ExactMatrix& a, const LinForm& l) {
    return LinForm(a.mul_vec(l.coords));
}

inline GaussRat det_exact(const ExactMatrix& a) { return bareiss_det(a); }

}  // namespace waring_eig
