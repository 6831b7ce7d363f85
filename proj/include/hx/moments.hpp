#pragma once

#include <vector>

#include "hx/spectral.hpp"

namespace hx {

enum class Letter { plain, star };

// A word over {plain, star} selecting factors T or T* in a moment product.
// Text form: one char per letter, '1' for plain, '*' for star (e.g. "1*1*").
struct StarWord {
    std::vector<Letter> letters;

    // Exponent sum: +1 per plain letter, -1 per star.
    int exponent_sum() const;
    std::size_t size() const { return letters.size(); }
};

struct PolarForm {
    double r = 0.0;  // modulus
    cplx w_o{};      // unit-circle factor, r * w_o reconstructs the input
};

struct OperatorClass {
    bool self_adjoint = false;
    bool projection = false;
    bool normal = false;
    bool unitary = false;
};

cplx trace(const Matrix2C& M);
cplx normalized_trace(const Matrix2C& M);  // tau = trace / 2

// Throws zero_input for z = 0.
PolarForm polar_decompose(cplx z);

// tau of the product over the word with M = realize(t, x), M^star = adjoint,
// by direct matrix multiplication. The ground truth every closed form is
// checked against.
cplx word_moment_oracle(double t, const Hypercomplex& x, const StarWord& w);

// Closed form r^n * Re(w_o^{sum e_l}) with (r, w_o) the polar parts of the
// spectral value. Proven only when realization and spectral form are similar:
// t < 0, or b = 0. Otherwise throws similarity_not_established and the caller
// must fall back to the oracle. A zero spectral value yields 0 for any
// nonempty word (the r^n factor annihilates the formula).
double word_moment_closed(double t, const Hypercomplex& x, const StarWord& w);

// Closed forms for the two mixed two-letter moments of a pair of elements:
// tau([x][y]*) = Re(a1 conj(a2)) + (t^2 b1 conj(b2) + conj(b1) b2) / 2, and
// tau([x]*[y]) = Re(conj(a1) a2) + (t^2 conj(b1) b2 + b1 conj(b2)) / 2.
cplx moment_pair_plain_star(double t, const Hypercomplex& x, const Hypercomplex& y);
cplx moment_pair_star_plain(double t, const Hypercomplex& x, const Hypercomplex& y);

// Flags from the per-scale closed-form characterizations:
//   self_adjoint: t != 1 -> a real and b = 0;  t = 1 -> a real
//   projection:   t != 1 -> (0,0) or (1,0);    t = 1 -> also (1/2, b), |b|^2 = 1/4
//   normal:       t = -1 -> always; t = 1 -> a real or b = 0; else b = 0
//   unitary:      t = -1 -> |a|^2 + |b|^2 = 1; t = 1 -> (b=0, |a|=1) or (0,+-1);
//                 else b = 0 and |a| = 1
// Every flag is also evaluated as the brute-force matrix predicate (T* = T,
// T* = T = T^2, T*T = TT*, T*T = I = TT*); disagreement beyond tolerance is a
// logic error, not a classification result.
OperatorClass classify_operator(double t, const Hypercomplex& x, double tol = kDefaultTol);

// (tau(T^k))_{k=1..n_max} by the oracle.
std::vector<cplx> moment_sequence(double t, const Hypercomplex& x, int n_max);

}  // namespace hx
