#pragma once

#include <utility>
#include <vector>

#include "hx/matrix.hpp"

namespace hx {

// Principal spectral value sigma_t(a,b), stored structurally as the real part
// x and the radicand R = Im(a)^2 - t|b|^2 rather than as an evaluated complex
// number, so the conjugate convention stays a total function of sign(R):
//   R >= 0: value = x + s*i*sqrt(R),  conjugate flips the imaginary sign;
//   R <  0: value = x - sqrt(|R|),    conjugate = x + sqrt(|R|).
// The branch s is +1 except for (a,0) with Im(a) < 0, where sigma must equal
// a itself and the two fields alone cannot encode which root that is.
struct SpectralValue {
    double x = 0.0;
    double R = 0.0;
    int sign = +1;

    cplx value() const;
    SpectralValue symbolic_conjugate() const;
};

enum class SpectralClass {
    Plus,       // R > 0: both spectrum points non-real
    MinusZero,  // R <= 0: real spectrum
};

const char* to_string(SpectralClass c);

// Real-coefficient polynomial, ascending degree. Real coefficients are what
// makes evaluation commute with conjugation: g(conj z) = conj(g(z)).
struct RealPoly {
    std::vector<double> coeffs;

    cplx eval(cplx z) const;
};

// Monic characteristic polynomial z^2 + c1*z + c0 of the realization:
// c1 = -2 Re(a), c0 = det(t, x).
std::pair<double, double> char_poly(double t, const Hypercomplex& x);

SpectralValue spectralize(double t, const Hypercomplex& x);

// The two spectrum points (value, symbolic conjugate), i.e. the roots of
// char_poly. First element is always the principal value.
std::pair<cplx, cplx> spectrum(double t, const Hypercomplex& x);

// diag(w, w_bar). For b = 0 this coincides with realize(t, x).
Matrix2C spectral_form(double t, const Hypercomplex& x);

// Plus iff R > tol * max(1, scale of R's terms); equivalent to the spectrum
// being non-real.
SpectralClass classify_spectral(double t, const Hypercomplex& x, double tol = kDefaultTol);

// sigma_t(x) == sigma_t(y), compared on the structural (x, R) data (plus the
// branch when R > 0), not on evaluated values. An equivalence relation.
bool spectral_related(double t, const Hypercomplex& x, const Hypercomplex& y,
                      double tol = kDefaultTol);

// The explicit invertible element Q = realize(t, (1, conj((w-a)/(t*b)))) that
// intertwines the realization with its spectral form: Q*Sigma = [h]*Q, with
// det(Q) = 1 - t*|(w-a)/(t*b)|^2 >= 1. Requires t < 0 (bad_scale otherwise)
// and b != 0 (zero_b; for b = 0 the spectral form already equals the
// realization).
Matrix2C conjugator(double t, const Hypercomplex& h);

// || Sigma - Q^{-1} [h] Q ||_max for t < 0 (b = 0 compares Sigma against the
// realization directly). Throws bad_scale for t >= 0.
double similarity_residual(double t, const Hypercomplex& h);

// Horner evaluation of g at M, with M^0 = I.
Matrix2C poly_eval_matrix(const RealPoly& g, const Matrix2C& M);

// Image of the spectrum under g: (g(w), g(w_bar)). For R >= 0 the second
// component equals conj(g(w)); for a real spectrum it is g at the other root.
// Matches the eigenvalue pair of poly_eval_matrix(g, realize(t, x)).
std::pair<cplx, cplx> spectral_mapping(double t, const RealPoly& g, const Hypercomplex& x);

}  // namespace hx
