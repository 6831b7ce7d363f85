#pragma once

#include <complex>

#include "hx/errors.hpp"

namespace hx {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-9;

bool is_finite(cplx z);

// Throws DomainError(errc::nonfinite) if any component is NaN or Inf.
void require_finite(cplx z, const char* where);
void require_finite(double v, const char* where);

// A pair (a, b) of complex numbers. The scale t is never stored; it is an
// explicit argument to every scaled operation, so one value can be viewed as
// a member of the whole family of rings at once.
struct Hypercomplex {
    cplx a{};
    cplx b{};

    bool is_zero() const { return a == cplx{} && b == cplx{}; }
};

bool operator==(const Hypercomplex& x, const Hypercomplex& y);

inline Hypercomplex unity() { return {cplx{1.0, 0.0}, cplx{}}; }

enum class AlgebraicClass {
    Invertible,  // |a|^2 != t|b|^2
    Singular,    // nonzero with |a|^2 == t|b|^2
    Zero,
};

const char* to_string(AlgebraicClass c);

Hypercomplex add(const Hypercomplex& x, const Hypercomplex& y);

// Scaled product: (a1*a2 + t*b1*conj(b2), a1*b2 + b1*conj(a2)).
// Associative and distributive, unital with (1,0); not commutative in general.
Hypercomplex mul(double t, const Hypercomplex& x, const Hypercomplex& y);

// |a|^2 - t|b|^2; equals the determinant of the realization matrix.
double det(double t, const Hypercomplex& x);

// (conj(a)/d, -b/d) with d = det(t,x). Throws Zero for the zero pair and
// Singular when the determinant vanishes (within the default tolerance).
Hypercomplex inverse(double t, const Hypercomplex& x);

// For t <= 0 the determinant is a sum of nonnegative terms, so sign tests are
// exact: t < 0 invertible iff nonzero, t = 0 invertible iff a != 0. Only for
// t > 0 does cancellation occur, and there the tolerance band applies,
// relative to max(1, |a|^2 + t|b|^2).
AlgebraicClass classify_algebraic(double t, const Hypercomplex& x, double tol = kDefaultTol);

}  // namespace hx
