#pragma once

#include "hx/hypercomplex.hpp"

namespace hx {

// Row-major 2x2 complex matrix. Doubles as the brute-force oracle for every
// closed-form result in the library.
struct Matrix2C {
    cplx m11{}, m12{}, m21{}, m22{};
};

bool operator==(const Matrix2C& A, const Matrix2C& B);

Matrix2C identity2();

Matrix2C mat_add(const Matrix2C& A, const Matrix2C& B);
Matrix2C mat_sub(const Matrix2C& A, const Matrix2C& B);
Matrix2C mat_mul(const Matrix2C& A, const Matrix2C& B);
Matrix2C mat_scale(cplx s, const Matrix2C& A);
Matrix2C mat_adjoint(const Matrix2C& A);  // conjugate transpose
cplx mat_trace(const Matrix2C& A);
cplx mat_det(const Matrix2C& A);

// Largest entry magnitude; the norm used for residuals and thresholds.
double mat_max_norm(const Matrix2C& A);

// Adjugate formula. Throws Singular when |det| <= 1e-12 * (1 + max_norm^2).
Matrix2C mat_inverse(const Matrix2C& A);

Matrix2C mat_pow(const Matrix2C& A, unsigned n);

// The representation of (a,b) at scale t: [[a, t*b], [conj(b), conj(a)]].
// Additive and multiplicative, injective for fixed t.
Matrix2C realize(double t, const Hypercomplex& x);

// Inverse of realize on its image: reads a = m11 and b = conj(m21) (the (2,1)
// entry is t-independent, so this stays defined at t = 0). Throws
// not_in_realization when the template residual exceeds tol * max(1, ||M||).
Hypercomplex unrealize(double t, const Matrix2C& M, double tol = kDefaultTol);

struct MembershipReport {
    bool in_realization = false;  // matches [[a, t*b], [conj b, conj a]]
    bool in_star_set = false;     // matches [[conj a, b], [t*conj b, a]]
    double residual = 0.0;        // max entrywise defect from the nearest template
};

// Both templates share the constraint m22 = conj(m11); they differ in the
// off-diagonal one (m12 = t*conj(m21) vs m21 = t*conj(m12)). A matrix may
// satisfy both (the identity does).
MembershipReport membership(double t, const Matrix2C& M, double tol = kDefaultTol);

// The adjoint pulled back into the ring: (conj(a), b/t), defined for t^2 = 1.
// For other scales the adjoint of a b != 0 element leaves the realization set
// and adjoint_not_closed is thrown; with b = 0 the pullback (conj(a), 0)
// still exists and is returned.
Hypercomplex adjoint_in_ring(double t, const Hypercomplex& x);

}  // namespace hx
