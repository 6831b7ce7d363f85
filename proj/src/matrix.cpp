#include "hx/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hx {

namespace {

void require_finite_mat(const Matrix2C& A, const char* where) {
    require_finite(A.m11, where);
    require_finite(A.m12, where);
    require_finite(A.m21, where);
    require_finite(A.m22, where);
}

}  // namespace

bool operator==(const Matrix2C& A, const Matrix2C& B) {
    return A.m11 == B.m11 && A.m12 == B.m12 && A.m21 == B.m21 && A.m22 == B.m22;
}

Matrix2C identity2() {
    return {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{1.0, 0.0}};
}

Matrix2C mat_add(const Matrix2C& A, const Matrix2C& B) {
    return {A.m11 + B.m11, A.m12 + B.m12, A.m21 + B.m21, A.m22 + B.m22};
}

Matrix2C mat_sub(const Matrix2C& A, const Matrix2C& B) {
    return {A.m11 - B.m11, A.m12 - B.m12, A.m21 - B.m21, A.m22 - B.m22};
}

Matrix2C mat_mul(const Matrix2C& A, const Matrix2C& B) {
    return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
            A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

Matrix2C mat_scale(cplx s, const Matrix2C& A) {
    return {s * A.m11, s * A.m12, s * A.m21, s * A.m22};
}

Matrix2C mat_adjoint(const Matrix2C& A) {
    return {std::conj(A.m11), std::conj(A.m21), std::conj(A.m12), std::conj(A.m22)};
}

cplx mat_trace(const Matrix2C& A) {
    return A.m11 + A.m22;
}

cplx mat_det(const Matrix2C& A) {
    return A.m11 * A.m22 - A.m12 * A.m21;
}

double mat_max_norm(const Matrix2C& A) {
    return std::max({std::abs(A.m11), std::abs(A.m12), std::abs(A.m21), std::abs(A.m22)});
}

Matrix2C mat_inverse(const Matrix2C& A) {
    require_finite_mat(A, "mat_inverse");
    cplx d = mat_det(A);
    double n = mat_max_norm(A);
    if (std::abs(d) <= 1e-12 * (1.0 + n * n)) {
        throw DomainError(errc::singular, "mat_inverse: determinant too small");
    }
    return {A.m22 / d, -A.m12 / d, -A.m21 / d, A.m11 / d};
}

Matrix2C mat_pow(const Matrix2C& A, unsigned n) {
    Matrix2C r = identity2();
    for (unsigned k = 0; k < n; ++k) {
        r = mat_mul(r, A);
    }
    return r;
}

Matrix2C realize(double t, const Hypercomplex& x) {
    require_finite(t, "realize");
    require_finite(x.a, "realize");
    require_finite(x.b, "realize");
    return {x.a, t * x.b, std::conj(x.b), std::conj(x.a)};
}

namespace {

double realization_residual(double t, const Matrix2C& M) {
    return std::max(std::abs(M.m22 - std::conj(M.m11)), std::abs(M.m12 - t * std::conj(M.m21)));
}

double star_residual(double t, const Matrix2C& M) {
    return std::max(std::abs(M.m22 - std::conj(M.m11)), std::abs(M.m21 - t * std::conj(M.m12)));
}

}  // namespace

Hypercomplex unrealize(double t, const Matrix2C& M, double tol) {
    require_finite(t, "unrealize");
    require_finite_mat(M, "unrealize");
    double res = realization_residual(t, M);
    if (res > tol * std::max(1.0, mat_max_norm(M))) {
        throw DomainError(errc::not_in_realization, "unrealize: matrix off the template");
    }
    return {M.m11, std::conj(M.m21)};
}

MembershipReport membership(double t, const Matrix2C& M, double tol) {
    require_finite(t, "membership");
    require_finite_mat(M, "membership");
    double threshold = tol * std::max(1.0, mat_max_norm(M));
    double res_realization = realization_residual(t, M);
    double res_star = star_residual(t, M);
    MembershipReport report;
    report.in_realization = res_realization <= threshold;
    report.in_star_set = res_star <= threshold;
    report.residual = std::min(res_realization, res_star);
    return report;
}

Hypercomplex adjoint_in_ring(double t, const Hypercomplex& x) {
    require_finite(t, "adjoint_in_ring");
    require_finite(x.a, "adjoint_in_ring");
    require_finite(x.b, "adjoint_in_ring");
    if (t == 1.0 || t == -1.0) {
        return {std::conj(x.a), x.b / t};
    }
    if (x.b == cplx{}) {
        return {std::conj(x.a), cplx{}};
    }
    throw DomainError(errc::adjoint_not_closed,
                      "adjoint_in_ring: adjoint leaves the realization set for this scale");
}

}  // namespace hx
