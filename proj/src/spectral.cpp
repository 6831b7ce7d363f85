#include "hx/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hx {

cplx SpectralValue::value() const {
    if (R >= 0.0) {
        return {x, sign * std::sqrt(R)};
    }
    return {x - sign * std::sqrt(-R), 0.0};
}

SpectralValue SpectralValue::symbolic_conjugate() const {
    return {x, R, -sign};
}

const char* to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::Plus: return "plus";
        case SpectralClass::MinusZero: return "minus-zero";
    }
    return "?";
}

cplx RealPoly::eval(cplx z) const {
    cplx r{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * z + *it;
    }
    return r;
}

std::pair<double, double> char_poly(double t, const Hypercomplex& x) {
    return {det(t, x), -2.0 * x.a.real()};
}

SpectralValue spectralize(double t, const Hypercomplex& x) {
    require_finite(t, "spectralize");
    require_finite(x.a, "spectralize");
    require_finite(x.b, "spectralize");
    double y = x.a.imag();
    if (x.b == cplx{}) {
        // sigma of (a, 0) is a itself; pick the branch that makes it so.
        return {x.a.real(), y * y, y < 0.0 ? -1 : +1};
    }
    return {x.a.real(), y * y - t * std::norm(x.b), +1};
}

std::pair<cplx, cplx> spectrum(double t, const Hypercomplex& x) {
    SpectralValue sv = spectralize(t, x);
    return {sv.value(), sv.symbolic_conjugate().value()};
}

Matrix2C spectral_form(double t, const Hypercomplex& x) {
    SpectralValue sv = spectralize(t, x);
    return {sv.value(), cplx{}, cplx{}, sv.symbolic_conjugate().value()};
}

SpectralClass classify_spectral(double t, const Hypercomplex& x, double tol) {
    SpectralValue sv = spectralize(t, x);
    double scale = x.a.imag() * x.a.imag() + std::abs(t) * std::norm(x.b);
    return sv.R > tol * std::max(1.0, scale) ? SpectralClass::Plus : SpectralClass::MinusZero;
}

bool spectral_related(double t, const Hypercomplex& x, const Hypercomplex& y, double tol) {
    SpectralValue sx = spectralize(t, x);
    SpectralValue sy = spectralize(t, y);
    if (std::abs(sx.x - sy.x) > tol * std::max({1.0, std::abs(sx.x), std::abs(sy.x)})) {
        return false;
    }
    double r_threshold = tol * std::max({1.0, std::abs(sx.R), std::abs(sy.R)});
    if (std::abs(sx.R - sy.R) > r_threshold) {
        return false;
    }
    // The branch is part of the value's identity only when the spectrum is
    // genuinely non-real.
    if (sx.R > r_threshold && sy.R > r_threshold && sx.sign != sy.sign) {
        return false;
    }
    return true;
}

Matrix2C conjugator(double t, const Hypercomplex& h) {
    require_finite(t, "conjugator");
    require_finite(h.a, "conjugator");
    require_finite(h.b, "conjugator");
    if (t >= 0.0) {
        throw DomainError(errc::bad_scale, "conjugator: defined for negative scale only");
    }
    if (h.b == cplx{}) {
        throw DomainError(errc::zero_b, "conjugator: b must be nonzero");
    }
    cplx w = spectralize(t, h).value();
    cplx q = std::conj((w - h.a) / (t * h.b));
    return realize(t, {cplx{1.0, 0.0}, q});
}

double similarity_residual(double t, const Hypercomplex& h) {
    require_finite(t, "similarity_residual");
    if (t >= 0.0) {
        throw DomainError(errc::bad_scale, "similarity_residual: defined for negative scale only");
    }
    Matrix2C sigma = spectral_form(t, h);
    Matrix2C T = realize(t, h);
    if (h.b == cplx{}) {
        return mat_max_norm(mat_sub(sigma, T));
    }
    Matrix2C Q = conjugator(t, h);
    Matrix2C conjugated = mat_mul(mat_inverse(Q), mat_mul(T, Q));
    return mat_max_norm(mat_sub(sigma, conjugated));
}

Matrix2C poly_eval_matrix(const RealPoly& g, const Matrix2C& M) {
    if (g.coeffs.empty()) {
        return {};
    }
    Matrix2C r{cplx{g.coeffs.back(), 0.0}, cplx{}, cplx{}, cplx{g.coeffs.back(), 0.0}};
    for (auto it = std::next(g.coeffs.rbegin()); it != g.coeffs.rend(); ++it) {
        r = mat_mul(r, M);
        r.m11 += *it;
        r.m22 += *it;
    }
    return r;
}

std::pair<cplx, cplx> spectral_mapping(double t, const RealPoly& g, const Hypercomplex& x) {
    SpectralValue sv = spectralize(t, x);
    return {g.eval(sv.value()), g.eval(sv.symbolic_conjugate().value())};
}

}  // namespace hx
