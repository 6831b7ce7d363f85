#include "hx/hypercomplex.hpp"

#include <cmath>
#include <string>

namespace hx {

bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(cplx z, const char* where) {
    if (!is_finite(z)) {
        throw DomainError(errc::nonfinite, std::string(where) + ": non-finite component");
    }
}

void require_finite(double v, const char* where) {
    if (!std::isfinite(v)) {
        throw DomainError(errc::nonfinite, std::string(where) + ": non-finite value");
    }
}

bool operator==(const Hypercomplex& x, const Hypercomplex& y) {
    return x.a == y.a && x.b == y.b;
}

const char* to_string(AlgebraicClass c) {
    switch (c) {
        case AlgebraicClass::Invertible: return "invertible";
        case AlgebraicClass::Singular: return "singular";
        case AlgebraicClass::Zero: return "zero";
    }
    return "?";
}

Hypercomplex add(const Hypercomplex& x, const Hypercomplex& y) {
    require_finite(x.a, "add");
    require_finite(x.b, "add");
    require_finite(y.a, "add");
    require_finite(y.b, "add");
    return {x.a + y.a, x.b + y.b};
}

Hypercomplex mul(double t, const Hypercomplex& x, const Hypercomplex& y) {
    require_finite(t, "mul");
    require_finite(x.a, "mul");
    require_finite(x.b, "mul");
    require_finite(y.a, "mul");
    require_finite(y.b, "mul");
    return {x.a * y.a + t * x.b * std::conj(y.b), x.a * y.b + x.b * std::conj(y.a)};
}

double det(double t, const Hypercomplex& x) {
    require_finite(t, "det");
    require_finite(x.a, "det");
    require_finite(x.b, "det");
    return std::norm(x.a) - t * std::norm(x.b);
}

AlgebraicClass classify_algebraic(double t, const Hypercomplex& x, double tol) {
    require_finite(t, "classify_algebraic");
    require_finite(x.a, "classify_algebraic");
    require_finite(x.b, "classify_algebraic");
    if (x.is_zero()) {
        return AlgebraicClass::Zero;
    }
    if (t < 0.0) {
        // det = |a|^2 + |t||b|^2 > 0 for every nonzero element: a division ring.
        return AlgebraicClass::Invertible;
    }
    if (t == 0.0) {
        return x.a == cplx{} ? AlgebraicClass::Singular : AlgebraicClass::Invertible;
    }
    double d = std::norm(x.a) - t * std::norm(x.b);
    double scale = std::norm(x.a) + t * std::norm(x.b);
    return std::abs(d) > tol * std::max(1.0, scale) ? AlgebraicClass::Invertible
                                                    : AlgebraicClass::Singular;
}

Hypercomplex inverse(double t, const Hypercomplex& x) {
    switch (classify_algebraic(t, x)) {
        case AlgebraicClass::Zero:
            throw DomainError(errc::zero_element, "inverse: zero element");
        case AlgebraicClass::Singular:
            throw DomainError(errc::singular, "inverse: determinant vanishes");
        case AlgebraicClass::Invertible:
            break;
    }
    double d = det(t, x);
    Hypercomplex r{std::conj(x.a) / d, -x.b / d};
    require_finite(r.a, "inverse");
    require_finite(r.b, "inverse");
    return r;
}

}  // namespace hx
