#include "hx/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hx {

int StarWord::exponent_sum() const {
    int e = 0;
    for (Letter l : letters) {
        e += (l == Letter::plain) ? 1 : -1;
    }
    return e;
}

cplx trace(const Matrix2C& M) {
    return M.m11 + M.m22;
}

cplx normalized_trace(const Matrix2C& M) {
    return (M.m11 + M.m22) / 2.0;
}

PolarForm polar_decompose(cplx z) {
    require_finite(z, "polar_decompose");
    if (z == cplx{}) {
        throw DomainError(errc::zero_input, "polar_decompose: zero has no unit factor");
    }
    double r = std::abs(z);
    return {r, z / r};
}

cplx word_moment_oracle(double t, const Hypercomplex& x, const StarWord& w) {
    Matrix2C T = realize(t, x);
    Matrix2C S = mat_adjoint(T);
    Matrix2C P = identity2();
    for (Letter l : w.letters) {
        P = mat_mul(P, l == Letter::plain ? T : S);
    }
    return normalized_trace(P);
}

namespace {

// Integer power on the unit circle; negative exponents via the conjugate.
cplx unit_pow(cplx w_o, int e) {
    cplx base = e < 0 ? std::conj(w_o) : w_o;
    int n = e < 0 ? -e : e;
    cplx r{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        r *= base;
    }
    return r;
}

}  // namespace

double word_moment_closed(double t, const Hypercomplex& x, const StarWord& w) {
    require_finite(t, "word_moment_closed");
    require_finite(x.a, "word_moment_closed");
    require_finite(x.b, "word_moment_closed");
    if (t >= 0.0 && x.b != cplx{}) {
        throw DomainError(errc::similarity_not_established,
                          "word_moment_closed: formula unproven for t >= 0 with b != 0");
    }
    cplx w_val = spectralize(t, x).value();
    if (w_val == cplx{}) {
        return 0.0;  // r^n kills the formula for any nonempty word
    }
    PolarForm p = polar_decompose(w_val);
    double rn = std::pow(p.r, static_cast<double>(w.size()));
    return rn * unit_pow(p.w_o, w.exponent_sum()).real();
}

cplx moment_pair_plain_star(double t, const Hypercomplex& x, const Hypercomplex& y) {
    cplx bb = t * t * x.b * std::conj(y.b) + std::conj(x.b) * y.b;
    return (x.a * std::conj(y.a)).real() + bb / 2.0;
}

cplx moment_pair_star_plain(double t, const Hypercomplex& x, const Hypercomplex& y) {
    cplx bb = t * t * std::conj(x.b) * y.b + x.b * std::conj(y.b);
    return (std::conj(x.a) * y.a).real() + bb / 2.0;
}

namespace {

struct ClosedFlags {
    bool self_adjoint, projection, normal, unitary;
};

ClosedFlags classify_closed(double t, const Hypercomplex& x, double tol) {
    double abs_a = std::abs(x.a);
    double abs_b = std::abs(x.b);
    double thr = tol * std::max({1.0, abs_a, abs_b});
    bool a_real = std::abs(x.a.imag()) <= thr;
    bool b_zero = abs_b <= thr;
    bool a_zero = abs_a <= thr;
    bool a_one = std::abs(x.a - cplx{1.0, 0.0}) <= thr;
    bool a_unit = std::abs(abs_a - 1.0) <= thr;

    ClosedFlags f{};
    f.self_adjoint = (t == 1.0) ? a_real : (a_real && b_zero);

    f.projection = (a_zero && b_zero) || (a_one && b_zero);
    if (t == 1.0) {
        f.projection = f.projection || (std::abs(x.a - cplx{0.5, 0.0}) <= thr &&
                                        std::abs(abs_b - 0.5) <= thr);
    }

    if (t == -1.0) {
        f.normal = true;
    } else if (t == 1.0) {
        f.normal = a_real || b_zero;
    } else {
        f.normal = b_zero;
    }

    if (t == -1.0) {
        double s = std::norm(x.a) + std::norm(x.b);
        f.unitary = std::abs(s - 1.0) <= tol * std::max(1.0, s);
    } else if (t == 1.0) {
        f.unitary = (b_zero && a_unit) ||
                    (a_zero && (std::abs(x.b - cplx{1.0, 0.0}) <= thr ||
                                std::abs(x.b + cplx{1.0, 0.0}) <= thr));
    } else {
        f.unitary = b_zero && a_unit;
    }
    return f;
}

ClosedFlags classify_brute(double t, const Hypercomplex& x, double tol) {
    Matrix2C T = realize(t, x);
    Matrix2C S = mat_adjoint(T);
    double n = mat_max_norm(T);
    double thr1 = tol * std::max(1.0, n);
    double thr2 = tol * std::max(1.0, n * n);
    Matrix2C ST = mat_mul(S, T);
    Matrix2C TS = mat_mul(T, S);

    ClosedFlags f{};
    f.self_adjoint = mat_max_norm(mat_sub(S, T)) <= thr1;
    f.projection = f.self_adjoint && mat_max_norm(mat_sub(mat_mul(T, T), T)) <= thr2;
    f.normal = mat_max_norm(mat_sub(ST, TS)) <= thr2;
    f.unitary = mat_max_norm(mat_sub(ST, identity2())) <= thr2 &&
                mat_max_norm(mat_sub(TS, identity2())) <= thr2;
    return f;
}

}  // namespace

OperatorClass classify_operator(double t, const Hypercomplex& x, double tol) {
    ClosedFlags closed = classify_closed(t, x, tol);
    ClosedFlags brute = classify_brute(t, x, tol);
    if (closed.self_adjoint != brute.self_adjoint || closed.projection != brute.projection ||
        closed.normal != brute.normal || closed.unitary != brute.unitary) {
        throw std::logic_error("classify_operator: closed-form and matrix predicates disagree");
    }
    return {closed.self_adjoint, closed.projection, closed.normal, closed.unitary};
}

std::vector<cplx> moment_sequence(double t, const Hypercomplex& x, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("moment_sequence: n_max must be >= 1");
    }
    Matrix2C T = realize(t, x);
    Matrix2C P = identity2();
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int k = 0; k < n_max; ++k) {
        P = mat_mul(P, T);
        out.push_back(normalized_trace(P));
    }
    return out;
}

}  // namespace hx
