#include "hx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hx {

namespace {

constexpr double kTau = 6.283185307179586476925287;

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(std::uint64_t seed) : rng(seed) {}

    double unif(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    cplx c() {
        double re = unif(-5.0, 5.0);
        double im = unif(-5.0, 5.0);
        return {re, im};
    }
    cplx c_min(double min_abs) {
        for (;;) {
            cplx z = c();
            if (std::abs(z) >= min_abs) return z;
        }
    }
    Hypercomplex h() {
        cplx a = c();
        cplx b = c();
        return {a, b};
    }
    double any_t() {
        switch (rng() % 8) {
            case 0: return -1.0;
            case 1: return 1.0;
            case 2: return 0.0;
            default: return unif(-10.0, 10.0);
        }
    }
    double neg_t() { return unif(-10.0, -1e-3); }
    double away_from_unit_t() {
        for (;;) {
            double t = unif(-10.0, 10.0);
            if (std::abs(t - 1.0) >= 0.05 && std::abs(t + 1.0) >= 0.05) return t;
        }
    }
    cplx unit() {
        double th = unif(0.0, kTau);
        return {std::cos(th), std::sin(th)};
    }
    StarWord word(int max_len) {
        StarWord w;
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
        for (int i = 0; i < len; ++i) {
            w.letters.push_back((rng() & 1) ? Letter::star : Letter::plain);
        }
        return w;
    }
};

double mag(const Hypercomplex& x) { return std::max(std::abs(x.a), std::abs(x.b)); }

double gap(const Hypercomplex& x, const Hypercomplex& y) {
    return std::max(std::abs(x.a - y.a), std::abs(x.b - y.b));
}

InvariantResult made(const char* name, std::size_t n, double worst, double tol) {
    return {name, n, worst, tol, worst <= tol};
}

// All 126 star words of length 1..6, enumerated once.
std::vector<StarWord> all_words_up_to_6() {
    std::vector<StarWord> out;
    for (int len = 1; len <= 6; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            StarWord w;
            for (int k = 0; k < len; ++k) {
                w.letters.push_back((mask >> k) & 1u ? Letter::star : Letter::plain);
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

cplx ipow_unit(cplx u, int e) {
    cplx base = e < 0 ? std::conj(u) : u;
    int n = e < 0 ? -e : e;
    cplx r{1.0, 0.0};
    for (int k = 0; k < n; ++k) r *= base;
    return r;
}

InvariantResult check_associativity(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h(), z = d.h();
        double m = std::max({mag(x), mag(y), mag(z), std::abs(t)});
        double scale = (1.0 + m) * (1.0 + m) * (1.0 + m);
        worst = std::max(worst, gap(mul(t, mul(t, x, y), z), mul(t, x, mul(t, y, z))) / scale);
    }
    return made("associativity", n, worst, 1e-10);
}

InvariantResult check_distributivity(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h(), z = d.h();
        double m = std::max({mag(x), mag(y), mag(z), std::abs(t)});
        double scale = (1.0 + m) * (1.0 + m) * (1.0 + m);
        double left = gap(mul(t, x, add(y, z)), add(mul(t, x, y), mul(t, x, z)));
        double right = gap(mul(t, add(x, y), z), add(mul(t, x, z), mul(t, y, z)));
        worst = std::max(worst, std::max(left, right) / scale);
    }
    return made("distributivity", n, worst, 1e-10);
}

InvariantResult check_identity(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        worst = std::max({worst, gap(mul(t, unity(), x), x), gap(mul(t, x, unity()), x),
                          gap(add(x, Hypercomplex{}), x)});
    }
    return made("identity", n, worst, 1e-14);
}

InvariantResult check_det_multiplicativity(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h();
        double lhs = det(t, mul(t, x, y));
        double rhs = det(t, x) * det(t, y);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return made("det-multiplicativity", n, worst, 1e-10);
}

InvariantResult check_inverse_consistency(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        if (classify_algebraic(t, x) != AlgebraicClass::Invertible) continue;
        try {
            Hypercomplex v = inverse(t, x);
            worst = std::max({worst, gap(mul(t, x, v), unity()), gap(mul(t, v, x), unity())});
            Matrix2C lhs = realize(t, v);
            Matrix2C rhs = mat_inverse(realize(t, x));
            worst = std::max(worst, mat_max_norm(mat_sub(lhs, rhs)));
        } catch (const DomainError&) {
            worst = 1.0;
        }
    }
    return made("inverse-consistency", n, worst, 1e-9);
}

InvariantResult check_inverse_regime_law(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    auto expect_throw = [&](double t, const Hypercomplex& x, errc want) {
        try {
            (void)inverse(t, x);
            worst = 1.0;
        } catch (const DomainError& e) {
            if (e.code() != want) worst = 1.0;
        }
    };
    for (int i = 0; i < n; ++i) {
        Hypercomplex x = d.h();
        if (classify_algebraic(d.neg_t(), x) != AlgebraicClass::Invertible) worst = 1.0;

        if (classify_algebraic(0.0, x) !=
            (x.a != cplx{} ? AlgebraicClass::Invertible : AlgebraicClass::Singular)) {
            worst = 1.0;
        }
        Hypercomplex no_a{cplx{}, d.c_min(0.1)};
        if (classify_algebraic(0.0, no_a) != AlgebraicClass::Singular) worst = 1.0;
        expect_throw(0.0, no_a, errc::singular);

        double tp = d.unif(0.1, 10.0);
        double dd = det(tp, x);
        double sc = std::max(1.0, std::norm(x.a) + tp * std::norm(x.b));
        if (std::abs(dd) > 2e-9 * sc &&
            classify_algebraic(tp, x) != AlgebraicClass::Invertible) {
            worst = 1.0;
        }
        cplx b = d.c_min(0.5);
        Hypercomplex boundary{d.unit() * (std::sqrt(tp) * std::abs(b)), b};
        if (classify_algebraic(tp, boundary) != AlgebraicClass::Singular) worst = 1.0;
        expect_throw(tp, boundary, errc::singular);

        if (classify_algebraic(d.any_t(), Hypercomplex{}) != AlgebraicClass::Zero) worst = 1.0;
        expect_throw(d.any_t(), Hypercomplex{}, errc::zero_element);
    }
    return made("inverse-regime-law", n, worst, 0.0);
}

InvariantResult check_realization_additive(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h();
        Matrix2C A = realize(t, x), B = realize(t, y);
        Matrix2C lhs = realize(t, add(x, y));
        double scale = 1.0 + mat_max_norm(A) + mat_max_norm(B);
        worst = std::max(worst, mat_max_norm(mat_sub(lhs, mat_add(A, B))) / scale);
    }
    return made("realization-additive", n, worst, 1e-14);
}

InvariantResult check_realization_multiplicative(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h();
        Matrix2C A = realize(t, x), B = realize(t, y);
        double scale = 1.0 + mat_max_norm(A) * mat_max_norm(B);
        worst = std::max(
            worst, mat_max_norm(mat_sub(realize(t, mul(t, x, y)), mat_mul(A, B))) / scale);
    }
    return made("realization-multiplicative", n, worst, 1e-12);
}

InvariantResult check_realization_roundtrip(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        worst = std::max(worst, gap(unrealize(t, realize(t, x)), x));
        Matrix2C off = realize(t, x);
        off.m12 += cplx{1.0 + std::abs(t), 0.0};
        try {
            (void)unrealize(t, off);
            worst = 1.0;
        } catch (const DomainError& e) {
            if (e.code() != errc::not_in_realization) worst = 1.0;
        }
    }
    return made("realization-roundtrip", n, worst, 0.0);
}

InvariantResult check_det_agreement(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        double dr = det(t, x);
        cplx dm = mat_det(realize(t, x));
        worst = std::max(worst, std::abs(dm - cplx{dr, 0.0}) / std::max(1.0, std::abs(dr)));
    }
    return made("det-agreement", n, worst, 1e-12);
}

InvariantResult check_matrix_inverse(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Matrix2C A{d.c(), d.c(), d.c(), d.c()};
        double nn = mat_max_norm(A);
        if (std::abs(mat_det(A)) < 0.05 * (1.0 + nn * nn)) continue;
        Matrix2C inv = mat_inverse(A);
        worst = std::max({worst, mat_max_norm(mat_sub(mat_mul(A, inv), identity2())),
                          mat_max_norm(mat_sub(mat_mul(inv, A), identity2()))});
    }
    return made("matrix-inverse", n, worst, 1e-12);
}

InvariantResult check_membership_templates(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        MembershipReport plain = membership(t, realize(t, x));
        if (!plain.in_realization) worst = 1.0;
        worst = std::max(worst, plain.residual);
        MembershipReport star = membership(t, mat_adjoint(realize(t, x)));
        if (!star.in_star_set) worst = 1.0;
        Matrix2C off = realize(t, x);
        off.m22 += cplx{3.0, 0.0};
        MembershipReport bad = membership(t, off);
        if (bad.in_realization || bad.in_star_set) worst = 1.0;
    }
    return made("membership-templates", n, worst, 1e-14);
}

InvariantResult check_adjoint_closure_law(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    const Hypercomplex j{cplx{}, cplx{1.0, 0.0}};
    for (int i = 0; i < n; ++i) {
        double t1 = (i & 1) ? 1.0 : -1.0;
        Hypercomplex x = d.h();
        Hypercomplex y = adjoint_in_ring(t1, x);
        worst = std::max(worst,
                         mat_max_norm(mat_sub(realize(t1, y), mat_adjoint(realize(t1, x)))));
        if (!membership(t1, mat_adjoint(realize(t1, x))).in_realization) worst = 1.0;

        double t2;
        switch (i % 5) {
            case 0: t2 = -0.5; break;
            case 1: t2 = 0.0; break;
            case 2: t2 = 0.5; break;
            case 3: t2 = 2.0; break;
            default: t2 = d.away_from_unit_t(); break;
        }
        if (membership(t2, mat_adjoint(realize(t2, j))).in_realization) worst = 1.0;
        try {
            (void)adjoint_in_ring(t2, j);
            worst = 1.0;
        } catch (const DomainError& e) {
            if (e.code() != errc::adjoint_not_closed) worst = 1.0;
        }
        Hypercomplex diag{d.c(), cplx{}};
        Hypercomplex back = adjoint_in_ring(t2, diag);
        worst = std::max(worst, gap(back, Hypercomplex{std::conj(diag.a), cplx{}}));
        Hypercomplex wide{d.c(), d.c_min(0.1)};
        if (membership(t2, mat_adjoint(realize(t2, wide))).in_realization) worst = 1.0;
    }
    return made("adjoint-closure-law", n, worst, 1e-14);
}

InvariantResult check_star_monoid_closure(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Matrix2C s1 = mat_adjoint(realize(t, d.h()));
        Matrix2C s2 = mat_adjoint(realize(t, d.h()));
        Matrix2C p = mat_mul(s1, s2);
        MembershipReport rep = membership(t, p);
        if (!rep.in_star_set) worst = 1.0;
        worst = std::max(worst, rep.residual / (1.0 + mat_max_norm(s1) * mat_max_norm(s2)));
    }
    return made("star-monoid-closure", n, worst, 1e-14);
}

InvariantResult check_root_consistency(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        auto [c0, c1] = char_poly(t, x);
        auto [z1, z2] = spectrum(t, x);
        double sc = 1.0 + std::abs(c0) + std::abs(c1);
        worst = std::max(worst, std::abs(z1 + z2 + cplx{c1, 0.0}) / sc);
        worst = std::max(worst, std::abs(z1 * z2 - cplx{c0, 0.0}) / sc);
        for (cplx z : {z1, z2}) {
            worst = std::max(worst,
                             std::abs(z * z + c1 * z + c0) / (sc + std::norm(z)));
        }
    }
    return made("root-consistency", n, worst, 1e-12);
}

InvariantResult check_spectral_case_split(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i % 3 == 0) {
            double t = d.any_t();
            Hypercomplex x{d.c(), cplx{}};
            auto [z1, z2] = spectrum(t, x);
            double sc = 1.0 + std::abs(x.a);
            worst = std::max(worst, std::abs(z1 - x.a) / sc);
            worst = std::max(worst, std::abs(z2 - std::conj(x.a)) / sc);
            Hypercomplex real_diag{cplx{d.unif(-5.0, 5.0), 0.0}, cplx{}};
            auto [r1, r2] = spectrum(t, real_diag);
            if (r1 != r2 || r1.imag() != 0.0) worst = 1.0;
            continue;
        }
        double t = d.any_t();
        Hypercomplex x{d.c(), d.c_min(0.05)};
        SpectralValue sv = spectralize(t, x);
        auto [z1, z2] = spectrum(t, x);
        double thr = 1e-12 * std::max(1.0, std::abs(sv.R));
        if (sv.R > thr) {
            worst = std::max(worst, std::abs(z1 - std::conj(z2)) / (1.0 + std::abs(z1)));
            if (!(z1.imag() > 0.0)) worst = 1.0;
        } else if (sv.R < -thr) {
            if (z1.imag() != 0.0 || z2.imag() != 0.0) worst = 1.0;
            if (!(z1.real() < z2.real())) worst = 1.0;
            double root = std::sqrt(-sv.R);
            double sc = 1.0 + std::abs(sv.x) + root;
            worst = std::max(worst, std::abs(z1.real() - (sv.x - root)) / sc);
            worst = std::max(worst, std::abs(z2.real() - (sv.x + root)) / sc);
        }
    }
    return made("spectral-case-split", n, worst, 1e-14);
}

InvariantResult check_classification_equivalence(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        SpectralValue sv = spectralize(t, x);
        double sc = std::max(1.0, x.a.imag() * x.a.imag() + std::abs(t) * std::norm(x.b));
        if (std::abs(sv.R) <= 1e-6 * sc) continue;
        bool plus = classify_spectral(t, x) == SpectralClass::Plus;
        auto [z1, z2] = spectrum(t, x);
        bool nonreal = z1.imag() != 0.0 && z2.imag() != 0.0;
        if (plus != (sv.R > 0.0) || plus != nonreal) worst = 1.0;
    }
    return made("classification-equivalence", n, worst, 0.0);
}

InvariantResult check_spectral_relation(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex any = d.h();
        if (!spectral_related(t, any, any)) worst = 1.0;
        // branch sign is part of the identity, so the rotation trick needs b != 0
        Hypercomplex x{d.c(), d.c_min(0.05)};
        Hypercomplex y{std::conj(x.a), x.b * d.unit()};
        Hypercomplex z{std::conj(x.a), cplx{std::abs(x.b), 0.0}};
        if (!spectral_related(t, x, y) || !spectral_related(t, y, x)) worst = 1.0;
        if (!spectral_related(t, y, z) || !spectral_related(t, x, z)) worst = 1.0;
        Hypercomplex far = add(x, Hypercomplex{cplx{1.5, 0.0}, cplx{}});
        if (spectral_related(t, x, far)) worst = 1.0;
    }
    return made("spectral-relation-equivalence", n, worst, 0.0);
}

InvariantResult check_intertwining(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.neg_t();
        Hypercomplex x{d.c(), d.c_min(1e-3)};
        Matrix2C Q = conjugator(t, x);
        Matrix2C S = spectral_form(t, x);
        Matrix2C T = realize(t, x);
        double scale = 1.0 + (mat_max_norm(S) + mat_max_norm(T)) * mat_max_norm(Q);
        worst = std::max(worst,
                         mat_max_norm(mat_sub(mat_mul(Q, S), mat_mul(T, Q))) / scale);
        cplx dq = mat_det(Q);
        double dsc = 1.0 + std::abs(dq);
        worst = std::max(worst, std::max(0.0, 1.0 - dq.real()) / dsc);
        worst = std::max(worst, std::abs(dq.imag()) / dsc);
    }
    return made("intertwining", n, worst, 1e-10);
}

InvariantResult check_similarity_residual(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.neg_t();
        Hypercomplex x = (i % 4 == 0) ? Hypercomplex{d.c(), cplx{}}
                                      : Hypercomplex{d.c(), d.c_min(1e-3)};
        worst = std::max(worst, similarity_residual(t, x));
    }
    return made("similarity-residual", n, worst, 1e-9);
}

InvariantResult check_trace_det_preservation(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        Matrix2C S = spectral_form(t, x);
        Matrix2C T = realize(t, x);
        cplx tr_s = mat_trace(S), tr_t = mat_trace(T);
        cplx dt_s = mat_det(S), dt_t = mat_det(T);
        worst = std::max(worst, std::abs(tr_s - tr_t) / std::max(1.0, std::abs(tr_t)));
        worst = std::max(worst, std::abs(dt_s - dt_t) / std::max(1.0, std::abs(dt_t)));
    }
    return made("trace-det-preservation", n, worst, 1e-10);
}

// For t > 0 with |a|^2 < t|b|^2 the two spectral roots are real and distinct,
// and no invertible element of the realization algebra intertwines the
// realization with its spectral form: writing U = realize(t,(p,q)) and
// conjugating two entries of U*Sigma - T*U forces p(s1-s2) = 0 = q(s1-s2).
// Quantitatively ||U Sigma - T U||_max >= |s1-s2| * max(|p|/2, |q|/(1+1/t)),
// a lower bound certifying that only U = 0 commutes the square.
InvariantResult check_non_similarity(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.unif(0.1, 10.0);
        cplx b = d.c_min(0.5);
        cplx a = d.unit() * (std::sqrt(t) * std::abs(b) * d.unif(0.0, 0.9));
        Hypercomplex x{a, b};
        if (!(det(t, x) < 0.0)) worst = 1.0;
        Matrix2C S = spectral_form(t, x);
        Matrix2C T = realize(t, x);
        double root_gap = std::abs(S.m11.real() - S.m22.real());
        cplx p = d.c_min(0.3), q = d.c_min(0.3);
        Matrix2C U = realize(t, Hypercomplex{p, q});
        double res = mat_max_norm(mat_sub(mat_mul(U, S), mat_mul(T, U)));
        double bound =
            root_gap * std::max(std::abs(p) / 2.0, std::abs(q) / (1.0 + 1.0 / t));
        double need = bound * (1.0 - 1e-6) - 1e-9;
        worst = std::max(worst, std::max(0.0, need - res) / (1.0 + bound));
    }
    return made("non-similarity-certificate", n, worst, 0.0);
}

InvariantResult check_spectral_mapping(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h();
        RealPoly g;
        int deg = static_cast<int>(d.rng() % 6);
        for (int k = 0; k <= deg; ++k) g.coeffs.push_back(d.unif(-3.0, 3.0));
        auto [m1, m2] = spectral_mapping(t, g, x);
        Matrix2C G = poly_eval_matrix(g, realize(t, x));
        cplx tr = mat_trace(G);
        cplx dt = mat_det(G);
        double ng = mat_max_norm(G);
        double sc1 = 1.0 + std::abs(tr) + std::abs(m1) + std::abs(m2) + ng;
        double sc2 = 1.0 + std::abs(dt) + std::norm(m1) + std::norm(m2) + ng * ng;
        worst = std::max(worst, std::abs(m1 + m2 - tr) / sc1);
        worst = std::max(worst, std::abs(m1 * m2 - dt) / sc2);
        worst = std::max(worst, std::abs(m1 * m1 - tr * m1 + dt) / sc2);
        worst = std::max(worst, std::abs(m2 * m2 - tr * m2 + dt) / sc2);
        if (spectralize(t, x).R >= 0.0) {
            worst = std::max(worst, std::abs(m2 - std::conj(m1)) / (1.0 + std::abs(m1)));
        }
    }
    return made("spectral-mapping", n, worst, 1e-8);
}

InvariantResult check_conjugate_commutation(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        RealPoly g;
        int deg = static_cast<int>(d.rng() % 6);
        for (int k = 0; k <= deg; ++k) g.coeffs.push_back(d.unif(-3.0, 3.0));
        cplx z = d.c();
        cplx lhs = g.eval(std::conj(z));
        cplx rhs = std::conj(g.eval(z));
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return made("conjugate-commutation", n, worst, 1e-12);
}

void check_word_moments(std::uint64_t seed, int n, std::vector<InvariantResult>& out) {
    Draw d(seed);
    static const std::vector<StarWord> words = all_words_up_to_6();
    double worst_re = 0.0, worst_im = 0.0, worst_flag = 0.0;
    for (int i = 0; i < n; ++i) {
        double t;
        Hypercomplex x;
        // The closed form follows the word through the similarity only when
        // the conjugating matrix can be taken unitary: diagonal elements at
        // any scale, every element at scale -1 (where the realization is
        // normal), and same-letter words at any negative scale (where only
        // traces of plain powers are transported).
        bool mixed_ok;
        switch (i % 4) {
            case 0:
                t = d.any_t();
                x = {d.c(), cplx{}};
                mixed_ok = true;
                break;
            case 1:
                t = -1.0;
                x = d.h();
                mixed_ok = true;
                break;
            default:
                t = d.neg_t();
                x = d.h();
                mixed_ok = false;
                break;
        }
        double r = std::abs(spectralize(t, x).value());
        for (const StarWord& w : words) {
            double sc = 1.0 + std::pow(r, static_cast<double>(w.size()));
            bool uniform = true;
            for (Letter l : w.letters) uniform = uniform && (l == w.letters.front());
            cplx oracle = word_moment_oracle(t, x, w);
            if (t < 0.0) {
                worst_im = std::max(worst_im, std::abs(oracle.imag()) / sc);
            }
            if (mixed_ok || uniform) {
                double closed = word_moment_closed(t, x, w);
                worst_re = std::max(worst_re, std::abs(closed - oracle.real()) / sc);
            }
        }
        try {
            (void)word_moment_closed(d.unif(0.0, 10.0), Hypercomplex{d.c(), d.c_min(0.1)},
                                     words[i % words.size()]);
            worst_flag = 1.0;
        } catch (const DomainError& e) {
            if (e.code() != errc::similarity_not_established) worst_flag = 1.0;
        }
    }
    out.push_back(made("word-moment-agreement", n, std::max(worst_re, worst_flag), 1e-8));
    out.push_back(made("word-moment-reality", n, worst_im, 1e-10));
}

InvariantResult check_trace_conjugation(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Matrix2C M{d.c(), d.c(), d.c(), d.c()};
        worst = std::max(
            worst, std::abs(normalized_trace(mat_adjoint(M)) - std::conj(normalized_trace(M))));
    }
    return made("trace-conjugation", n, worst, 0.0);
}

InvariantResult check_power_trace_law(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t;
        Hypercomplex x;
        if (i & 1) {
            t = d.neg_t();
            x = d.h();
        } else {
            t = d.any_t();
            x = {d.c(), cplx{}};
        }
        cplx w = spectralize(t, x).value();
        double r = std::abs(w);
        std::vector<cplx> seq = moment_sequence(t, x, 8);
        cplx wk{1.0, 0.0};
        double rk = 1.0;
        for (int k = 0; k < 8; ++k) {
            wk *= w;
            rk *= r;
            double sc = 1.0 + rk;
            worst = std::max(worst, std::abs(seq[k].real() - wk.real()) / sc);
            worst = std::max(worst, std::abs(seq[k].imag()) / sc);
        }
    }
    return made("power-trace-law", n, worst, 1e-8);
}

InvariantResult check_moment_pairs(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.any_t();
        Hypercomplex x = d.h(), y = d.h();
        Matrix2C A = realize(t, x), B = realize(t, y);
        cplx o1 = normalized_trace(mat_mul(A, mat_adjoint(B)));
        cplx o2 = normalized_trace(mat_mul(mat_adjoint(A), B));
        worst = std::max(worst, std::abs(o1 - moment_pair_plain_star(t, x, y)));
        worst = std::max(worst, std::abs(o2 - moment_pair_star_plain(t, x, y)));
    }
    return made("mixed-moment-pairs", n, worst, 1e-10);
}

InvariantResult check_classification(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    auto flags = [&](double t, const Hypercomplex& x) -> OperatorClass {
        try {
            return classify_operator(t, x);
        } catch (const std::logic_error&) {
            worst = 1.0;
            return {};
        }
    };
    for (int i = 0; i < n; ++i) {
        switch (i % 7) {
            case 0:
                (void)flags(d.any_t(), d.h());
                break;
            case 1: {
                double v = d.unif(2.0, 4.0) * ((d.rng() & 1) ? 1.0 : -1.0);
                OperatorClass c = flags(d.any_t(), {cplx{v, 0.0}, cplx{}});
                if (!c.self_adjoint || !c.normal || c.projection || c.unitary) worst = 1.0;
                break;
            }
            case 2: {
                OperatorClass one = flags(d.any_t(), unity());
                if (!(one.self_adjoint && one.projection && one.normal && one.unitary))
                    worst = 1.0;
                OperatorClass zero = flags(d.any_t(), Hypercomplex{});
                if (!(zero.self_adjoint && zero.projection && zero.normal) || zero.unitary)
                    worst = 1.0;
                break;
            }
            case 3: {
                OperatorClass c = flags(1.0, {cplx{0.5, 0.0}, 0.5 * d.unit()});
                if (!(c.self_adjoint && c.projection && c.normal) || c.unitary) worst = 1.0;
                break;
            }
            case 4: {
                double th = d.unif(0.0, kTau);
                Hypercomplex u{std::cos(th) * d.unit(), std::sin(th) * d.unit()};
                OperatorClass c = flags(-1.0, u);
                if (!c.unitary || !c.normal) worst = 1.0;
                OperatorClass any = flags(-1.0, d.h());
                if (!any.normal) worst = 1.0;
                break;
            }
            case 5: {
                OperatorClass c = flags(d.away_from_unit_t(), {d.unit(), cplx{}});
                if (!c.unitary || !c.normal) worst = 1.0;
                break;
            }
            default: {
                double s = (d.rng() & 1) ? 1.0 : -1.0;
                OperatorClass c = flags(1.0, {cplx{}, cplx{s, 0.0}});
                if (!(c.self_adjoint && c.normal && c.unitary) || c.projection) worst = 1.0;
                break;
            }
        }
    }
    return made("classification-consistency", n, worst, 0.0);
}

InvariantResult check_unitary_moments(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = d.away_from_unit_t();
        cplx a = d.unit();
        Hypercomplex x{a, cplx{}};
        try {
            if (!classify_operator(t, x).unitary) worst = 1.0;
        } catch (const std::logic_error&) {
            worst = 1.0;
        }
        StarWord w = d.word(6);
        cplx oracle = word_moment_oracle(t, x, w);
        double expected = ipow_unit(a, w.exponent_sum()).real();
        worst = std::max(worst, std::abs(oracle.real() - expected));
        worst = std::max(worst, std::abs(oracle.imag()));
    }
    return made("unitary-moment-formula", n, worst, 1e-10);
}

InvariantResult check_polar_form(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx z = (i % 3 == 0) ? d.unit() * d.unif(1e-6, 1e-3) : d.c_min(1e-3);
        PolarForm p = polar_decompose(z);
        worst = std::max(worst, std::abs(p.r * p.w_o - z));
        worst = std::max(worst, std::abs(std::abs(p.w_o) - 1.0));
    }
    try {
        (void)polar_decompose(cplx{});
        worst = 1.0;
    } catch (const DomainError& e) {
        if (e.code() != errc::zero_input) worst = 1.0;
    }
    return made("polar-form", n, worst, 1e-14);
}

InvariantResult check_moment_sequences(std::uint64_t seed, int n) {
    Draw d(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        switch (i % 4) {
            case 0: {
                double v = d.unif(-4.0, 4.0);
                std::vector<cplx> seq = moment_sequence(d.any_t(), {cplx{v, 0.0}, cplx{}}, 6);
                double vk = 1.0;
                for (int k = 0; k < 6; ++k) {
                    vk *= v;
                    double sc = 1.0 + std::abs(vk);
                    worst = std::max(worst, std::abs(seq[k] - cplx{vk, 0.0}) / sc);
                }
                break;
            }
            case 1: {
                for (cplx v : moment_sequence(d.any_t(), unity(), 6)) {
                    worst = std::max(worst, std::abs(v - cplx{1.0, 0.0}));
                }
                for (cplx v : moment_sequence(d.any_t(), Hypercomplex{}, 6)) {
                    worst = std::max(worst, std::abs(v));
                }
                break;
            }
            case 2: {
                std::vector<cplx> seq = moment_sequence(1.0, {cplx{0.5, 0.0}, 0.5 * d.unit()}, 6);
                for (cplx v : seq) worst = std::max(worst, std::abs(v - cplx{0.5, 0.0}));
                break;
            }
            default: {
                double s = (d.rng() & 1) ? 1.0 : -1.0;
                std::vector<cplx> seq = moment_sequence(1.0, {cplx{}, cplx{s, 0.0}}, 6);
                for (int k = 0; k < 6; ++k) {
                    cplx want = (k % 2 == 0) ? cplx{} : cplx{1.0, 0.0};
                    worst = std::max(worst, std::abs(seq[k] - want));
                }
                break;
            }
        }
    }
    return made("moment-sequence-laws", n, worst, 1e-10);
}

}  // namespace

std::vector<InvariantResult> run_verification(std::uint64_t seed, int samples) {
    std::vector<InvariantResult> out;
    std::uint64_t k = 0;
    auto s = [&] { return seed + 0x9E3779B97F4A7C15ULL * ++k; };
    out.push_back(check_associativity(s(), samples));
    out.push_back(check_distributivity(s(), samples));
    out.push_back(check_identity(s(), samples));
    out.push_back(check_det_multiplicativity(s(), samples));
    out.push_back(check_inverse_consistency(s(), samples));
    out.push_back(check_inverse_regime_law(s(), samples));
    out.push_back(check_realization_additive(s(), samples));
    out.push_back(check_realization_multiplicative(s(), samples));
    out.push_back(check_realization_roundtrip(s(), samples));
    out.push_back(check_det_agreement(s(), samples));
    out.push_back(check_matrix_inverse(s(), samples));
    out.push_back(check_membership_templates(s(), samples));
    out.push_back(check_adjoint_closure_law(s(), samples));
    out.push_back(check_star_monoid_closure(s(), samples));
    out.push_back(check_root_consistency(s(), samples));
    out.push_back(check_spectral_case_split(s(), samples));
    out.push_back(check_classification_equivalence(s(), samples));
    out.push_back(check_spectral_relation(s(), samples));
    out.push_back(check_intertwining(s(), samples));
    out.push_back(check_similarity_residual(s(), samples));
    out.push_back(check_trace_det_preservation(s(), samples));
    out.push_back(check_non_similarity(s(), samples));
    out.push_back(check_spectral_mapping(s(), samples));
    out.push_back(check_conjugate_commutation(s(), samples));
    check_word_moments(s(), samples, out);
    out.push_back(check_trace_conjugation(s(), samples));
    out.push_back(check_power_trace_law(s(), samples));
    out.push_back(check_moment_pairs(s(), samples));
    out.push_back(check_classification(s(), samples));
    out.push_back(check_unitary_moments(s(), samples));
    out.push_back(check_polar_form(s(), samples));
    out.push_back(check_moment_sequences(s(), samples));
    return out;
}

bool all_passed(const std::vector<InvariantResult>& results) {
    for (const InvariantResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

}  // namespace hx
