#include "lcgauss/revolution.hpp"

#include <cmath>
#include <numbers>

namespace lcgauss {

namespace {

Expr num(double c) { return Expr::constant(c); }
Expr U() { return Expr::var(Var::U); }
Expr V() { return Expr::var(Var::V); }

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw Error(ErrorKind::ConstraintViolation, std::string(name) + " must be positive and finite");
}

void require_finite(std::initializer_list<double> values) {
    for (double x : values)
        if (!std::isfinite(x)) throw Error(ErrorKind::ConstraintViolation, "family constants must be finite");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::ConstraintViolation, "sign must be +1 or -1");
}

double guarded(double denominator, const char* what, double u) {
    if (denominator == 0.0 || !std::isfinite(denominator))
        throw Error(ErrorKind::DomainError,
                    std::string("closed form divides by ") + what + " = 0 at u=" + format_real(u));
    return denominator;
}

}  // namespace

const char* to_string(RevolutionKind k) {
    return k == RevolutionKind::HyperbolicType ? "hyperbolic" : "elliptic";
}

ProfileCurve::ProfileCurve(Expr f, Expr g, Expr rho, double u_min, double u_max)
    : f_(std::move(f)), g_(std::move(g)), rho_(std::move(rho)), u_min_(u_min), u_max_(u_max) {
    if (!(u_max_ > u_min_)) throw Error(ErrorKind::InvalidArgument, "profile interval must satisfy u_min < u_max");
    for (const Expr* e : {&f_, &g_, &rho_})
        if (e->depends_on(Var::V)) throw Error(ErrorKind::InvalidArgument, "profile functions depend on u only");
    df_ = differentiate(f_, Var::U);
    dg_ = differentiate(g_, Var::U);
    drho_ = differentiate(rho_, Var::U);
    ddf_ = differentiate(df_, Var::U);
    ddg_ = differentiate(dg_, Var::U);
    ddrho_ = differentiate(drho_, Var::U);
}

ProfileCurve::Jet ProfileCurve::jet(double u) const {
    return {f_.eval(u, 0.0),   g_.eval(u, 0.0),   rho_.eval(u, 0.0),  df_.eval(u, 0.0),   dg_.eval(u, 0.0),
            drho_.eval(u, 0.0), ddf_.eval(u, 0.0), ddg_.eval(u, 0.0), ddrho_.eval(u, 0.0)};
}

double arc_length_residual(const ProfileCurve& p, RevolutionKind kind, double u) {
    const auto j = p.jet(u);
    if (kind == RevolutionKind::HyperbolicType) return j.df * j.df + j.dg * j.dg - j.drho * j.drho - 1.0;
    return j.drho * j.drho + j.df * j.df - j.dg * j.dg - 1.0;
}

ProfileNondegeneracy profile_nondegeneracy(const ProfileCurve& p, int samples) {
    ProfileNondegeneracy out{INFINITY, INFINITY, INFINITY, INFINITY};
    for (double u : grid_axis(p.u_min(), p.u_max(), samples, kDefaultMargin)) {
        const auto j = p.jet(u);
        out.min_abs_df = std::min(out.min_abs_df, std::abs(j.df));
        out.min_abs_dg = std::min(out.min_abs_dg, std::abs(j.dg));
        out.min_abs_drho = std::min(out.min_abs_drho, std::abs(j.drho));
        out.min_abs_rho = std::min(out.min_abs_rho, std::abs(j.rho));
    }
    return out;
}

RevolutionOptions RevolutionOptions::defaults(RevolutionKind kind) {
    if (kind == RevolutionKind::HyperbolicType) return {-1.0, 1.0};
    return {0.0, 2.0 * std::numbers::pi};
}

Immersion build_revolution(const ProfileCurve& p, RevolutionKind kind, const RevolutionOptions& options) {
    double worst_u = p.u_min();
    double worst = 0.0;
    for (double u : grid_axis(p.u_min(), p.u_max(), options.arc_length_samples, options.margin)) {
        const double r = std::abs(arc_length_residual(p, kind, u));
        if (r > worst) {
            worst = r;
            worst_u = u;
        }
    }
    if (worst > options.arc_length_tol)
        throw Error(ErrorKind::ArcLengthViolation, "profile is not unit speed: max residual " + format_real(worst) +
                                                       " at u=" + format_real(worst_u));

    std::array<Expr, 4> x;
    if (kind == RevolutionKind::HyperbolicType) {
        x = {p.f(), p.g(), p.rho() * apply(Func::Sinh, V()), p.rho() * apply(Func::Cosh, V())};
    } else {
        x = {p.rho() * apply(Func::Cos, V()), p.rho() * apply(Func::Sin, V()), p.f(), p.g()};
    }
    return Immersion(x, Domain{p.u_min(), p.u_max(), options.v_min, options.v_max}, options.margin);
}

Immersion build_revolution(const ProfileCurve& p, RevolutionKind kind) {
    return build_revolution(p, kind, RevolutionOptions::defaults(kind));
}

SignedPair closed_form_lightcone(const ProfileCurve& p, RevolutionKind kind, double u, double v, double r) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
    const auto j = p.jet(u);
    SignedPair out;
    if (kind == RevolutionKind::HyperbolicType) {
        const double c = std::cosh(v);
        const double d = guarded(j.df * j.df + j.dg * j.dg, "(f')^2+(g')^2", u);
        guarded(j.df, "f'", u);
        for (int s : {1, -1}) {
            const double l2 = (j.dg * j.drho + s * j.df) / (c * d);
            const double l1 = j.drho / (j.df * c) - (j.dg / j.df) * l2;
            const MVec4 l = r * MVec4(l1, l2, std::tanh(v), 1.0);
            (s > 0 ? out.sign_plus : out.sign_minus) = l;
        }
    } else {
        const double e = guarded(j.df * j.df + j.drho * j.drho, "(f')^2+(rho')^2", u);
        for (int s : {1, -1}) {
            const double a = (j.dg * j.drho + s * j.df) / e;
            const double l3 = (j.dg * j.df - s * j.drho) / e;
            const MVec4 l = r * MVec4(a * std::cos(v), a * std::sin(v), l3, 1.0);
            (s > 0 ? out.sign_plus : out.sign_minus) = l;
        }
    }
    return out;
}

SignedCurvatures closed_form_curvatures(const ProfileCurve& p, RevolutionKind kind, double u, double v, double r) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
    const auto j = p.jet(u);
    SignedCurvatures out;
    if (kind == RevolutionKind::HyperbolicType) {
        const double c = std::cosh(v);
        const double d = guarded(j.df * j.df + j.dg * j.dg, "(f')^2+(g')^2", u);
        guarded(j.df, "f'", u);
        const double rho = guarded(j.rho, "rho", u);
        const double wronskian = j.ddg * j.df - j.dg * j.ddf;
        for (int s : {1, -1}) {
            const double k1 = r * (j.ddf * j.drho / (j.df * c) - j.ddrho / c +
                                   wronskian / (j.df * d * c) * (j.dg * j.drho + s * j.df));
            const double k2 = -r / (rho * c);
            (s > 0 ? out.sign_plus : out.sign_minus) = {k1, k2};
        }
    } else {
        const double e = guarded(j.df * j.df + j.drho * j.drho, "(f')^2+(rho')^2", u);
        const double rho = guarded(j.rho, "rho", u);
        for (int s : {1, -1}) {
            const double a = (j.dg * j.drho + s * j.df) / e;
            const double k1 = r * (j.ddrho * a + j.ddf * (j.dg * j.df - s * j.drho) / e - j.ddg);
            const double k2 = -r * a / rho;
            (s > 0 ? out.sign_plus : out.sign_minus) = {k1, k2};
        }
    }
    return out;
}

ProfileCurve family_umbilic_hyperbolic(double C, double C2, double C1, double m, double k, int sign) {
    require_positive(C, "C");
    require_finite({C2, C1, m, k});
    require_sign(sign);
    const double sc = std::sqrt(C);
    const Expr t = num(sc) * (U() - num(C1));
    const Expr rho = simplify(num(sign / sc) * apply(Func::Cosh, t));
    const Expr f = simplify(apply(Func::Sinh, t) / num(sc * std::sqrt(1.0 + C2 * C2)) + num(m));
    const Expr g = simplify(num(C2) * f + num(k));
    return ProfileCurve(f, g, rho, C1 + 0.1 / sc, C1 + 1.5 / sc);
}

ProfileCurve family_umbilic_hyperbolic_unnormalized(double C, double C2, double C1, double m, double k, int sign) {
    require_positive(C, "C");
    require_finite({C2, C1, m, k});
    require_sign(sign);
    const double sc = std::sqrt(C);
    const Expr t = num(sc) * (U() - num(C1));
    const Expr rho = simplify(num(sign / sc) * apply(Func::Cosh, t));
    const Expr f = simplify(apply(Func::Sinh, t) / num(sc) + num(m));
    const Expr g = simplify(num(C2 / sc) * apply(Func::Sinh, t) + num(k));
    return ProfileCurve(f, g, rho, C1 + 0.1 / sc, C1 + 1.5 / sc);
}

ProfileCurve family_maximal_hyperbolic(double C3, double C2, double C1, double m, double k, int sign) {
    require_positive(C3, "C3");
    require_finite({C2, C1, m, k});
    require_sign(sign);
    const double s3 = std::sqrt(C3);
    const Expr w = U() - num(C1);
    const Expr rho = simplify(num(sign) * apply(Func::Sqrt, num(C3) - pow(w, num(2.0))));
    const Expr f = simplify(num(s3 / std::sqrt(1.0 + C2 * C2)) * apply(Func::Arcsin, w / num(s3)) + num(m));
    const Expr g = simplify(num(C2) * f + num(k));
    return ProfileCurve(f, g, rho, C1 + 0.1 * s3, C1 + 0.9 * s3);
}

ProfileCurve family_umbilic_elliptic(double B, double C, double C1, double m, double k, int sign) {
    require_positive(B, "B");
    require_finite({C, C1, m, k});
    require_sign(sign);
    if (C * C < B) throw Error(ErrorKind::ConstraintViolation, "umbilic elliptic family needs C^2 >= B");
    const double sb = std::sqrt(B);
    const Expr t = num(sb) * (U() - num(C1));
    const Expr rho = simplify(num(sign / sb) * apply(Func::Sinh, t));
    const Expr g = simplify(num(C / B) * apply(Func::Cosh, t) + num(k));
    const Expr f = simplify(num(std::sqrt(C * C / B - 1.0) / sb) * apply(Func::Cosh, t) + num(m));
    return ProfileCurve(f, g, rho, C1 + 0.2 / sb, C1 + 1.5 / sb);
}

ProfileCurve family_maximal_elliptic(double C, double C2, double C1, double m, double k, int sign) {
    require_positive(C, "C");
    require_finite({C2, C1, m, k});
    require_sign(sign);
    if (C2 * C2 < C) throw Error(ErrorKind::ConstraintViolation, "maximal elliptic family needs C2^2 >= C");
    const double sc = std::sqrt(C);
    const Expr w = U() - num(C1);
    const Expr rho = simplify(num(sign) * apply(Func::Sqrt, pow(w, num(2.0)) - num(C)));
    const Expr angle = apply(Func::Arccosh, w / num(sc));
    const Expr g = simplify(num(C2) * angle + num(m));
    const Expr f = simplify(num(std::sqrt(C2 * C2 - C)) * angle + num(k));
    return ProfileCurve(f, g, rho, C1 + 1.1 * sc, C1 + 2.5 * sc);
}

}  // namespace lcgauss
