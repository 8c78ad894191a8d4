#include "lcgauss/odeverify.hpp"

#include <algorithm>
#include <cmath>

#include "lcgauss/minkowski.hpp"

namespace lcgauss {

namespace {

struct Signs {
    double s1;
    double s0;
};

Signs signs(ProfileOde ode) {
    switch (ode) {
        case ProfileOde::CoshType: return {-1.0, -1.0};
        case ProfileOde::CircleType: return {1.0, 1.0};
        case ProfileOde::SinhType: return {-1.0, 1.0};
        case ProfileOde::SqrtType: return {1.0, -1.0};
    }
    return {0.0, 0.0};
}

Expr num(double c) { return Expr::constant(c); }

void check_constants(ProfileOde ode, const OdeConstants& k) {
    if (k.sign != 1 && k.sign != -1) throw Error(ErrorKind::ConstraintViolation, "sign must be +1 or -1");
    if (!std::isfinite(k.C) || !std::isfinite(k.C1))
        throw Error(ErrorKind::ConstraintViolation, "constants must be finite");
    if (ode != ProfileOde::SqrtType && !(k.C > 0.0))
        throw Error(ErrorKind::ConstraintViolation, std::string(to_string(ode)) + " requires C > 0");
}

}  // namespace

const char* to_string(ProfileOde ode) {
    switch (ode) {
        case ProfileOde::CoshType: return "cosh";
        case ProfileOde::CircleType: return "circle";
        case ProfileOde::SinhType: return "sinh";
        case ProfileOde::SqrtType: return "sqrt";
    }
    return "?";
}

double ode_residual(ProfileOde ode, const Expr& rho, double u) {
    const Expr d1 = differentiate(rho, Var::U);
    const Expr d2 = differentiate(d1, Var::U);
    const double r = rho.eval(u, 0.0);
    const double r1 = d1.eval(u, 0.0);
    const double r2 = d2.eval(u, 0.0);
    const Signs s = signs(ode);
    return r * r2 + s.s1 * r1 * r1 + s.s0;
}

Expr ode_solution(ProfileOde ode, const OdeConstants& k) {
    check_constants(ode, k);
    const Expr w = Expr::var(Var::U) - num(k.C1);
    const double sign = k.sign;
    Expr out;
    switch (ode) {
        case ProfileOde::CoshType:
            out = apply(Func::Cosh, num(std::sqrt(k.C)) * w) / num(std::sqrt(k.C));
            break;
        case ProfileOde::SinhType:
            out = apply(Func::Sinh, num(std::sqrt(k.C)) * w) / num(std::sqrt(k.C));
            break;
        case ProfileOde::CircleType: out = apply(Func::Sqrt, num(k.C) - pow(w, num(2.0))); break;
        case ProfileOde::SqrtType: out = apply(Func::Sqrt, pow(w, num(2.0)) - num(k.C)); break;
    }
    if (sign < 0) out = -out;
    return simplify(out);
}

Interval solution_interval(ProfileOde ode, const OdeConstants& k) {
    check_constants(ode, k);
    switch (ode) {
        case ProfileOde::CoshType: {
            const double s = 1.0 / std::sqrt(k.C);
            return {k.C1 - 1.5 * s, k.C1 + 1.5 * s};
        }
        case ProfileOde::SinhType: {
            const double s = 1.0 / std::sqrt(k.C);
            return {k.C1 + 0.1 * s, k.C1 + 2.0 * s};
        }
        case ProfileOde::CircleType: {
            const double s = std::sqrt(k.C);
            return {k.C1 - 0.9 * s, k.C1 + 0.9 * s};
        }
        case ProfileOde::SqrtType: {
            const double s = std::sqrt(std::abs(k.C));
            if (k.C > 0.0) return {k.C1 + 1.1 * s, k.C1 + 3.0 * s};
            return {k.C1 + 0.1 * s, k.C1 + 3.0 * s + 1.0};
        }
    }
    return {0.0, 1.0};
}

OdeConstants fit_constants(ProfileOde ode, double u0, double rho0, double drho0) {
    if (!(rho0 != 0.0) || !std::isfinite(rho0) || !std::isfinite(drho0))
        throw Error(ErrorKind::ConstraintViolation, "initial rho must be finite and nonzero");
    OdeConstants k;
    switch (ode) {
        case ProfileOde::CoshType: {
            k.sign = rho0 > 0.0 ? 1 : -1;
            k.C = (1.0 + drho0 * drho0) / (rho0 * rho0);
            k.C1 = u0 - std::asinh(k.sign * drho0) / std::sqrt(k.C);
            break;
        }
        case ProfileOde::SinhType: {
            if (!(std::abs(drho0) > 1.0))
                throw Error(ErrorKind::ConstraintViolation, "sinh-type solutions need |rho'| > 1");
            k.sign = drho0 > 0.0 ? 1 : -1;
            k.C = (drho0 * drho0 - 1.0) / (rho0 * rho0);
            const double sc = std::sqrt(k.C);
            k.C1 = u0 - std::asinh(k.sign * rho0 * sc) / sc;
            break;
        }
        case ProfileOde::CircleType: {
            const double w = -rho0 * drho0;
            k.sign = rho0 > 0.0 ? 1 : -1;
            k.C = rho0 * rho0 + w * w;
            k.C1 = u0 - w;
            break;
        }
        case ProfileOde::SqrtType: {
            const double w = rho0 * drho0;
            k.sign = rho0 > 0.0 ? 1 : -1;
            k.C = w * w - rho0 * rho0;
            k.C1 = u0 - w;
            break;
        }
    }
    return k;
}

std::vector<OdeSample> integrate_ode(ProfileOde ode, double rho0, double drho0, double u0, double u1, int steps) {
    if (steps < 1) throw Error(ErrorKind::InvalidArgument, "steps must be positive");
    const Signs s = signs(ode);
    auto accel = [&](double u, double y, double dy) {
        if (!(std::abs(y) >= 1e-8))
            throw Error(ErrorKind::BlowUp, "rho reached " + format_real(y) + " near u=" + format_real(u));
        const double a = -(s.s1 * dy * dy + s.s0) / y;
        if (!(std::abs(a) <= 1e12))
            throw Error(ErrorKind::BlowUp, "rho'' reached " + format_real(a) + " near u=" + format_real(u));
        return a;
    };
    const double h = (u1 - u0) / steps;
    std::vector<OdeSample> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    double y = rho0, dy = drho0;
    out.push_back({u0, y, dy});
    for (int i = 0; i < steps; ++i) {
        const double u = u0 + i * h;
        const double k1y = dy;
        const double k1v = accel(u, y, dy);
        const double k2y = dy + 0.5 * h * k1v;
        const double k2v = accel(u + 0.5 * h, y + 0.5 * h * k1y, k2y);
        const double k3y = dy + 0.5 * h * k2v;
        const double k3v = accel(u + 0.5 * h, y + 0.5 * h * k2y, k3y);
        const double k4y = dy + h * k3v;
        const double k4v = accel(u + h, y + h * k3y, k4y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        dy += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        out.push_back({i + 1 == steps ? u1 : u0 + (i + 1) * h, y, dy});
    }
    return out;
}

double rk4_deviation(ProfileOde ode, double rho0, double drho0, double u0, double u1, int steps) {
    const Expr closed = ode_solution(ode, fit_constants(ode, u0, rho0, drho0));
    double worst = 0.0;
    for (const auto& sample : integrate_ode(ode, rho0, drho0, u0, u1, steps))
        worst = std::max(worst, std::abs(sample.rho - closed.eval(sample.u, 0.0)));
    return worst;
}

LinearDependenceFit fit_linear_dependence(const Expr& f, const Expr& g, std::span<const double> samples) {
    if (samples.size() < 3) throw Error(ErrorKind::DegenerateFit, "need at least 3 samples");
    const auto n = static_cast<double>(samples.size());
    std::vector<double> fs, gs;
    fs.reserve(samples.size());
    gs.reserve(samples.size());
    for (double u : samples) {
        fs.push_back(f.eval(u, 0.0));
        gs.push_back(g.eval(u, 0.0));
    }
    double fm = 0.0, gm = 0.0, fmax = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        fm += fs[i];
        gm += gs[i];
        fmax = std::max(fmax, std::abs(fs[i]));
    }
    fm /= n;
    gm /= n;
    double sff = 0.0, sfg = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        sff += (fs[i] - fm) * (fs[i] - fm);
        sfg += (fs[i] - fm) * (gs[i] - gm);
    }
    const double spread = std::sqrt(sff / n);
    if (!(spread > 1e-12 * std::max(1.0, fmax)))
        throw Error(ErrorKind::DegenerateFit, "f is constant on the samples");

    LinearDependenceFit fit{};
    fit.c = sfg / sff;
    fit.k = gm - fit.c * fm;
    const Expr df = differentiate(f, Var::U), ddf = differentiate(df, Var::U);
    const Expr dg = differentiate(g, Var::U), ddg = differentiate(dg, Var::U);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const double u = samples[i];
        fit.max_residual = std::max(fit.max_residual, std::abs(gs[i] - (fit.c * fs[i] + fit.k)));
        const double w = ddg.eval(u, 0.0) * df.eval(u, 0.0) - dg.eval(u, 0.0) * ddf.eval(u, 0.0);
        fit.max_wronskian = std::max(fit.max_wronskian, std::abs(w));
    }
    return fit;
}

}  // namespace lcgauss
