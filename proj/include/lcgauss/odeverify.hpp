#pragma once

#include <span>
#include <vector>

#include "lcgauss/expr.hpp"

namespace lcgauss {

/// The four profile equations rho rho'' + s1 (rho')^2 + s0 = 0.
enum class ProfileOde {
    CoshType,    // rho rho'' - rho'^2 - 1 = 0
    CircleType,  // rho rho'' + rho'^2 + 1 = 0
    SinhType,    // rho rho'' - rho'^2 + 1 = 0
    SqrtType,    // rho rho'' + rho'^2 - 1 = 0
};

inline constexpr ProfileOde kAllProfileOdes[] = {ProfileOde::CoshType, ProfileOde::CircleType,
                                                 ProfileOde::SinhType, ProfileOde::SqrtType};

const char* to_string(ProfileOde ode);

/// Closed-form constants: CoshType/SinhType use C > 0 under the square
/// root, CircleType C > 0 as the squared radius, SqrtType any real C.
struct OdeConstants {
    double C = 1.0;
    double C1 = 0.0;
    int sign = 1;
};

double ode_residual(ProfileOde ode, const Expr& rho, double u);

/// Cosh: sign cosh(sqrt(C)(u-C1))/sqrt(C); Circle: sign sqrt(C-(u-C1)^2);
/// Sinh: sign sinh(sqrt(C)(u-C1))/sqrt(C); Sqrt: sign sqrt((u-C1)^2-C).
/// Throws ConstraintViolation on inadmissible constants.
Expr ode_solution(ProfileOde ode, const OdeConstants& constants);

/// An interval strictly inside the solution's domain with rho bounded away from 0.
struct Interval {
    double lo;
    double hi;
};
Interval solution_interval(ProfileOde ode, const OdeConstants& constants);

/// Inverts the closed form: the constants whose solution passes through
/// (u0, rho0) with slope drho0. Throws ConstraintViolation when none exists.
OdeConstants fit_constants(ProfileOde ode, double u0, double rho0, double drho0);

struct OdeSample {
    double u;
    double rho;
    double drho;
};

/// Classic RK4 on rho'' = -(s1 rho'^2 + s0)/rho. Returns steps + 1 samples.
/// Throws BlowUp if |rho| < 1e-8 or |rho''| > 1e12 at any stage.
std::vector<OdeSample> integrate_ode(ProfileOde ode, double rho0, double drho0, double u0, double u1, int steps);

/// Max |rho_rk4 - closed form| over the trajectory for the solution through (u0, rho0, drho0).
double rk4_deviation(ProfileOde ode, double rho0, double drho0, double u0, double u1, int steps);

struct LinearDependenceFit {
    double c;
    double k;
    double max_residual;   // max |g - (c f + k)|
    double max_wronskian;  // max |g'' f' - g' f''|
};

/// Least squares g ~ c f + k over the samples. Throws DegenerateFit when f is
/// constant on the samples.
LinearDependenceFit fit_linear_dependence(const Expr& f, const Expr& g, std::span<const double> samples);

}  // namespace lcgauss
