#pragma once

#include "lcgauss/expr.hpp"
#include "lcgauss/gaussmap.hpp"
#include "lcgauss/surface.hpp"

namespace lcgauss {

enum class RevolutionKind { HyperbolicType, EllipticType };

const char* to_string(RevolutionKind k);

/// Profile functions f, g, rho of u with their symbolic derivatives.
/// Hyperbolic type: z(u) = (f, g, 0, rho); elliptic type: z(u) = (rho, 0, f, g).
class ProfileCurve {
public:
    ProfileCurve(Expr f, Expr g, Expr rho, double u_min, double u_max);

    const Expr& f() const { return f_; }
    const Expr& g() const { return g_; }
    const Expr& rho() const { return rho_; }
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }

    struct Jet {
        double f, g, rho;
        double df, dg, drho;
        double ddf, ddg, ddrho;
    };
    Jet jet(double u) const;

private:
    Expr f_, g_, rho_;
    Expr df_, dg_, drho_;
    Expr ddf_, ddg_, ddrho_;
    double u_min_, u_max_;
};

/// (f')^2 + (g')^2 - (rho')^2 - 1 (hyperbolic) or (rho')^2 + (f')^2 - (g')^2 - 1 (elliptic).
double arc_length_residual(const ProfileCurve& p, RevolutionKind kind, double u);

/// Smallest |f'|, |g'|, |rho'|, |rho| over `samples` interior points.
struct ProfileNondegeneracy {
    double min_abs_df, min_abs_dg, min_abs_drho, min_abs_rho;
};
ProfileNondegeneracy profile_nondegeneracy(const ProfileCurve& p, int samples = 101);

struct RevolutionOptions {
    double v_min;
    double v_max;
    double margin = kDefaultMargin;
    double arc_length_tol = 1e-9;
    int arc_length_samples = 101;

    static RevolutionOptions defaults(RevolutionKind kind);
};

/// Hyperbolic: X = (f, g, rho sinh v, rho cosh v). Elliptic: X = (rho cos v, rho sin v, f, g).
/// Throws ArcLengthViolation naming the worst u when the unit-speed condition fails.
Immersion build_revolution(const ProfileCurve& p, RevolutionKind kind, const RevolutionOptions& options);
Immersion build_revolution(const ProfileCurve& p, RevolutionKind kind);

/// Closed-form lightcone normals. `sign_plus` uses the upper sign of the +-
/// in the component formulas; it is not tied to the det-based branch label.
struct SignedPair {
    MVec4 sign_plus;
    MVec4 sign_minus;
};
SignedPair closed_form_lightcone(const ProfileCurve& p, RevolutionKind kind, double u, double v, double r);

struct CurvaturePair {
    double k1;  // b11 / g11 (profile direction)
    double k2;  // b22 / g22 (orbit direction)
};
struct SignedCurvatures {
    CurvaturePair sign_plus;
    CurvaturePair sign_minus;
};
SignedCurvatures closed_form_curvatures(const ProfileCurve& p, RevolutionKind kind, double u, double v, double r);

// Explicit families. `sign` multiplies rho (and is +1 by default).

/// rho = cosh(sqrt(C)(u-C1))/sqrt(C), f = sinh(sqrt(C)(u-C1))/(sqrt(C) sqrt(1+C2^2)) + m, g = C2 f + k.
ProfileCurve family_umbilic_hyperbolic(double C, double C2, double C1 = 0.0, double m = 0.0, double k = 0.0,
                                       int sign = 1);

/// Same rho, but f = sinh(...)/sqrt(C) + m and g = C2 sinh(...)/sqrt(C) + k, i.e. without the
/// 1/sqrt(1+C2^2) normalization. Unit speed only when C2 = 0.
ProfileCurve family_umbilic_hyperbolic_unnormalized(double C, double C2, double C1 = 0.0, double m = 0.0,
                                                    double k = 0.0, int sign = 1);

/// rho = sqrt(C3-(u-C1)^2), f = sqrt(C3)/sqrt(1+C2^2) arcsin((u-C1)/sqrt(C3)) + m, g = C2 f + k.
ProfileCurve family_maximal_hyperbolic(double C3, double C2, double C1 = 0.0, double m = 0.0, double k = 0.0,
                                       int sign = 1);

/// rho = sinh(sqrt(B)(u-C1))/sqrt(B), g = (C/B) cosh(sqrt(B)(u-C1)) + k,
/// f = sqrt(C^2/B-1) cosh(sqrt(B)(u-C1))/sqrt(B) + m. Requires B > 0, C^2 >= B.
ProfileCurve family_umbilic_elliptic(double B, double C, double C1 = 0.0, double m = 0.0, double k = 0.0,
                                     int sign = 1);

/// rho = sqrt((u-C1)^2-C), g = C2 arccosh((u-C1)/sqrt(C)) + m,
/// f = sqrt(C2^2-C) arccosh((u-C1)/sqrt(C)) + k. Requires C > 0, C2^2 >= C.
ProfileCurve family_maximal_elliptic(double C, double C2, double C1 = 0.0, double m = 0.0, double k = 0.0,
                                     int sign = 1);

}  // namespace lcgauss
