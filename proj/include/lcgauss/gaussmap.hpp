#pragma once

#include <Eigen/Core>

#include "lcgauss/minkowski.hpp"
#include "lcgauss/surface.hpp"

namespace lcgauss {

enum class Branch { Plus, Minus };

inline const char* to_string(Branch b) { return b == Branch::Plus ? "+" : "-"; }

/// The two lightlike normals at a point, scaled to fourth component r.
/// "+" is the root with det[X_u, X_v, l_plus, l_minus] > 0.
struct LightconePair {
    MVec4 plus;
    MVec4 minus;
    double r = 1.0;

    const MVec4& operator[](Branch b) const { return b == Branch::Plus ? plus : minus; }
};

/// Basis of the normal plane from the 2x4 orthogonality system, pivoting on the
/// pair of columns with the largest minor.
struct NormalBasis {
    MVec4 n1;
    MVec4 n2;
};

NormalBasis normal_plane_basis(const SurfaceJet& j);

/// Orthonormal normal frame oriented so that det[X_u, X_v, e3, e4] > 0.
NormalFrame normal_frame(const SurfaceJet& j);

/// Solves <l,X_u> = <l,X_v> = <l,l> = 0, l_4 = r. Throws NotSpacelike or
/// DegenerateNormalPlane.
LightconePair solve_lightcone_normals(const SurfaceJet& j, double r);

struct SecondForm {
    double b11 = 0.0;
    double b12 = 0.0;
    double b22 = 0.0;
    Branch branch = Branch::Plus;
    double r = 1.0;
};

/// b_ij = <X_{u_i u_j}, l>.
SecondForm second_form(const SurfaceJet& j, const MVec4& l, Branch branch = Branch::Plus, double r = 1.0);
SecondForm second_form(const SurfaceJet& j, const LightconePair& pair, Branch branch);

struct PrincipalCurvatures {
    double k1 = 0.0;  // k1 >= k2
    double k2 = 0.0;
};

/// Roots of det(b - k g) = 0, computed as eigenvalues of the symmetric matrix
/// L^{-1} b L^{-T} with g = L L^T so that k1 - k2 carries no cancellation.
PrincipalCurvatures principal_curvatures(const FirstForm& g, const SecondForm& b);

/// det(b) / det(g).
double gauss_kronecker(const FirstForm& g, const SecondForm& b);

/// g^{-1} b, the Weingarten map in the basis {X_u, X_v}.
Eigen::Matrix2d weingarten_matrix(const FirstForm& g, const SecondForm& b);

inline constexpr double kDefaultStep = 1e-5;       // relative to the domain extent
inline constexpr double kCurvatureStep = 1e-4;     // nested stencil for R-perp

/// Negated tangential part of the central-difference derivative of the
/// l_r field, expressed in {X_u, X_v}.
Eigen::Matrix2d weingarten_by_differentiation(const Immersion& s, double u, double v, double r, Branch branch,
                                              double step = kDefaultStep);

/// H = H^{e3} e3 - H^{e4} e4 with H^{e} = trace(A^{e}) / 2.
MVec4 mean_curvature_vector(const SurfaceJet& j);

struct BranchCurvature {
    double k1 = 0.0;
    double k2 = 0.0;
    double H = 0.0;
    double K = 0.0;
};

struct CurvatureFlags {
    bool umbilic_plus = false;
    bool umbilic_minus = false;
    bool flat_plus = false;
    bool flat_minus = false;
    bool maximal = false;
};

inline constexpr double kDefaultTol = 1e-8;

struct CurvatureReport {
    BranchCurvature plus;
    BranchCurvature minus;
    double H_vec_norm_sq = 0.0;   // signed <H,H>
    double H_vec_norm = 0.0;      // coordinate length of H; zero iff H = 0
    CurvatureFlags flags;
    double tol = kDefaultTol;

    const BranchCurvature& operator[](Branch b) const { return b == Branch::Plus ? plus : minus; }
};

CurvatureReport classify_jet(const SurfaceJet& j, double r, double tol = kDefaultTol);
CurvatureReport classify_point(const Immersion& s, double u, double v, double r, double tol = kDefaultTol);

/// Size of the normal component of d l_r per unit tangent length, measured in
/// the orthonormal normal frame; zero iff l_r is parallel at (u, v).
double parallel_defect(const Immersion& s, double u, double v, double r, Branch branch,
                       double step = kDefaultStep);

/// R-perp(E1, E2) e3 paired with e4 for an orthonormal tangent frame, from
/// nested central differences of the normal connection form.
double normal_curvature(const Immersion& s, double u, double v, double step = kCurvatureStep);

/// The same quantity from the shape operators: <[A^{e3}, A^{e4}] E1, E2> in
/// an orthonormal tangent frame.
double normal_curvature_from_shape_operators(const SurfaceJet& j);

}  // namespace lcgauss
