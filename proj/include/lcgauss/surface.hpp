#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcgauss/expr.hpp"
#include "lcgauss/minkowski.hpp"

namespace lcgauss {

struct Domain {
    double u_min = 0.0;
    double u_max = 1.0;
    double v_min = 0.0;
    double v_max = 1.0;

    double u_extent() const { return u_max - u_min; }
    double v_extent() const { return v_max - v_min; }
};

inline constexpr double kDefaultMargin = 0.05;

/// Position and partial derivatives of an immersion at one parameter point.
struct SurfaceJet {
    double u = 0.0;
    double v = 0.0;
    MVec4 X, Xu, Xv, Xuu, Xuv, Xvv;

    const MVec4& tangent(int i) const { return i == 0 ? Xu : Xv; }
    const MVec4& second(int i, int j) const {
        if (i != j) return Xuv;
        return i == 0 ? Xuu : Xvv;
    }
};

struct FirstForm {
    double g11 = 1.0;
    double g12 = 0.0;
    double g22 = 1.0;

    double det() const { return g11 * g22 - g12 * g12; }
};

/// X: U -> R^4_1 given by four expressions in (u, v) over a rectangle. The
/// derivative expressions are built once, at construction.
class Immersion {
public:
    Immersion(std::array<Expr, 4> components, Domain domain, double margin = kDefaultMargin);

    /// Parses each component; throws ParseError.
    static Immersion from_strings(const std::array<std::string, 4>& components, Domain domain,
                                  double margin = kDefaultMargin);

    const std::array<Expr, 4>& components() const { return x_; }
    const Domain& domain() const { return domain_; }
    double margin() const { return margin_; }

    /// The rectangle shrunk by `margin` times the extent on every side.
    Domain sampling_domain() const;

    Immersion with_domain(Domain domain, double margin) const;

    /// Throws DomainError from expression evaluation.
    SurfaceJet jet(double u, double v) const;
    MVec4 position(double u, double v) const;

private:
    std::array<Expr, 4> x_, xu_, xv_, xuu_, xuv_, xvv_;
    Domain domain_;
    double margin_;
};

/// Throws NotSpacelike unless g11 > 0 and det g > 0 (relative to `tol`).
FirstForm first_form(const SurfaceJet& j, double tol = 1e-12);

struct GridPoint {
    double u = 0.0;
    double v = 0.0;
    SurfaceJet jet;
};

/// `n` evenly spaced values over [lo, hi] after trimming `margin * (hi - lo)` from both ends.
std::vector<double> grid_axis(double lo, double hi, int n, double margin);

/// Row-major (u outer, v inner) nu x nv grid over the sampling domain.
/// DomainError messages name the offending grid point.
std::vector<GridPoint> sample_grid(const Immersion& s, int nu, int nv);

struct HyperplaneFit {
    Hyperplane plane;     // Minkowski pseudo normal, Euclidean unit length
    double rms_residual;  // Euclidean distance units
};

/// Total least squares hyperplane through the cloud. The Euclidean normal is
/// converted to a Minkowski pseudo normal by flipping its time component.
HyperplaneFit fit_hyperplane(std::span<const MVec4> points);

struct QuadricFit {
    Quadric quadric;
    double rms_residual;  // of quadric_residual
};

/// Linear least squares fit of <x-a,x-a> = +-R (kind DeSitter or Hyperbolic).
/// Directions the cloud does not constrain get the minimum-norm center.
QuadricFit fit_quadric_sphere(std::span<const MVec4> points, QuadricKind kind);

/// Key/value surface definition text:
///   # comment
///   X1 = "u"          (quotes optional)
///   u_min = 0
/// Keys: X1..X4, u_min, u_max, v_min, v_max, margin (optional).
Immersion parse_surface_definition(std::string_view text);
std::string format_surface_definition(const Immersion& s);

}  // namespace lcgauss
