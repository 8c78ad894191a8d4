#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcgauss/revolution.hpp"
#include "lcgauss/surface.hpp"

namespace lcgauss {

/// Seeded source of uniform reals. The double conversion is done here rather
/// than through std::uniform_real_distribution so that draws are identical
/// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double t = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * t;
    }
    int sign() { return (engine_() >> 63) != 0 ? 1 : -1; }

private:
    std::mt19937_64 engine_;
};

struct NamedSurface {
    std::string name;
    Immersion surface;
};

namespace samples {

/// X = (u, v, 0, 0) on [-1,1]^2.
Immersion plane();

/// Unit 2-sphere in {x4 = 0}, which lies in the de Sitter space <x,x> = 1.
Immersion unit_sphere_in_de_sitter();

/// The sphere x1^2+x2^2+x3^2 = 3 in {x4 = 2}, inside <x,x> = -1.
Immersion sphere_in_hyperbolic_space();

/// X = (h, u, v, h - c) for three different h; every point lies on the
/// lightlike hyperplane x1 - x4 = c.
Immersion lightlike_graph(int which);
inline constexpr int kLightlikeGraphCount = 3;

/// Unit-speed hyperbolic-type profile f = cos(a) sinh u, g = sin(a) sinh u,
/// rho = cosh u + c0. Not umbilic, not maximal.
ProfileCurve generic_hyperbolic_profile();

/// Unit-speed elliptic-type profile rho = cos(a) sinh u + c0,
/// f = sin(a) sinh u, g = cosh u.
ProfileCurve generic_elliptic_profile();

/// X = (u, v, (u^2 - v^2)/2, u v / 2): the two normal directions have
/// non-commuting shape operators, so the normal curvature is nonzero.
Immersion twisted_saddle();

/// A graph with no symmetry used as a generic smooth test surface.
Immersion wavy_graph();

/// The five surfaces used for solver residual and route-agreement checks.
std::vector<NamedSurface> test_surfaces();

}  // namespace samples

}  // namespace lcgauss
