#include "lcgauss/samples.hpp"

#include <numbers>

namespace lcgauss::samples {

namespace {

Immersion make(const char* x1, const char* x2, const char* x3, const char* x4, Domain d) {
    return Immersion::from_strings({x1, x2, x3, x4}, d);
}

}  // namespace

Immersion plane() { return make("u", "v", "0", "0", {-1.0, 1.0, -1.0, 1.0}); }

Immersion unit_sphere_in_de_sitter() {
    return make("sin(u)*cos(v)", "sin(u)*sin(v)", "cos(u)", "0", {0.3, std::numbers::pi - 0.3, 0.0, 2.0 * std::numbers::pi});
}

Immersion sphere_in_hyperbolic_space() {
    return make("sqrt(3)*sin(u)*cos(v)", "sqrt(3)*sin(u)*sin(v)", "sqrt(3)*cos(u)", "2",
                {0.3, std::numbers::pi - 0.3, 0.0, 2.0 * std::numbers::pi});
}

Immersion lightlike_graph(int which) {
    switch (which) {
        case 0: return make("u^2 + v^2", "u", "v", "u^2 + v^2 - 1", {-1.0, 1.0, -1.0, 1.0});
        case 1: return make("sin(u)*cos(v)", "u", "v", "sin(u)*cos(v) + 0.5", {-1.5, 1.5, -1.5, 1.5});
        default: return make("exp(0.3*u)*v - u^3/3", "u", "v", "exp(0.3*u)*v - u^3/3 - 2", {-1.0, 1.0, -1.0, 1.0});
    }
}

ProfileCurve generic_hyperbolic_profile() {
    return ProfileCurve(parse("cos(0.7)*sinh(u)"), parse("sin(0.7)*sinh(u)"), parse("cosh(u) + 0.5"), 0.2, 1.2);
}

ProfileCurve generic_elliptic_profile() {
    return ProfileCurve(parse("sin(0.4)*sinh(u)"), parse("cosh(u)"), parse("cos(0.4)*sinh(u) + 0.5"), 0.2, 1.5);
}

Immersion twisted_saddle() { return make("u", "v", "(u^2 - v^2)/2", "u*v/2", {-0.5, 0.5, -0.5, 0.5}); }

Immersion wavy_graph() {
    return make("u", "v", "0.3*sin(u + 2*v)", "0.2*cos(u*v) + 0.1*u^2", {-1.0, 1.0, -1.0, 1.0});
}

std::vector<NamedSurface> test_surfaces() {
    return {
        {"unit-sphere-de-sitter", unit_sphere_in_de_sitter()},
        {"lightlike-graph", lightlike_graph(1)},
        {"hyperbolic-revolution", build_revolution(generic_hyperbolic_profile(), RevolutionKind::HyperbolicType)},
        {"elliptic-revolution", build_revolution(generic_elliptic_profile(), RevolutionKind::EllipticType)},
        {"wavy-graph", wavy_graph()},
    };
}

}  // namespace lcgauss::samples
