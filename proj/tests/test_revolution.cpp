#include "doctest.h"

#include <cmath>
#include <random>

#include "lcgauss/revolution.hpp"
#include "lcgauss/samples.hpp"

using namespace lcgauss;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

ProfileCurve example_profile() {
    return ProfileCurve(parse("sinh(u)/sqrt(2)"), parse("sinh(u)/sqrt(2)"), parse("cosh(u)"), -1.0, 1.0);
}

bool unordered_close(const MVec4& a1, const MVec4& a2, const MVec4& b1, const MVec4& b2, double tol) {
    auto c = [tol](const MVec4& x, const MVec4& y) { return (x - y).max_abs() <= tol; };
    return (c(a1, b1) && c(a2, b2)) || (c(a1, b2) && c(a2, b1));
}

// Orders the two curvature values of a branch as in CurvaturePair-free form.
std::pair<double, double> sorted(double a, double b) { return {std::max(a, b), std::min(a, b)}; }

bool curvatures_match(const SignedCurvatures& cf, const CurvatureReport& rep, double tol) {
    auto same = [tol](const CurvaturePair& c, const BranchCurvature& b) {
        const auto [hi, lo] = sorted(c.k1, c.k2);
        return std::abs(hi - b.k1) <= tol && std::abs(lo - b.k2) <= tol;
    };
    return (same(cf.sign_plus, rep.plus) && same(cf.sign_minus, rep.minus)) ||
           (same(cf.sign_plus, rep.minus) && same(cf.sign_minus, rep.plus));
}

struct Case {
    ProfileCurve profile;
    RevolutionKind kind;
};

std::vector<Case> all_cases() {
    return {
        {samples::generic_hyperbolic_profile(), RevolutionKind::HyperbolicType},
        {samples::generic_elliptic_profile(), RevolutionKind::EllipticType},
        {example_profile(), RevolutionKind::HyperbolicType},
        {family_umbilic_hyperbolic(1.3, -0.4, 0.2), RevolutionKind::HyperbolicType},
        {family_maximal_hyperbolic(1.5, 0.5), RevolutionKind::HyperbolicType},
        {family_umbilic_elliptic(1.0, 1.5), RevolutionKind::EllipticType},
        {family_maximal_elliptic(1.0, 1.5), RevolutionKind::EllipticType},
    };
}

}  // namespace

TEST_CASE("hyperbolic example surface") {
    const Immersion s = build_revolution(example_profile(), RevolutionKind::HyperbolicType);
    for (double u : {-0.5, 0.0, 0.7}) {
        for (double v : {-0.3, 0.4}) {
            const SurfaceJet j = s.jet(u, v);
            CHECK((j.X - MVec4{std::sinh(u) * kS, std::sinh(u) * kS, std::cosh(u) * std::sinh(v),
                               std::cosh(u) * std::cosh(v)})
                      .max_abs() <= 1e-14);
            const FirstForm g = first_form(j);
            CHECK(g.g11 == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(g.g12) <= 1e-14);
            CHECK(g.g22 == doctest::Approx(std::cosh(u) * std::cosh(u)).epsilon(1e-14));
        }
    }
}

TEST_CASE("elliptic layout") {
    const ProfileCurve p(parse("sqrt(2)*cosh(u)"), parse("sqrt(3)*cosh(u)"), parse("sinh(u)"), 0.2, 1.0);
    CHECK(arc_length_residual(p, RevolutionKind::EllipticType, 0.5) == doctest::Approx(0.0).epsilon(1e-13));
    const Immersion s = build_revolution(p, RevolutionKind::EllipticType);
    const SurfaceJet j = s.jet(0.5, 1.2);
    CHECK(j.X[0] == doctest::Approx(std::sinh(0.5) * std::cos(1.2)).epsilon(1e-14));
    CHECK(j.X[1] == doctest::Approx(std::sinh(0.5) * std::sin(1.2)).epsilon(1e-14));
    CHECK(j.X[2] == doctest::Approx(std::sqrt(2.0) * std::cosh(0.5)).epsilon(1e-14));
    CHECK(j.X[3] == doctest::Approx(std::sqrt(3.0) * std::cosh(0.5)).epsilon(1e-14));
}

TEST_CASE("arc length violation reports the residual") {
    const ProfileCurve p(parse("2*u"), parse("u"), parse("u"), 0.5, 1.5);
    CHECK(arc_length_residual(p, RevolutionKind::HyperbolicType, 1.0) == 3.0);
    try {
        build_revolution(p, RevolutionKind::HyperbolicType);
        FAIL("expected ArcLengthViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ArcLengthViolation);
        CHECK(std::string(e.what()).find("max residual 3") != std::string::npos);
        CHECK(std::string(e.what()).find("at u=") != std::string::npos);
    }
    // f = g = rho = u is unit speed for the hyperbolic kind
    const ProfileCurve q(parse("u"), parse("u"), parse("u"), 0.5, 1.5);
    CHECK(arc_length_residual(q, RevolutionKind::HyperbolicType, 1.0) == 0.0);
    CHECK_NOTHROW(build_revolution(q, RevolutionKind::HyperbolicType));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(ProfileCurve(parse("u"), parse("u"), parse("u"), 1.0, 1.0), Error);
    CHECK_THROWS_AS(ProfileCurve(parse("u*v"), parse("u"), parse("u"), 0.0, 1.0), Error);
    const ProfileNondegeneracy n = profile_nondegeneracy(samples::generic_hyperbolic_profile());
    CHECK(n.min_abs_df > 0.1);
    CHECK(n.min_abs_dg > 0.1);
    CHECK(n.min_abs_drho > 0.1);
    CHECK(n.min_abs_rho > 1.0);
}

TEST_CASE("closed-form lightcone at the hyperbolic example point") {
    const SignedPair p = closed_form_lightcone(example_profile(), RevolutionKind::HyperbolicType, 0.0, 0.0, 1.0);
    CHECK(unordered_close(p.sign_plus, p.sign_minus, {-kS, kS, 0, 1}, {kS, -kS, 0, 1}, 1e-15));
    const SignedCurvatures k = closed_form_curvatures(example_profile(), RevolutionKind::HyperbolicType, 0.0, 0.0, 1.0);
    CHECK(k.sign_plus.k2 == doctest::Approx(-1.0));
    CHECK(k.sign_minus.k2 == doctest::Approx(-1.0));
}

TEST_CASE("closed-form component identities") {
    const ProfileCurve hp = samples::generic_hyperbolic_profile();
    const ProfileCurve ep = samples::generic_elliptic_profile();
    for (double u : {0.3, 0.8, 1.1}) {
        for (double v : {-0.7, 0.2, 2.5}) {
            for (double r : {0.5, 2.0}) {
                const SignedPair h = closed_form_lightcone(hp, RevolutionKind::HyperbolicType, u, v, r);
                CHECK(h.sign_plus[2] == doctest::Approx(r * std::tanh(v)).epsilon(1e-14));
                CHECK(h.sign_minus[2] == doctest::Approx(r * std::tanh(v)).epsilon(1e-14));
                CHECK(h.sign_plus[3] == r);
            }
            const auto j = ep.jet(u);
            const double E = j.df * j.df + j.drho * j.drho;
            const SignedPair e = closed_form_lightcone(ep, RevolutionKind::EllipticType, u, v, 1.0);
            const auto [hi, lo] = sorted(e.sign_plus[2], e.sign_minus[2]);
            const auto [ehi, elo] = sorted((j.dg * j.df + j.drho) / E, (j.dg * j.df - j.drho) / E);
            CHECK(hi == doctest::Approx(ehi).epsilon(1e-14));
            CHECK(lo == doctest::Approx(elo).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(closed_form_lightcone(hp, RevolutionKind::HyperbolicType, 0.5, 0.0, 0.0), Error);
    // f' = 0 trips the division guard
    const ProfileCurve flat_f(parse("1"), parse("cosh(u)"), parse("sinh(u)"), 0.1, 1.0);
    try {
        closed_form_lightcone(flat_f, RevolutionKind::HyperbolicType, 0.5, 0.0, 1.0);
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainError);
    }
}

TEST_CASE("closed forms agree with the generic solver") {
    for (const auto& c : all_cases()) {
        const Immersion s = build_revolution(c.profile, c.kind);
        for (const auto& pt : sample_grid(s, 12, 12)) {
            for (double r : {0.5, 1.0, 2.0}) {
                const SignedPair cf = closed_form_lightcone(c.profile, c.kind, pt.u, pt.v, r);
                const LightconePair sol = solve_lightcone_normals(pt.jet, r);
                CHECK(unordered_close(cf.sign_plus, cf.sign_minus, sol.plus, sol.minus, 1e-9 * r));
                const SignedCurvatures k = closed_form_curvatures(c.profile, c.kind, pt.u, pt.v, r);
                CHECK(curvatures_match(k, classify_jet(pt.jet, r), 1e-8 * r));
            }
        }
    }
}

TEST_CASE("b12 vanishes on revolution surfaces") {
    for (const auto& c : all_cases()) {
        const Immersion s = build_revolution(c.profile, c.kind);
        for (const auto& pt : sample_grid(s, 8, 8)) {
            const LightconePair p = solve_lightcone_normals(pt.jet, 1.0);
            CHECK(std::abs(second_form(pt.jet, p, Branch::Plus).b12) <= 1e-11);
            CHECK(std::abs(second_form(pt.jet, p, Branch::Minus).b12) <= 1e-11);
        }
    }
}

TEST_CASE("family examples") {
    SUBCASE("umbilic hyperbolic C=1, C2=1") {
        const ProfileCurve p = family_umbilic_hyperbolic(1.0, 1.0);
        for (double u : {0.2, 0.9, 1.4}) {
            CHECK(p.f().eval(u, 0) == doctest::Approx(std::sinh(u) * kS).epsilon(1e-15));
            CHECK(p.g().eval(u, 0) == doctest::Approx(std::sinh(u) * kS).epsilon(1e-15));
            CHECK(p.rho().eval(u, 0) == doctest::Approx(std::cosh(u)).epsilon(1e-15));
            CHECK(std::abs(arc_length_residual(p, RevolutionKind::HyperbolicType, u)) <= 1e-13);
        }
    }
    SUBCASE("maximal hyperbolic C3=1, C2=0") {
        const ProfileCurve p = family_maximal_hyperbolic(1.0, 0.0);
        for (double u : {0.2, 0.5, 0.85}) {
            CHECK(p.f().eval(u, 0) == doctest::Approx(std::asin(u)).epsilon(1e-15));
            CHECK(p.g().eval(u, 0) == 0.0);
            CHECK(p.rho().eval(u, 0) == doctest::Approx(std::sqrt(1 - u * u)).epsilon(1e-15));
        }
        CHECK(p.u_max() < 1.0);
    }
    SUBCASE("umbilic elliptic B=1, C=sqrt 2") {
        const ProfileCurve p = family_umbilic_elliptic(1.0, std::sqrt(2.0));
        for (double u : {0.3, 1.0}) {
            CHECK(p.rho().eval(u, 0) == doctest::Approx(std::sinh(u)).epsilon(1e-15));
            CHECK(p.g().eval(u, 0) == doctest::Approx(std::sqrt(2.0) * std::cosh(u)).epsilon(1e-14));
            CHECK(p.f().eval(u, 0) == doctest::Approx(std::cosh(u)).epsilon(1e-14));
        }
    }
    SUBCASE("maximal elliptic C=1, C2=sqrt 2") {
        const ProfileCurve p = family_maximal_elliptic(1.0, std::sqrt(2.0));
        for (double u : {1.2, 2.0}) {
            CHECK(p.rho().eval(u, 0) == doctest::Approx(std::sqrt(u * u - 1)).epsilon(1e-15));
            CHECK(p.g().eval(u, 0) == doctest::Approx(std::sqrt(2.0) * std::acosh(u)).epsilon(1e-14));
            CHECK(p.f().eval(u, 0) == doctest::Approx(std::acosh(u)).epsilon(1e-14));
        }
        CHECK(p.u_min() > 1.0);
    }
}

TEST_CASE("family constraint errors") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([] { family_umbilic_hyperbolic(0.0, 1.0); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { family_maximal_hyperbolic(-1.0, 1.0); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { family_umbilic_elliptic(2.0, 1.0); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { family_maximal_elliptic(2.0, 1.0); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { family_umbilic_hyperbolic(1.0, 1.0, 0, 0, 0, 2); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { family_umbilic_hyperbolic(1.0, NAN); }) == ErrorKind::ConstraintViolation);
    // outside the open interval the profile itself is undefined
    CHECK(kind_of([] { family_maximal_hyperbolic(1.0, 0.0).rho().eval(1.5, 0); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { family_maximal_elliptic(1.0, 1.5).g().eval(0.5, 0); }) == ErrorKind::DomainError);
}

TEST_CASE("property: random family constants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0.3, 2.5), any(-1.5, 1.5), unit(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double C = pos(rng), C1 = any(rng), C2 = any(rng), m = any(rng), k = any(rng);
        const int sign = unit(rng) < 0.5 ? 1 : -1;
        const double B = pos(rng);
        const double Ce = std::sqrt(B) * (1.0 + unit(rng));
        const double C2e = std::sqrt(C) * (1.0 + unit(rng));
        const std::vector<Case> fams{
            {family_umbilic_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType},
            {family_maximal_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType},
            {family_umbilic_elliptic(B, Ce, C1, m, k, sign), RevolutionKind::EllipticType},
            {family_maximal_elliptic(C, C2e, C1, m, k, sign), RevolutionKind::EllipticType},
        };
        for (std::size_t i = 0; i < fams.size(); ++i) {
            const Case& c = fams[i];
            CAPTURE(i);
            for (double u : grid_axis(c.profile.u_min(), c.profile.u_max(), 41, kDefaultMargin))
                CHECK(std::abs(arc_length_residual(c.profile, c.kind, u)) <= 1e-9);
            const Immersion s = build_revolution(c.profile, c.kind);
            std::vector<MVec4> cloud;
            for (const auto& pt : sample_grid(s, 10, 10)) {
                cloud.push_back(pt.jet.X);
                const CurvatureReport rep = classify_jet(pt.jet, 1.0);
                if (i == 0 || i == 2) {
                    CHECK(std::abs(rep.plus.k1 - rep.plus.k2) <= 1e-8);
                    CHECK(std::abs(rep.minus.k1 - rep.minus.k2) <= 1e-8);
                } else {
                    CHECK(rep.H_vec_norm <= 1e-8);
                    CHECK(std::abs(rep.plus.H) <= 1e-8);
                    CHECK(std::abs(rep.minus.H) <= 1e-8);
                }
            }
            if (c.kind == RevolutionKind::HyperbolicType) {
                // g = C2 f + k puts the surface in the timelike hyperplane x2 - C2 x1 = k
                const HyperplaneFit fit = fit_hyperplane(cloud);
                CHECK(fit.rms_residual <= 1e-9);
                CHECK(hyperplane_character(fit.plane) == CausalCharacter::Timelike);
                const MVec4 expected = MVec4{-C2, 1, 0, 0} / std::hypot(1.0, C2);
                CHECK(std::min((fit.plane.normal - expected).max_abs(), (fit.plane.normal + expected).max_abs()) <=
                      1e-9);
            }
        }
    }
}

TEST_CASE("maximal hyperbolic family: k1 = -k2 on each branch") {
    const ProfileCurve p = family_maximal_hyperbolic(1.5, 0.5, 0.1);
    for (double u : grid_axis(p.u_min(), p.u_max(), 9, kDefaultMargin)) {
        const SignedCurvatures k = closed_form_curvatures(p, RevolutionKind::HyperbolicType, u, 0.3, 1.0);
        CHECK(std::abs(k.sign_plus.k1 + k.sign_plus.k2) <= 1e-10);
        CHECK(std::abs(k.sign_minus.k1 + k.sign_minus.k2) <= 1e-10);
    }
}

TEST_CASE("unnormalized umbilic constants break unit speed unless C2 = 0") {
    const ProfileCurve bad = family_umbilic_hyperbolic_unnormalized(1.0, 1.0);
    double worst = 0.0;
    for (double u : grid_axis(bad.u_min(), bad.u_max(), 20, kDefaultMargin))
        worst = std::max(worst, std::abs(arc_length_residual(bad, RevolutionKind::HyperbolicType, u)));
    // residual = C2^2 cosh^2(u): at least cosh^2(0.1) > 1
    CHECK(worst >= 1.0);
    CHECK_THROWS_AS(build_revolution(bad, RevolutionKind::HyperbolicType), Error);

    const ProfileCurve good = family_umbilic_hyperbolic_unnormalized(1.0, 0.0);
    for (double u : grid_axis(good.u_min(), good.u_max(), 20, kDefaultMargin))
        CHECK(std::abs(arc_length_residual(good, RevolutionKind::HyperbolicType, u)) <= 1e-12);
}

TEST_CASE("family profiles satisfy their ODE systems") {
    // Residuals of the structure equations, evaluated from profile jets.
    const ProfileCurve ue = family_umbilic_elliptic(0.8, 1.3, 0.1);
    for (double u : grid_axis(ue.u_min(), ue.u_max(), 15, kDefaultMargin)) {
        const auto j = ue.jet(u);
        CHECK(std::abs(j.rho * j.ddg - j.drho * j.dg) <= 1e-10);
        CHECK(std::abs(j.rho * (j.ddrho * j.df - j.ddf * j.drho) + j.df) <= 1e-10);
        CHECK(std::abs(j.rho * j.ddrho - j.drho * j.drho + 1) <= 1e-10);
    }
    const ProfileCurve me = family_maximal_elliptic(1.2, 1.4, -0.3);
    for (double u : grid_axis(me.u_min(), me.u_max(), 15, kDefaultMargin)) {
        const auto j = me.jet(u);
        CHECK(std::abs(j.rho * j.ddg + j.drho * j.dg) <= 1e-10);
        CHECK(std::abs(j.rho * (j.ddrho * j.df - j.ddf * j.drho) - j.df) <= 1e-10);
        CHECK(std::abs(j.rho * j.ddrho + j.drho * j.drho - 1) <= 1e-10);
    }
    const ProfileCurve uh = family_umbilic_hyperbolic(0.7, 0.9, 0.2);
    for (double u : grid_axis(uh.u_min(), uh.u_max(), 15, kDefaultMargin)) {
        const auto j = uh.jet(u);
        CHECK(std::abs((j.ddg * j.df - j.dg * j.ddf) / j.df) <= 1e-10);
        CHECK(std::abs((j.ddf * j.drho - j.df * j.ddrho) / j.df + 1 / j.rho) <= 1e-10);
    }
    const ProfileCurve mh = family_maximal_hyperbolic(1.1, -0.6, 0.2);
    for (double u : grid_axis(mh.u_min(), mh.u_max(), 15, kDefaultMargin)) {
        const auto j = mh.jet(u);
        CHECK(std::abs((j.ddf * j.drho - j.df * j.ddrho) / j.df - 1 / j.rho) <= 1e-10);
        CHECK(std::abs(j.rho * j.ddrho + j.drho * j.drho + 1) <= 1e-10);
    }
}
