// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-lcgauss-binary>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lcgauss/odeverify.hpp"
#include "lcgauss/revolution.hpp"
#include "lcgauss/samples.hpp"
#include "lcgauss/verify.hpp"

using namespace lcgauss;

namespace {

constexpr int kGrid = 20;
const double kRs[] = {0.5, 1.0, 2.0};

struct Outcome {
    bool pass;
    std::string measured;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double max_abs(std::initializer_list<double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

std::vector<std::pair<std::string, Immersion>> revolution_surfaces() {
    return {
        {"hyperbolic generic", build_revolution(samples::generic_hyperbolic_profile(), RevolutionKind::HyperbolicType)},
        {"elliptic generic", build_revolution(samples::generic_elliptic_profile(), RevolutionKind::EllipticType)},
        {"umbilic hyperbolic", build_revolution(family_umbilic_hyperbolic(1.0, 0.5), RevolutionKind::HyperbolicType)},
        {"maximal hyperbolic", build_revolution(family_maximal_hyperbolic(1.5, 0.5), RevolutionKind::HyperbolicType)},
        {"umbilic elliptic", build_revolution(family_umbilic_elliptic(1.0, 1.5), RevolutionKind::EllipticType)},
        {"maximal elliptic", build_revolution(family_maximal_elliptic(1.0, 1.5), RevolutionKind::EllipticType)},
    };
}

Outcome gauss_map_residuals() {
    double worst_null = 0.0, worst_tangent = 0.0;
    for (const auto& [name, s] : samples::test_surfaces()) {
        for (const auto& pt : sample_grid(s, kGrid, kGrid)) {
            for (double r : kRs) {
                const LightconePair p = solve_lightcone_normals(pt.jet, r);
                for (const MVec4* l : {&p.plus, &p.minus}) {
                    worst_null = std::max(worst_null, std::abs(inner(*l, *l)) / (r * r));
                    worst_tangent = std::max({worst_tangent,
                                              std::abs(inner(*l, pt.jet.Xu)) / (r * pt.jet.Xu.euclidean_norm()),
                                              std::abs(inner(*l, pt.jet.Xv)) / (r * pt.jet.Xv.euclidean_norm())});
                }
            }
        }
    }
    return {worst_null <= 1e-10 && worst_tangent <= 1e-10,
            "null " + sci(worst_null) + ", tangency " + sci(worst_tangent) + " (scaled, tol 1e-10)"};
}

Outcome r_homogeneity() {
    double worst = 0.0;
    for (const auto& [name, s] : samples::test_surfaces()) {
        for (const auto& pt : sample_grid(s, kGrid, kGrid)) {
            const LightconePair one = solve_lightcone_normals(pt.jet, 1.0);
            const CurvatureReport base = classify_jet(pt.jet, 1.0);
            const double kscale = max_abs({base.plus.k1, base.plus.k2, base.minus.k1, base.minus.k2});
            for (double r : {0.5, 2.0, 3.0, 0.7}) {
                const LightconePair p = solve_lightcone_normals(pt.jet, r);
                const CurvatureReport rep = classify_jet(pt.jet, r);
                auto rel_vec = [&](const MVec4& a, const MVec4& b) {
                    return (a - r * b).euclidean_norm() / (r * b.euclidean_norm());
                };
                auto rel_k = [&](const BranchCurvature& a, const BranchCurvature& b) {
                    return std::max(std::abs(a.k1 - r * b.k1), std::abs(a.k2 - r * b.k2)) / (r * kscale);
                };
                const double same = std::max({rel_vec(p.plus, one.plus), rel_vec(p.minus, one.minus),
                                              rel_k(rep.plus, base.plus), rel_k(rep.minus, base.minus)});
                const double swapped = std::max({rel_vec(p.plus, one.minus), rel_vec(p.minus, one.plus),
                                                 rel_k(rep.plus, base.minus), rel_k(rep.minus, base.plus)});
                worst = std::max(worst, std::min(same, swapped));
            }
        }
    }
    return {worst <= 1e-11, "max relative error " + sci(worst) + " (tol 1e-11)"};
}

Outcome closed_form_agreement() {
    struct Case {
        ProfileCurve p;
        RevolutionKind kind;
    };
    const Case cases[] = {
        {samples::generic_hyperbolic_profile(), RevolutionKind::HyperbolicType},
        {family_maximal_hyperbolic(1.5, 0.5), RevolutionKind::HyperbolicType},
        {family_umbilic_hyperbolic(0.8, -1.2, 0.3), RevolutionKind::HyperbolicType},
        {samples::generic_elliptic_profile(), RevolutionKind::EllipticType},
        {family_umbilic_elliptic(1.0, 1.5), RevolutionKind::EllipticType},
        {family_maximal_elliptic(1.0, 1.6), RevolutionKind::EllipticType},
    };
    double worst_l = 0.0, worst_k = 0.0;
    for (const auto& c : cases) {
        const Immersion s = build_revolution(c.p, c.kind);
        for (const auto& pt : sample_grid(s, kGrid, kGrid)) {
            // elliptic closed forms are stated at r = 1
            const std::vector<double> rs =
                c.kind == RevolutionKind::EllipticType ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
            for (double r : rs) {
                const SignedPair cf = closed_form_lightcone(c.p, c.kind, pt.u, pt.v, r);
                const LightconePair sol = solve_lightcone_normals(pt.jet, r);
                worst_l = std::max(worst_l, std::min(std::max((cf.sign_plus - sol.plus).max_abs(),
                                                              (cf.sign_minus - sol.minus).max_abs()),
                                                     std::max((cf.sign_plus - sol.minus).max_abs(),
                                                              (cf.sign_minus - sol.plus).max_abs())));
                const SignedCurvatures k = closed_form_curvatures(c.p, c.kind, pt.u, pt.v, r);
                const CurvatureReport rep = classify_jet(pt.jet, r);
                auto diff = [](const CurvaturePair& a, const BranchCurvature& b) {
                    return std::max(std::abs(std::max(a.k1, a.k2) - b.k1), std::abs(std::min(a.k1, a.k2) - b.k2));
                };
                worst_k = std::max(worst_k, std::min(std::max(diff(k.sign_plus, rep.plus), diff(k.sign_minus, rep.minus)),
                                                     std::max(diff(k.sign_plus, rep.minus), diff(k.sign_minus, rep.plus))));
            }
        }
    }
    return {worst_l <= 1e-9 && worst_k <= 1e-8,
            "lightcone " + sci(worst_l) + " (tol 1e-9), curvatures " + sci(worst_k) + " (tol 1e-8)"};
}

Outcome ode_suite(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.5, 2.0), shift(-1.0, 1.0), coin(0.0, 1.0);
    double worst_res = 0.0, worst_rk4 = 0.0, min_ratio = INFINITY;
    for (ProfileOde ode : kAllProfileOdes) {
        for (int i = 0; i < 10; ++i) {
            OdeConstants k;
            k.C = pos(rng) * (ode == ProfileOde::SqrtType && coin(rng) < 0.5 ? -1.0 : 1.0);
            k.C1 = shift(rng);
            k.sign = coin(rng) < 0.5 ? 1 : -1;
            const Expr rho = ode_solution(ode, k);
            const Interval iv = solution_interval(ode, k);
            for (double u : grid_axis(iv.lo, iv.hi, 100, 0.0))
                worst_res = std::max(worst_res, std::abs(ode_residual(ode, rho, u)));
            const double r0 = rho.eval(iv.lo, 0), d0 = differentiate(rho, Var::U).eval(iv.lo, 0);
            worst_rk4 = std::max(worst_rk4, rk4_deviation(ode, r0, d0, iv.lo, iv.hi, 10000));
            const double e1 = rk4_deviation(ode, r0, d0, iv.lo, iv.hi, 100);
            const double e2 = rk4_deviation(ode, r0, d0, iv.lo, iv.hi, 200);
            const double e3 = rk4_deviation(ode, r0, d0, iv.lo, iv.hi, 400);
            min_ratio = std::min({min_ratio, e1 / e2, e2 / e3});
        }
    }
    return {worst_res <= 1e-10 && worst_rk4 <= 1e-8 && min_ratio >= 12.0,
            "residual " + sci(worst_res) + " (tol 1e-10), rk4 " + sci(worst_rk4) + " (tol 1e-8), halving ratio " +
                sci(min_ratio) + " (>= 12)"};
}

Outcome family_verification(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.5, 2.0), any(-1.0, 1.0), unit(0.0, 1.0);
    double arc = 0.0, umb = 0.0, hvec = 0.0, hbr = 0.0;
    for (int draw = 0; draw < 5; ++draw) {
        const double C = pos(rng), C1 = any(rng), C2 = any(rng), m = any(rng), k = any(rng);
        const int sign = unit(rng) < 0.5 ? 1 : -1;
        const double B = pos(rng), Ce = std::sqrt(B) * (1.0 + unit(rng)), C2e = std::sqrt(C) * (1.0 + unit(rng));
        const std::pair<ProfileCurve, RevolutionKind> fams[] = {
            {family_umbilic_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType},
            {family_umbilic_elliptic(B, Ce, C1, m, k, sign), RevolutionKind::EllipticType},
            {family_maximal_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType},
            {family_maximal_elliptic(C, C2e, C1, m, k, sign), RevolutionKind::EllipticType},
        };
        for (int i = 0; i < 4; ++i) {
            const auto& [p, kind] = fams[i];
            for (double u : grid_axis(p.u_min(), p.u_max(), 101, kDefaultMargin))
                arc = std::max(arc, std::abs(arc_length_residual(p, kind, u)));
            for (const auto& pt : sample_grid(build_revolution(p, kind), kGrid, kGrid)) {
                const CurvatureReport rep = classify_jet(pt.jet, 1.0);
                if (i < 2) {
                    umb = std::max({umb, rep.plus.k1 - rep.plus.k2, rep.minus.k1 - rep.minus.k2});
                } else {
                    hvec = std::max(hvec, rep.H_vec_norm);
                    hbr = std::max({hbr, std::abs(rep.plus.H), std::abs(rep.minus.H)});
                }
            }
        }
    }
    return {arc <= 1e-9 && umb <= 1e-8 && hvec <= 1e-8 && hbr <= 1e-8,
            "arc length " + sci(arc) + ", |k1-k2| " + sci(umb) + ", |H_vec| " + sci(hvec) + ", |H+-| " + sci(hbr)};
}

Outcome constant_discrepancy() {
    auto worst_residual = [](double C2) {
        const ProfileCurve p = family_umbilic_hyperbolic_unnormalized(1.0, C2);
        double w = 0.0;
        for (double u : grid_axis(p.u_min(), p.u_max(), kGrid, kDefaultMargin))
            w = std::max(w, std::abs(arc_length_residual(p, RevolutionKind::HyperbolicType, u)));
        return w;
    };
    const double bad = worst_residual(1.0), good = worst_residual(0.0);
    bool named = false;
    for (const Check& c : run_verify(Suite::Families).checks)
        if (c.name.find("C2=1") != std::string::npos && c.bound == Bound::AtLeast && c.passed()) named = true;
    return {bad >= 0.1 && good <= 1e-9 && named,
            "C2=1 residual " + sci(bad) + " (>= 0.1), C2=0 residual " + sci(good) +
                (named ? ", named check present" : ", named check MISSING")};
}

Outcome lightlike_graphs() {
    double spread = 0.0, flat = 0.0, rms = 0.0, nn = 0.0;
    for (int which = 0; which < samples::kLightlikeGraphCount; ++which) {
        const auto grid = sample_grid(samples::lightlike_graph(which), kGrid, kGrid);
        const LightconePair first = solve_lightcone_normals(grid.front().jet, 1.0);
        double s[2] = {0, 0}, k[2] = {0, 0};
        std::vector<MVec4> cloud;
        for (const auto& pt : grid) {
            cloud.push_back(pt.jet.X);
            const LightconePair p = solve_lightcone_normals(pt.jet, 1.0);
            const CurvatureReport rep = classify_jet(pt.jet, 1.0);
            s[0] = std::max(s[0], (p.plus - first.plus).max_abs());
            s[1] = std::max(s[1], (p.minus - first.minus).max_abs());
            k[0] = std::max(k[0], max_abs({rep.plus.k1, rep.plus.k2}));
            k[1] = std::max(k[1], max_abs({rep.minus.k1, rep.minus.k2}));
        }
        const int b = s[0] <= s[1] ? 0 : 1;
        spread = std::max(spread, s[b]);
        flat = std::max(flat, k[b]);
        const HyperplaneFit fit = fit_hyperplane(cloud);
        rms = std::max(rms, fit.rms_residual);
        nn = std::max(nn, std::abs(inner(fit.plane.normal, fit.plane.normal)));
    }
    return {spread <= 1e-9 && flat <= 1e-8 && rms <= 1e-9 && nn <= 1e-9,
            "constant branch " + sci(spread) + ", flat " + sci(flat) + ", fit rms " + sci(rms) + ", |<n,n>| " +
                sci(nn)};
}

Outcome sphere_in_de_sitter() {
    const Immersion s = samples::unit_sphere_in_de_sitter();
    double umb = 0.0, par = 0.0, on_quadric = 0.0;
    for (const auto& pt : sample_grid(s, kGrid, kGrid)) {
        const CurvatureReport rep = classify_jet(pt.jet, 1.0);
        umb = std::max({umb, rep.plus.k1 - rep.plus.k2, rep.minus.k1 - rep.minus.k2});
        on_quadric = std::max(on_quadric, std::abs(inner(pt.jet.X, pt.jet.X) - 1.0));
        for (Branch b : {Branch::Plus, Branch::Minus}) par = std::max(par, parallel_defect(s, pt.u, pt.v, 1.0, b));
    }
    return {umb <= 1e-8 && par <= 5e-6 && on_quadric <= 1e-12,
            "umbilicity " + sci(umb) + " (tol 1e-8), parallel defect " + sci(par) + " (tol 5e-6)"};
}

Immersion bump(const Immersion& s, const char* x2, const char* x3) {
    auto c = s.components();
    c[1] = c[1] + parse(x2);
    c[2] = c[2] + parse(x3);
    return Immersion(c, s.domain(), s.margin());
}

double max_normal_curvature(const Immersion& s, int n) {
    double w = 0.0;
    for (const auto& pt : sample_grid(s, n, n)) w = std::max(w, std::abs(normal_curvature(s, pt.u, pt.v)));
    return w;
}

Outcome normal_curvature_check() {
    const Immersion families[] = {
        build_revolution(family_umbilic_hyperbolic(1.0, 0.5, 0.2), RevolutionKind::HyperbolicType),
        build_revolution(family_maximal_hyperbolic(1.5, -0.7, 0.1), RevolutionKind::HyperbolicType),
        build_revolution(family_umbilic_elliptic(1.0, 1.5, -0.2), RevolutionKind::EllipticType),
        build_revolution(family_maximal_elliptic(1.0, 1.6, 0.3), RevolutionKind::EllipticType),
    };
    double on_families = 0.0;
    for (const Immersion& s : families) on_families = std::max(on_families, max_normal_curvature(s, 10));
    const double perturbed = max_normal_curvature(bump(families[0], "0.1*u*v", "0.05*u^2"), 10);
    return {on_families <= 1e-4 && perturbed >= 1e-3,
            "families " + sci(on_families) + " (tol 1e-4), perturbed " + sci(perturbed) + " (>= 1e-3)"};
}

Outcome weingarten_routes() {
    double fd = 0.0;
    for (const auto& [name, s] : samples::test_surfaces()) {
        for (const auto& pt : sample_grid(s, 8, 8)) {
            const LightconePair p = solve_lightcone_normals(pt.jet, 1.0);
            for (Branch b : {Branch::Plus, Branch::Minus}) {
                const Eigen::Matrix2d exact = weingarten_matrix(first_form(pt.jet), second_form(pt.jet, p, b));
                const Eigen::Matrix2d num = weingarten_by_differentiation(s, pt.u, pt.v, 1.0, b);
                fd = std::max(fd, (exact - num).cwiseAbs().maxCoeff());
            }
        }
    }
    double b12 = 0.0;
    for (const auto& [name, s] : revolution_surfaces()) {
        for (const auto& pt : sample_grid(s, kGrid, kGrid)) {
            for (double r : kRs) {
                const LightconePair p = solve_lightcone_normals(pt.jet, r);
                b12 = std::max({b12, std::abs(second_form(pt.jet, p, Branch::Plus).b12),
                                std::abs(second_form(pt.jet, p, Branch::Minus).b12)});
            }
        }
    }
    return {fd <= 1e-6 && b12 <= 1e-11, "route difference " + sci(fd) + " (tol 1e-6), |b12| " + sci(b12) + " (tol 1e-11)"};
}

Outcome maximality_equivalence(std::mt19937_64& rng) {
    constexpr double tol = 1e-8;
    struct Entry {
        Immersion s;
        bool maximal;
    };
    const Immersion mh = build_revolution(family_maximal_hyperbolic(1.5, -0.7, 0.1), RevolutionKind::HyperbolicType);
    const Immersion me = build_revolution(family_maximal_elliptic(1.0, 1.6, 0.3), RevolutionKind::EllipticType);
    const std::vector<Entry> pool{
        {mh, true},
        {me, true},
        {bump(mh, "0.01*u*v", "0.005*v^2"), false},
        {bump(me, "0.01*u*v", "0.005*v^2"), false},
        {samples::wavy_graph(), false},
        {samples::unit_sphere_in_de_sitter(), false},
    };
    int counterexamples = 0, false_positives = 0, maximal_seen = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Entry& e = pool[static_cast<std::size_t>(i) % pool.size()];
        const Domain d = e.s.sampling_domain();
        const double u = d.u_min + unit(rng) * d.u_extent(), v = d.v_min + unit(rng) * d.v_extent();
        const CurvatureReport rep = classify_point(e.s, u, v, 1.0, tol);
        const bool vec = rep.H_vec_norm <= tol;
        const bool branches = std::abs(rep.plus.H) <= 10 * tol && std::abs(rep.minus.H) <= 10 * tol;
        if (vec != branches) ++counterexamples;
        if (!e.maximal && (vec || branches)) ++false_positives;
        if (e.maximal && !vec) ++counterexamples;
        maximal_seen += e.maximal;
    }
    return {counterexamples == 0 && false_positives == 0,
            std::to_string(counterexamples) + " counterexamples, " + std::to_string(false_positives) +
                " false positives over 200 points (" + std::to_string(maximal_seen) + " on maximal surfaces)"};
}

Outcome determinism(const std::string& binary) {
    auto run_once = [&](int& status) {
        std::string out;
        FILE* pipe = popen(("'" + binary + "' verify all --seed 42").c_str(), "r");
        if (!pipe) {
            status = -1;
            return out;
        }
        char buf[4096];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        status = pclose(pipe);
        return out;
    };
    const auto start = std::chrono::steady_clock::now();
    int s1 = 0, s2 = 0;
    const std::string a = run_once(s1);
    const std::string b = run_once(s2);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool same = !a.empty() && a == b;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s per run", seconds / 2);
    return {same && s1 == 0 && s2 == 0 && seconds / 2 < 60.0,
            std::string(same ? "byte-identical" : "outputs differ") + ", exit " + std::to_string(s1) + "/" +
                std::to_string(s2) + ", " + timing + " (limit 60 s)"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-lcgauss>\n";
        return 2;
    }
    const std::string binary = argv[1];
    std::mt19937_64 rng(42);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"lightcone normal residuals on 5 surfaces x 20x20 x 3 scales", gauss_map_residuals},
        {"r-homogeneity of normals and curvatures", r_homogeneity},
        {"closed-form normals and curvatures match the solver", closed_form_agreement},
        {"profile ODE closed forms and RK4 oracle", [&] { return ode_suite(rng); }},
        {"umbilic and maximal families", [&] { return family_verification(rng); }},
        {"unnormalized umbilic constants fail unit speed unless C2 = 0", constant_discrepancy},
        {"graphs over lightlike hyperplanes", lightlike_graphs},
        {"unit sphere in de Sitter space", sphere_in_de_sitter},
        {"normal curvature on umbilic and maximal families", normal_curvature_check},
        {"two Weingarten routes and b12 on revolution surfaces", weingarten_routes},
        {"maximality equivalence", [&] { return maximality_equivalence(rng); }},
        {"verify all determinism and runtime", [&] { return determinism(binary); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " | "
                  << o.measured << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
