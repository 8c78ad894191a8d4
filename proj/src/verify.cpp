#include "lcgauss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <utility>

#include "lcgauss/error.hpp"
#include "lcgauss/gaussmap.hpp"
#include "lcgauss/odeverify.hpp"
#include "lcgauss/revolution.hpp"
#include "lcgauss/samples.hpp"
#include "lcgauss/surface.hpp"

namespace lcgauss {

namespace {

constexpr int kGrid = 20;
constexpr int kCurvatureGrid = 6;
constexpr int kDraws = 5;
constexpr int kOdeDraws = 10;
constexpr int kOdeSamples = 100;

struct Measured {
    double value;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string short_real(double x) { return fmt("%.6g", x); }

class Collector {
public:
    Collector(std::string suite, std::vector<Check>& out) : suite_(std::move(suite)), out_(out) {}

    void add(std::string name, std::string anchor, double tol, Bound bound, const std::function<Measured()>& fn) {
        Check c;
        c.suite = suite_;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.tolerance = tol;
        c.bound = bound;
        try {
            Measured m = fn();
            c.measured = m.value;
            c.detail = std::move(m.detail);
        } catch (const std::exception& e) {
            c.measured = std::nan("");
            c.detail = std::string("error: ") + e.what();
        }
        out_.push_back(std::move(c));
    }

private:
    std::string suite_;
    std::vector<Check>& out_;
};

// Largest-magnitude tracker that remembers what produced the maximum.
struct Worst {
    double value = 0.0;
    std::string detail;

    void offer(double x, const std::function<std::string()>& describe) {
        if (!(x <= value)) {
            value = x;
            detail = describe();
        }
    }
    Measured result() const { return {value, detail}; }
};

std::string ode_constants_text(const OdeConstants& k) {
    return "C=" + short_real(k.C) + " C1=" + short_real(k.C1) + " sign=" + (k.sign > 0 ? "+" : "-");
}

OdeConstants draw_ode_constants(ProfileOde ode, Rng& rng) {
    OdeConstants k;
    k.C = rng.uniform(0.5, 2.0);
    if (ode == ProfileOde::SqrtType) k.C *= rng.sign();
    k.C1 = rng.uniform(-1.0, 1.0);
    k.sign = rng.sign();
    return k;
}

void ode_suite(std::vector<Check>& out, Rng& rng) {
    Collector col("odes", out);
    for (ProfileOde ode : kAllProfileOdes) {
        std::vector<OdeConstants> draws;
        for (int i = 0; i < kOdeDraws; ++i) draws.push_back(draw_ode_constants(ode, rng));
        const std::string tag = std::string(to_string(ode)) + "-type";

        col.add(tag + " closed-form residual", "closed form solves rho rho'' + s1 rho'^2 + s0 = 0", 1e-10,
                Bound::AtMost, [&] {
                    Worst w;
                    for (const auto& k : draws) {
                        const Expr rho = ode_solution(ode, k);
                        const Interval iv = solution_interval(ode, k);
                        for (double u : grid_axis(iv.lo, iv.hi, kOdeSamples, 0.0))
                            w.offer(std::abs(ode_residual(ode, rho, u)), [&] { return ode_constants_text(k); });
                    }
                    return w.result();
                });

        auto initial = [&](const OdeConstants& k) {
            const Expr rho = ode_solution(ode, k);
            const Interval iv = solution_interval(ode, k);
            const Expr d = differentiate(rho, Var::U);
            return std::array<double, 4>{rho.eval(iv.lo, 0.0), d.eval(iv.lo, 0.0), iv.lo, iv.hi};
        };

        col.add(tag + " rk4 deviation (1e4 steps)", "rk4 trajectory matches closed form", 1e-8, Bound::AtMost, [&] {
            Worst w;
            for (const auto& k : draws) {
                const auto a = initial(k);
                w.offer(rk4_deviation(ode, a[0], a[1], a[2], a[3], 10000), [&] { return ode_constants_text(k); });
            }
            return w.result();
        });

        col.add(tag + " rk4 halving ratio", "rk4 error falls ~16x per step halving", 12.0, Bound::AtLeast, [&] {
            Measured best{INFINITY, ""};
            for (const auto& k : draws) {
                const auto a = initial(k);
                const double e1 = rk4_deviation(ode, a[0], a[1], a[2], a[3], 100);
                const double e2 = rk4_deviation(ode, a[0], a[1], a[2], a[3], 200);
                const double e3 = rk4_deviation(ode, a[0], a[1], a[2], a[3], 400);
                const double ratio = std::min(e1 / e2, e2 / e3);
                if (!(ratio >= best.value)) best = {ratio, ode_constants_text(k) + " steps=100/200/400"};
            }
            return best;
        });
    }

    col.add("linear dependence fit", "g'' f' - g' f'' = 0 implies g = c f + k", 1e-8, Bound::AtMost, [&] {
        const double c = rng.uniform(-3.0, 3.0), k = rng.uniform(-3.0, 3.0);
        const Expr f = parse("sinh(u) + u^3/5");
        const Expr g = simplify(Expr::constant(c) * f + Expr::constant(k));
        const auto fit = fit_linear_dependence(f, g, grid_axis(-1.0, 1.0, 50, 0.0));
        if (!(fit.max_wronskian <= 1e-10))
            throw Error(ErrorKind::ConstraintViolation, "wronskian residual " + format_real(fit.max_wronskian));
        return Measured{std::max(fit.max_residual, std::abs(fit.c - c) + std::abs(fit.k - k)),
                        "c=" + short_real(c) + " k=" + short_real(k) + " wronskian=" + fmt("%.3e", fit.max_wronskian)};
    });
}

double pair_distance(const MVec4& a, const MVec4& b, const MVec4& c, const MVec4& d) {
    return std::max((a - c).euclidean_norm(), (b - d).euclidean_norm());
}

std::string at(double u, double v) { return "u=" + short_real(u) + " v=" + short_real(v); }

void closed_form_cases(Collector& col, const std::string& label, const ProfileCurve& p, RevolutionKind kind) {
    const Immersion s = build_revolution(p, kind);
    const auto grid = sample_grid(s, kGrid, kGrid);
    const std::string anchor_l = std::string(to_string(kind)) + "-type closed-form lightcone normals";
    const std::string anchor_k = std::string(to_string(kind)) + "-type closed-form principal curvatures";

    col.add(label + " lightcone normals", anchor_l, 1e-9, Bound::AtMost, [&] {
        Worst w;
        for (const auto& pt : grid) {
            const LightconePair pair = solve_lightcone_normals(pt.jet, 1.0);
            const SignedPair c = closed_form_lightcone(p, kind, pt.u, pt.v, 1.0);
            const double d = std::min(pair_distance(pair.plus, pair.minus, c.sign_plus, c.sign_minus),
                                      pair_distance(pair.plus, pair.minus, c.sign_minus, c.sign_plus));
            w.offer(d, [&] { return at(pt.u, pt.v); });
        }
        return w.result();
    });

    col.add(label + " principal curvatures", anchor_k, 1e-8, Bound::AtMost, [&] {
        Worst w;
        for (const auto& pt : grid) {
            const LightconePair pair = solve_lightcone_normals(pt.jet, 1.0);
            const SignedPair cl = closed_form_lightcone(p, kind, pt.u, pt.v, 1.0);
            const SignedCurvatures ck = closed_form_curvatures(p, kind, pt.u, pt.v, 1.0);
            const CurvatureReport rep = classify_jet(pt.jet, 1.0);
            const bool straight = pair_distance(pair.plus, pair.minus, cl.sign_plus, cl.sign_minus) <=
                                  pair_distance(pair.plus, pair.minus, cl.sign_minus, cl.sign_plus);
            const CurvaturePair& for_plus = straight ? ck.sign_plus : ck.sign_minus;
            const CurvaturePair& for_minus = straight ? ck.sign_minus : ck.sign_plus;
            auto diff = [](const CurvaturePair& c, const BranchCurvature& b) {
                const double hi = std::max(c.k1, c.k2), lo = std::min(c.k1, c.k2);
                return std::max(std::abs(hi - b.k1), std::abs(lo - b.k2));
            };
            w.offer(std::max(diff(for_plus, rep.plus), diff(for_minus, rep.minus)), [&] { return at(pt.u, pt.v); });
        }
        return w.result();
    });
}

void closed_forms_suite(std::vector<Check>& out) {
    Collector col("closed-forms", out);
    closed_form_cases(col, "hyperbolic generic", samples::generic_hyperbolic_profile(), RevolutionKind::HyperbolicType);
    closed_form_cases(col, "hyperbolic maximal", family_maximal_hyperbolic(1.5, 0.5), RevolutionKind::HyperbolicType);
    closed_form_cases(col, "elliptic generic", samples::generic_elliptic_profile(), RevolutionKind::EllipticType);
    closed_form_cases(col, "elliptic umbilic", family_umbilic_elliptic(1.0, 1.5), RevolutionKind::EllipticType);

    col.add("revolution b12", "b12 = 0 on surfaces of revolution", 1e-11, Bound::AtMost, [&] {
        Worst w;
        const std::pair<ProfileCurve, RevolutionKind> cases[] = {
            {samples::generic_hyperbolic_profile(), RevolutionKind::HyperbolicType},
            {samples::generic_elliptic_profile(), RevolutionKind::EllipticType},
        };
        for (const auto& [p, kind] : cases) {
            for (const auto& pt : sample_grid(build_revolution(p, kind), kGrid, kGrid)) {
                const LightconePair pair = solve_lightcone_normals(pt.jet, 1.0);
                for (Branch b : {Branch::Plus, Branch::Minus})
                    w.offer(std::abs(second_form(pt.jet, pair, b).b12), [&] { return at(pt.u, pt.v); });
            }
        }
        return w.result();
    });
}

enum class Family { UmbilicHyperbolic, MaximalHyperbolic, UmbilicElliptic, MaximalElliptic };

struct FamilyDraw {
    ProfileCurve profile;
    RevolutionKind kind;
    std::string constants;
};

FamilyDraw draw_family(Family f, Rng& rng) {
    const double C1 = rng.uniform(-1.0, 1.0), m = rng.uniform(-1.0, 1.0), k = rng.uniform(-1.0, 1.0);
    const int sign = rng.sign();
    const std::string tail = " C1=" + short_real(C1) + " m=" + short_real(m) + " k=" + short_real(k) +
                             " sign=" + (sign > 0 ? "+" : "-");
    switch (f) {
        case Family::UmbilicHyperbolic: {
            const double C = rng.uniform(0.5, 2.0), C2 = rng.uniform(-2.0, 2.0);
            return {family_umbilic_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType,
                    "C=" + short_real(C) + " C2=" + short_real(C2) + tail};
        }
        case Family::MaximalHyperbolic: {
            const double C3 = rng.uniform(0.5, 2.0), C2 = rng.uniform(-2.0, 2.0);
            return {family_maximal_hyperbolic(C3, C2, C1, m, k, sign), RevolutionKind::HyperbolicType,
                    "C3=" + short_real(C3) + " C2=" + short_real(C2) + tail};
        }
        case Family::UmbilicElliptic: {
            const double B = rng.uniform(0.5, 2.0);
            const double C = rng.sign() * std::sqrt(B) * rng.uniform(1.1, 2.0);
            return {family_umbilic_elliptic(B, C, C1, m, k, sign), RevolutionKind::EllipticType,
                    "B=" + short_real(B) + " C=" + short_real(C) + tail};
        }
        case Family::MaximalElliptic: {
            const double C = rng.uniform(0.5, 2.0);
            const double C2 = rng.sign() * std::sqrt(C) * rng.uniform(1.1, 2.0);
            return {family_maximal_elliptic(C, C2, C1, m, k, sign), RevolutionKind::EllipticType,
                    "C=" + short_real(C) + " C2=" + short_real(C2) + tail};
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

double max_arc_length_residual(const ProfileCurve& p, RevolutionKind kind) {
    double worst = 0.0;
    for (double u : grid_axis(p.u_min(), p.u_max(), 101, kDefaultMargin))
        worst = std::max(worst, std::abs(arc_length_residual(p, kind, u)));
    return worst;
}

void families_suite(std::vector<Check>& out, Rng& rng) {
    Collector col("families", out);
    struct Spec {
        Family family;
        const char* name;
        bool umbilic;
    };
    const Spec specs[] = {
        {Family::UmbilicHyperbolic, "umbilic-hyperbolic", true},
        {Family::MaximalHyperbolic, "maximal-hyperbolic", false},
        {Family::UmbilicElliptic, "umbilic-elliptic", true},
        {Family::MaximalElliptic, "maximal-elliptic", false},
    };
    for (const Spec& spec : specs) {
        std::vector<FamilyDraw> draws;
        for (int i = 0; i < kDraws; ++i) draws.push_back(draw_family(spec.family, rng));
        const std::string name = spec.name;

        col.add(name + " arc length", "profile is unit speed", 1e-9, Bound::AtMost, [&] {
            Worst w;
            for (const auto& d : draws)
                w.offer(max_arc_length_residual(d.profile, d.kind), [&] { return d.constants; });
            return w.result();
        });

        if (spec.umbilic) {
            col.add(name + " umbilicity |k1-k2|", "both branches umbilic everywhere", 1e-8, Bound::AtMost, [&] {
                Worst w;
                for (const auto& d : draws) {
                    for (const auto& pt : sample_grid(build_revolution(d.profile, d.kind), kGrid, kGrid)) {
                        const CurvatureReport rep = classify_jet(pt.jet, 1.0);
                        const double defect = std::max(rep.plus.k1 - rep.plus.k2, rep.minus.k1 - rep.minus.k2);
                        w.offer(defect, [&] { return d.constants + " " + at(pt.u, pt.v); });
                    }
                }
                return w.result();
            });
        } else {
            std::vector<std::vector<CurvatureReport>> reports;
            auto compute = [&] {
                if (!reports.empty()) return;
                for (const auto& d : draws) {
                    reports.emplace_back();
                    for (const auto& pt : sample_grid(build_revolution(d.profile, d.kind), kGrid, kGrid))
                        reports.back().push_back(classify_jet(pt.jet, 1.0));
                }
            };
            col.add(name + " |H_vec|", "mean curvature vector vanishes", 1e-8, Bound::AtMost, [&] {
                compute();
                Worst w;
                for (std::size_t i = 0; i < reports.size(); ++i)
                    for (const auto& rep : reports[i]) w.offer(rep.H_vec_norm, [&] { return draws[i].constants; });
                return w.result();
            });
            col.add(name + " |H+|, |H-|", "both branch mean curvatures vanish", 1e-8, Bound::AtMost, [&] {
                compute();
                Worst w;
                for (std::size_t i = 0; i < reports.size(); ++i)
                    for (const auto& rep : reports[i])
                        w.offer(std::max(std::abs(rep.plus.H), std::abs(rep.minus.H)),
                                [&] { return draws[i].constants; });
                return w.result();
            });
        }
    }

    col.add("umbilic-hyperbolic without 1/sqrt(1+C2^2), C2=1", "unnormalized constants break unit speed", 0.1,
            Bound::AtLeast, [&] {
                return Measured{max_arc_length_residual(family_umbilic_hyperbolic_unnormalized(1.0, 1.0),
                                                        RevolutionKind::HyperbolicType),
                                "C=1 C2=1 C1=0"};
            });
    col.add("umbilic-hyperbolic without 1/sqrt(1+C2^2), C2=0", "unnormalized constants are unit speed at C2=0",
            1e-9, Bound::AtMost, [&] {
                return Measured{max_arc_length_residual(family_umbilic_hyperbolic_unnormalized(1.0, 0.0),
                                                        RevolutionKind::HyperbolicType),
                                "C=1 C2=0 C1=0"};
            });
}

std::vector<NamedSurface> representative_families() {
    auto hyp = [](const ProfileCurve& p) { return build_revolution(p, RevolutionKind::HyperbolicType); };
    auto ell = [](const ProfileCurve& p) { return build_revolution(p, RevolutionKind::EllipticType); };
    return {
        {"umbilic-hyperbolic", hyp(family_umbilic_hyperbolic(1.0, 0.5, 0.2, 0.1, -0.3))},
        {"maximal-hyperbolic", hyp(family_maximal_hyperbolic(1.5, -0.7, 0.1))},
        {"umbilic-elliptic", ell(family_umbilic_elliptic(1.0, 1.5, -0.2))},
        {"maximal-elliptic", ell(family_maximal_elliptic(1.0, 1.6, 0.3))},
    };
}

// Bumps X2 and X3. Families with g = C2 f + k lie in a hyperplane, so a
// perturbation has to leave it to change the normal curvature.
Immersion perturbed(const Immersion& s, const char* x2_term, const char* x3_term) {
    auto c = s.components();
    c[1] = c[1] + parse(x2_term);
    c[2] = c[2] + parse(x3_term);
    return Immersion(c, s.domain(), s.margin());
}

void theorems_suite(std::vector<Check>& out, Rng& rng) {
    Collector col("theorems", out);

    for (int which = 0; which < samples::kLightlikeGraphCount; ++which) {
        const Immersion s = samples::lightlike_graph(which);
        const auto grid = sample_grid(s, kGrid, kGrid);
        const std::string name = "lightlike-graph-" + std::to_string(which + 1);

        // The branch with the smaller spread over the grid is the candidate constant one.
        std::array<double, 2> spread{0.0, 0.0};
        std::array<double, 2> max_k{0.0, 0.0};
        const LightconePair first = solve_lightcone_normals(grid.front().jet, 1.0);
        for (const auto& pt : grid) {
            const LightconePair pair = solve_lightcone_normals(pt.jet, 1.0);
            const CurvatureReport rep = classify_jet(pt.jet, 1.0);
            spread[0] = std::max(spread[0], (pair.plus - first.plus).euclidean_norm());
            spread[1] = std::max(spread[1], (pair.minus - first.minus).euclidean_norm());
            max_k[0] = std::max({max_k[0], std::abs(rep.plus.k1), std::abs(rep.plus.k2)});
            max_k[1] = std::max({max_k[1], std::abs(rep.minus.k1), std::abs(rep.minus.k2)});
        }
        const std::size_t b = spread[0] <= spread[1] ? 0 : 1;
        const std::string branch = b == 0 ? "branch +" : "branch -";
        const MVec4 constant = b == 0 ? first.plus : first.minus;

        col.add(name + " constant l_r", "graph over lightlike hyperplane has a constant l_r branch", 1e-9,
                Bound::AtMost, [&] { return Measured{spread[b], branch + " l=" + format_vector(constant)}; });
        col.add(name + " flat branch |k_i|", "the constant branch is flat", 1e-8, Bound::AtMost,
                [&] { return Measured{max_k[b], branch}; });

        std::vector<MVec4> cloud;
        for (const auto& pt : grid) cloud.push_back(pt.jet.X);
        col.add(name + " hyperplane fit rms", "surface lies in a hyperplane", 1e-9, Bound::AtMost, [&] {
            const HyperplaneFit fit = fit_hyperplane(cloud);
            return Measured{fit.rms_residual, "normal=" + format_vector(fit.plane.normal)};
        });
        col.add(name + " hyperplane lightlike", "the fitted hyperplane is lightlike (|<n,n>|)", 1e-9, Bound::AtMost,
                [&] {
                    const HyperplaneFit fit = fit_hyperplane(cloud);
                    const MVec4& n = fit.plane.normal;
                    return Measured{std::abs(inner(n, n)),
                                    std::string("type=") + to_string(hyperplane_character(fit.plane))};
                });
    }

    struct QuadricCase {
        const char* name;
        Immersion surface;
        QuadricKind kind;
    };
    const QuadricCase quadric_cases[] = {
        {"sphere in de Sitter", samples::unit_sphere_in_de_sitter(), QuadricKind::DeSitter},
        {"sphere in hyperbolic space", samples::sphere_in_hyperbolic_space(), QuadricKind::Hyperbolic},
    };
    for (const auto& qc : quadric_cases) {
        const auto grid = sample_grid(qc.surface, kGrid, kGrid);
        const std::string name = qc.name;
        col.add(name + " umbilicity |k1-k2|", "quadric cut by a hyperplane is umbilic on both branches", 1e-8,
                Bound::AtMost, [&] {
                    Worst w;
                    for (const auto& pt : grid) {
                        const CurvatureReport rep = classify_jet(pt.jet, 1.0);
                        w.offer(std::max(rep.plus.k1 - rep.plus.k2, rep.minus.k1 - rep.minus.k2),
                                [&] { return at(pt.u, pt.v); });
                    }
                    return w.result();
                });
        col.add(name + " quadric fit rms", "surface lies on the fitted quadric", 1e-9, Bound::AtMost, [&] {
            std::vector<MVec4> cloud;
            for (const auto& pt : grid) cloud.push_back(pt.jet.X);
            const QuadricFit fit = fit_quadric_sphere(cloud, qc.kind);
            return Measured{fit.rms_residual, "center=" + format_vector(fit.quadric.center) +
                                                  " R=" + short_real(fit.quadric.radius)};
        });
    }

    col.add("sphere in de Sitter parallel l_r", "l_r is parallel on both branches", 5e-6, Bound::AtMost, [&] {
        const Immersion s = samples::unit_sphere_in_de_sitter();
        const Domain d = s.sampling_domain();
        Worst w;
        for (double u : grid_axis(d.u_min, d.u_max, kCurvatureGrid, 0.0))
            for (double v : grid_axis(d.v_min, d.v_max, kCurvatureGrid, 0.0))
                for (Branch b : {Branch::Plus, Branch::Minus})
                    w.offer(parallel_defect(s, u, v, 1.0, b), [&] { return at(u, v); });
        return w.result();
    });

    auto max_normal_curvature = [](const Immersion& s) {
        const Domain d = s.sampling_domain();
        Worst w;
        for (double u : grid_axis(d.u_min, d.u_max, kCurvatureGrid, 0.0))
            for (double v : grid_axis(d.v_min, d.v_max, kCurvatureGrid, 0.0))
                w.offer(std::abs(normal_curvature(s, u, v)), [&] { return at(u, v); });
        return w.result();
    };
    for (const auto& fam : representative_families())
        col.add(fam.name + " |R-perp|", "totally umbilic or maximal revolution surface has R-perp = 0", 1e-4,
                Bound::AtMost, [&] { return max_normal_curvature(fam.surface); });

    const Immersion bent = perturbed(representative_families().front().surface, "0.1*u*v", "0.05*u^2");
    col.add("perturbed umbilic-hyperbolic |R-perp|", "a generic perturbation has R-perp != 0", 1e-3, Bound::AtLeast,
            [&] { return max_normal_curvature(bent); });
    col.add("twisted saddle |R-perp|", "non-commuting shape operators give R-perp != 0", 1e-3, Bound::AtLeast,
            [&] { return max_normal_curvature(samples::twisted_saddle()); });

    col.add("maximality equivalence", "|H_vec| = 0 iff H+ = H- = 0 (counterexamples + false positives)", 0.0,
            Bound::AtMost, [&] {
                constexpr double tol = 1e-8;
                struct Entry {
                    Immersion surface;
                    bool maximal;
                };
                std::vector<Entry> pool;
                for (const auto& fam : representative_families()) {
                    if (fam.name.starts_with("maximal")) pool.push_back({fam.surface, true});
                    pool.push_back({perturbed(fam.surface, "0.01*u*v", "0.005*v^2"), false});
                }
                int bad = 0, found_maximal = 0, expected_maximal = 0;
                std::string first;
                for (int i = 0; i < 200; ++i) {
                    const Entry& e = pool[static_cast<std::size_t>(i) % pool.size()];
                    const Domain d = e.surface.sampling_domain();
                    const double u = rng.uniform(d.u_min, d.u_max), v = rng.uniform(d.v_min, d.v_max);
                    const CurvatureReport rep = classify_point(e.surface, u, v, 1.0, tol);
                    const bool vec = rep.H_vec_norm <= tol;
                    const bool branches = std::abs(rep.plus.H) <= 10 * tol && std::abs(rep.minus.H) <= 10 * tol;
                    expected_maximal += e.maximal;
                    found_maximal += vec;
                    if (vec != branches || vec != e.maximal) {
                        if (bad++ == 0) first = " first at " + at(u, v);
                    }
                }
                return Measured{static_cast<double>(bad), "200 points, " + std::to_string(found_maximal) + "/" +
                                                              std::to_string(expected_maximal) + " maximal" + first};
            });
}

}  // namespace

bool Check::passed() const {
    return bound == Bound::AtMost ? measured <= tolerance : measured >= tolerance;
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); }));
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::Odes: return "odes";
        case Suite::ClosedForms: return "closed-forms";
        case Suite::Families: return "families";
        case Suite::Theorems: return "theorems";
        case Suite::All: return "all";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::Odes, Suite::ClosedForms, Suite::Families, Suite::Theorems, Suite::All})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

VerifyReport run_verify(Suite suite, std::uint64_t seed) {
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    // Each suite gets its own stream so that running one alone reproduces its
    // rows from `all`.
    auto stream = [seed](std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); };
    if (suite == Suite::Odes || suite == Suite::All) {
        Rng rng = stream(1);
        ode_suite(report.checks, rng);
    }
    if (suite == Suite::ClosedForms || suite == Suite::All) closed_forms_suite(report.checks);
    if (suite == Suite::Families || suite == Suite::All) {
        Rng rng = stream(2);
        families_suite(report.checks, rng);
    }
    if (suite == Suite::Theorems || suite == Suite::All) {
        Rng rng = stream(3);
        theorems_suite(report.checks, rng);
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::string out = "# lcgauss verify suite=" + std::string(to_string(report.suite)) +
                      " seed=" + std::to_string(report.seed) + "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-13s %-52s %-12s %-13s %-5s %s\n", "suite", "check", "measured", "tolerance",
                  "result", "statement [detail]");
    out += line;
    for (const Check& c : report.checks) {
        const std::string tol = std::string(c.bound == Bound::AtMost ? "<= " : ">= ") + fmt("%.1e", c.tolerance);
        std::snprintf(line, sizeof line, "%-13s %-52s %-12s %-13s %-6s", c.suite.c_str(), c.name.c_str(),
                      fmt("%.3e", c.measured).c_str(), tol.c_str(), c.passed() ? "pass" : "FAIL");
        out += line;
        out += c.anchor;
        if (!c.detail.empty()) out += " [" + c.detail + "]";
        out += "\n";
    }
    out += "# " + std::to_string(report.checks.size()) + " checks, " + std::to_string(report.failures()) +
           " failed\n";
    return out;
}

}  // namespace lcgauss
