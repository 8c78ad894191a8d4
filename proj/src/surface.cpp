#include "lcgauss/surface.hpp"

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <map>
#include <optional>

namespace lcgauss {

namespace {

MVec4 eval4(const std::array<Expr, 4>& e, double u, double v) {
    return {e[0].eval(u, v), e[1].eval(u, v), e[2].eval(u, v), e[3].eval(u, v)};
}

std::array<Expr, 4> derive4(const std::array<Expr, 4>& e, Var var) {
    return {differentiate(e[0], var), differentiate(e[1], var), differentiate(e[2], var),
            differentiate(e[3], var)};
}

void check_domain(const Domain& d, double margin) {
    if (!(d.u_max > d.u_min) || !(d.v_max > d.v_min) || !std::isfinite(d.u_min) || !std::isfinite(d.u_max) ||
        !std::isfinite(d.v_min) || !std::isfinite(d.v_max))
        throw Error(ErrorKind::InvalidArgument, "domain rectangle must satisfy u_min < u_max and v_min < v_max");
    if (!(margin >= 0.0 && margin < 0.5))
        throw Error(ErrorKind::InvalidArgument, "margin must lie in [0, 0.5)");
}

}  // namespace

Immersion::Immersion(std::array<Expr, 4> components, Domain domain, double margin)
    : x_(std::move(components)), domain_(domain), margin_(margin) {
    check_domain(domain_, margin_);
    xu_ = derive4(x_, Var::U);
    xv_ = derive4(x_, Var::V);
    xuu_ = derive4(xu_, Var::U);
    xuv_ = derive4(xu_, Var::V);
    xvv_ = derive4(xv_, Var::V);
}

Immersion Immersion::from_strings(const std::array<std::string, 4>& components, Domain domain, double margin) {
    return Immersion({parse(components[0]), parse(components[1]), parse(components[2]), parse(components[3])},
                     domain, margin);
}

Domain Immersion::sampling_domain() const {
    const double du = margin_ * domain_.u_extent();
    const double dv = margin_ * domain_.v_extent();
    return {domain_.u_min + du, domain_.u_max - du, domain_.v_min + dv, domain_.v_max - dv};
}

Immersion Immersion::with_domain(Domain domain, double margin) const {
    check_domain(domain, margin);
    Immersion copy = *this;
    copy.domain_ = domain;
    copy.margin_ = margin;
    return copy;
}

SurfaceJet Immersion::jet(double u, double v) const {
    SurfaceJet j;
    j.u = u;
    j.v = v;
    j.X = eval4(x_, u, v);
    j.Xu = eval4(xu_, u, v);
    j.Xv = eval4(xv_, u, v);
    j.Xuu = eval4(xuu_, u, v);
    j.Xuv = eval4(xuv_, u, v);
    j.Xvv = eval4(xvv_, u, v);
    return j;
}

MVec4 Immersion::position(double u, double v) const { return eval4(x_, u, v); }

FirstForm first_form(const SurfaceJet& j, double tol) {
    FirstForm g{inner(j.Xu, j.Xu), inner(j.Xu, j.Xv), inner(j.Xv, j.Xv)};
    const double scale_u = dot_euclidean(j.Xu, j.Xu);
    const double scale_v = dot_euclidean(j.Xv, j.Xv);
    if (!(g.g11 > tol * scale_u) || !(g.g22 > tol * scale_v) || !(g.det() > tol * scale_u * scale_v))
        throw Error(ErrorKind::NotSpacelike, "first fundamental form not positive definite at (u,v)=(" +
                                                 format_real(j.u) + "," + format_real(j.v) + "): g11=" +
                                                 format_real(g.g11) + " g12=" + format_real(g.g12) +
                                                 " g22=" + format_real(g.g22));
    return g;
}

std::vector<double> grid_axis(double lo, double hi, int n, double margin) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "grid size must be at least 2");
    const double trim = margin * (hi - lo);
    const double a = lo + trim;
    const double b = hi - trim;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    out.back() = b;
    return out;
}

std::vector<GridPoint> sample_grid(const Immersion& s, int nu, int nv) {
    const Domain& d = s.domain();
    const auto us = grid_axis(d.u_min, d.u_max, nu, s.margin());
    const auto vs = grid_axis(d.v_min, d.v_max, nv, s.margin());
    std::vector<GridPoint> out;
    out.reserve(us.size() * vs.size());
    for (double u : us) {
        for (double v : vs) {
            try {
                out.push_back({u, v, s.jet(u, v)});
            } catch (const Error& e) {
                throw Error(e.kind(), "at grid point (u,v)=(" + format_real(u) + "," + format_real(v) +
                                          "): " + e.what());
            }
        }
    }
    return out;
}

HyperplaneFit fit_hyperplane(std::span<const MVec4> points) {
    if (points.size() < 5) throw Error(ErrorKind::DegenerateCloud, "hyperplane fit needs at least 5 points");
    Eigen::Vector4d centroid = Eigen::Vector4d::Zero();
    for (const auto& p : points) centroid += Eigen::Vector4d(p[0], p[1], p[2], p[3]);
    centroid /= static_cast<double>(points.size());

    Eigen::MatrixXd centered(points.size(), 4);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (int c = 0; c < 4; ++c) centered(static_cast<Eigen::Index>(i), c) = points[i][c] - centroid(c);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 1e-12 * std::max(1.0, centroid.norm())))
        throw Error(ErrorKind::DegenerateCloud, "all points coincide");

    Eigen::Vector4d n = svd.matrixV().col(3);
    Eigen::Index largest = 0;
    for (Eigen::Index i = 1; i < 4; ++i)
        if (std::abs(n(i)) > std::abs(n(largest)) * (1.0 + 1e-12)) largest = i;
    if (n(largest) < 0.0) n = -n;

    const double offset = n.dot(centroid);
    double sum_sq = 0.0;
    for (const auto& p : points) {
        const double r = n.dot(Eigen::Vector4d(p[0], p[1], p[2], p[3])) - offset;
        sum_sq += r * r;
    }
    HyperplaneFit fit;
    fit.plane.normal = lower(MVec4(n(0), n(1), n(2), n(3)));
    fit.plane.offset = offset;
    fit.rms_residual = std::sqrt(sum_sq / static_cast<double>(points.size()));
    return fit;
}

QuadricFit fit_quadric_sphere(std::span<const MVec4> points, QuadricKind kind) {
    if (kind == QuadricKind::Lightcone)
        throw Error(ErrorKind::InvalidArgument, "sphere fit supports Hyperbolic and DeSitter kinds only");
    if (points.size() < 6) throw Error(ErrorKind::DegenerateCloud, "quadric fit needs at least 6 points");

    // <x,x> = 2<x,a> + d  with  d = s*R - <a,a>, s = +1 (de Sitter) or -1 (hyperbolic).
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd A(n, 5);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const MVec4& p = points[static_cast<std::size_t>(i)];
        A(i, 0) = 2.0 * p[0];
        A(i, 1) = 2.0 * p[1];
        A(i, 2) = 2.0 * p[2];
        A(i, 3) = -2.0 * p[3];
        A(i, 4) = 1.0;
        rhs(i) = inner(p, p);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
    cod.setThreshold(1e-10);
    if (cod.rank() < 2) throw Error(ErrorKind::DegenerateCloud, "point cloud does not constrain a quadric");
    const Eigen::VectorXd sol = cod.solve(rhs);

    const MVec4 center(sol(0), sol(1), sol(2), sol(3));
    const double sign = kind == QuadricKind::DeSitter ? 1.0 : -1.0;
    const double radius = sign * (sol(4) + inner(center, center));
    if (!(radius > 0.0))
        throw Error(ErrorKind::DegenerateCloud, std::string("points do not lie on a ") + to_string(kind) +
                                                    " quadric (fitted radius " + format_real(radius) + ")");
    QuadricFit fit;
    fit.quadric = {kind, center, radius};
    double sum_sq = 0.0;
    for (const auto& p : points) {
        const double r = quadric_residual(fit.quadric, p);
        sum_sq += r * r;
    }
    fit.rms_residual = std::sqrt(sum_sq / static_cast<double>(points.size()));
    return fit;
}

// ---------------------------------------------------------------------------
// Surface definition files

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view key, std::string_view text) {
    double value = 0.0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        // Allow expressions such as "2*pi" for bounds.
        try {
            const Expr e = parse(text);
            if (e.depends_on(Var::U) || e.depends_on(Var::V)) throw Error(ErrorKind::ParseError, "");
            return e.eval(0.0, 0.0);
        } catch (const Error&) {
            throw Error(ErrorKind::ParseError,
                        "value of '" + std::string(key) + "' is not a number: '" + std::string(text) + "'");
        }
    }
    return value;
}

}  // namespace

Immersion parse_surface_definition(std::string_view text) {
    std::map<std::string, std::string, std::less<>> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        // '#' starts a comment unless inside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        static const char* kKeys[] = {"X1", "X2", "X3", "X4", "u_min", "u_max", "v_min", "v_max", "margin"};
        bool known = false;
        for (const char* k : kKeys) known = known || key == k;
        if (!known) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (values.count(key))
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        values.emplace(key, std::string(value));
    }
    auto require = [&](const char* key) -> const std::string& {
        auto it = values.find(key);
        if (it == values.end()) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
        return it->second;
    };
    Domain d{parse_number("u_min", require("u_min")), parse_number("u_max", require("u_max")),
             parse_number("v_min", require("v_min")), parse_number("v_max", require("v_max"))};
    double margin = kDefaultMargin;
    if (auto it = values.find("margin"); it != values.end()) margin = parse_number("margin", it->second);
    return Immersion::from_strings({require("X1"), require("X2"), require("X3"), require("X4")}, d, margin);
}

std::string format_surface_definition(const Immersion& s) {
    std::string out;
    for (int i = 0; i < 4; ++i)
        out += "X" + std::to_string(i + 1) + " = \"" + s.components()[static_cast<std::size_t>(i)].str() + "\"\n";
    const Domain& d = s.domain();
    out += "u_min = " + format_real(d.u_min) + "\n";
    out += "u_max = " + format_real(d.u_max) + "\n";
    out += "v_min = " + format_real(d.v_min) + "\n";
    out += "v_max = " + format_real(d.v_max) + "\n";
    out += "margin = " + format_real(s.margin()) + "\n";
    return out;
}

}  // namespace lcgauss
