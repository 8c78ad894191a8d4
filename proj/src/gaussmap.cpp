#include "lcgauss/gaussmap.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>

namespace lcgauss {

namespace {

std::string at_point(const SurfaceJet& j) {
    return " at (u,v)=(" + format_real(j.u) + "," + format_real(j.v) + ")";
}

Eigen::Matrix2d to_matrix(const FirstForm& g) {
    Eigen::Matrix2d m;
    m << g.g11, g.g12, g.g12, g.g22;
    return m;
}

Eigen::Matrix2d to_matrix(const SecondForm& b) {
    Eigen::Matrix2d m;
    m << b.b11, b.b12, b.b12, b.b22;
    return m;
}

/// Symmetric representative L^{-1} B L^{-T} of g^{-1} B in an orthonormal tangent frame.
Eigen::Matrix2d orthonormal_representative(const FirstForm& g, const Eigen::Matrix2d& b) {
    const double l11 = std::sqrt(g.g11);
    const double l21 = g.g12 / l11;
    const double l22 = std::sqrt(g.g22 - l21 * l21);
    Eigen::Matrix2d linv;
    linv << 1.0 / l11, 0.0, -l21 / (l11 * l22), 1.0 / l22;
    Eigen::Matrix2d s = linv * b * linv.transpose();
    const double off = 0.5 * (s(0, 1) + s(1, 0));
    s(0, 1) = off;
    s(1, 0) = off;
    return s;
}

double half_trace(const FirstForm& g, double b11, double b12, double b22) {
    return 0.5 * (g.g22 * b11 - 2.0 * g.g12 * b12 + g.g11 * b22) / g.det();
}

/// Minkowski projection onto the normal plane at j.
MVec4 normal_projection(const SurfaceJet& j, const FirstForm& g, const MVec4& y) {
    const double a = inner(y, j.Xu);
    const double b = inner(y, j.Xv);
    const double det = g.det();
    const double cu = (g.g22 * a - g.g12 * b) / det;
    const double cv = (g.g11 * b - g.g12 * a) / det;
    return y - cu * j.Xu - cv * j.Xv;
}

LightconePair lightcone_at(const Immersion& s, double u, double v, double r) {
    return solve_lightcone_normals(s.jet(u, v), r);
}

struct Steps {
    double hu;
    double hv;
};

Steps steps_for(const Immersion& s, double step) {
    if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
    return {step * s.domain().u_extent(), step * s.domain().v_extent()};
}

}  // namespace

NormalBasis normal_plane_basis(const SurfaceJet& j) {
    const MVec4 a = lower(j.Xu);
    const MVec4 b = lower(j.Xv);
    std::size_t p = 0, q = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = i + 1; k < 4; ++k) {
            const double minor = std::abs(a[i] * b[k] - a[k] * b[i]);
            if (minor > best) {
                best = minor;
                p = i;
                q = k;
            }
        }
    }
    const double scale = a.euclidean_norm() * b.euclidean_norm();
    if (!(best > 1e-14 * scale) || !(scale > 0.0))
        throw Error(ErrorKind::NotSpacelike, "tangent vectors are linearly dependent" + at_point(j));

    std::array<std::size_t, 2> free{};
    std::size_t nf = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != p && i != q) free[nf++] = i;

    const double det = a[p] * b[q] - a[q] * b[p];
    auto null_vector = [&](std::size_t f) {
        // a[p] x_p + a[q] x_q = -a[f],  b[p] x_p + b[q] x_q = -b[f]
        MVec4 n;
        n[f] = 1.0;
        n[p] = (-a[f] * b[q] + b[f] * a[q]) / det;
        n[q] = (-b[f] * a[p] + a[f] * b[p]) / det;
        return n;
    };
    return {null_vector(free[0]), null_vector(free[1])};
}

NormalFrame normal_frame(const SurfaceJet& j) {
    const NormalBasis basis = normal_plane_basis(j);
    return orthonormal_normal_frame(basis.n1, basis.n2, j.Xu, j.Xv);
}

LightconePair solve_lightcone_normals(const SurfaceJet& j, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
    first_form(j);
    const NormalBasis basis = normal_plane_basis(j);

    // Eliminate the coefficient whose basis vector has the larger time component:
    // l = alpha * w + p with w_4 = 0 and p_4 = r.
    const bool eliminate_second = std::abs(basis.n2[3]) >= std::abs(basis.n1[3]);
    const MVec4& keep = eliminate_second ? basis.n1 : basis.n2;
    const MVec4& elim = eliminate_second ? basis.n2 : basis.n1;
    if (!(std::abs(elim[3]) > 0.0))
        throw Error(ErrorKind::DegenerateNormalPlane, "normal plane has no timelike direction" + at_point(j));
    MVec4 w = keep - (keep[3] / elim[3]) * elim;
    MVec4 p = (r / elim[3]) * elim;
    w[3] = 0.0;
    p[3] = r;

    const double qa = inner(w, w);
    const double qb = 2.0 * inner(w, p);
    const double qc = inner(p, p);
    const double disc = qb * qb - 4.0 * qa * qc;
    if (!(qa > 0.0) || !(disc > 1e-14 * (qb * qb + 4.0 * std::abs(qa * qc))))
        throw Error(ErrorKind::DegenerateNormalPlane,
                    "lightcone quadratic has no distinct real roots (discriminant " + format_real(disc) + ")" +
                        at_point(j));
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    const double alpha1 = q / qa;
    const double alpha2 = qc / q;

    MVec4 l1 = alpha1 * w + p;
    MVec4 l2 = alpha2 * w + p;
    l1[3] = r;
    l2[3] = r;
    if (det4(j.Xu, j.Xv, l1, l2) > 0.0) return {l1, l2, r};
    return {l2, l1, r};
}

SecondForm second_form(const SurfaceJet& j, const MVec4& l, Branch branch, double r) {
    return {inner(j.Xuu, l), inner(j.Xuv, l), inner(j.Xvv, l), branch, r};
}

SecondForm second_form(const SurfaceJet& j, const LightconePair& pair, Branch branch) {
    return second_form(j, pair[branch], branch, pair.r);
}

PrincipalCurvatures principal_curvatures(const FirstForm& g, const SecondForm& b) {
    if (!(g.g11 > 0.0) || !(g.det() > 0.0))
        throw Error(ErrorKind::NotSpacelike, "first fundamental form is not positive definite");
    const Eigen::Matrix2d s = orthonormal_representative(g, to_matrix(b));
    const double mean = 0.5 * (s(0, 0) + s(1, 1));
    const double radius = std::hypot(0.5 * (s(0, 0) - s(1, 1)), s(0, 1));
    return {mean + radius, mean - radius};
}

double gauss_kronecker(const FirstForm& g, const SecondForm& b) {
    return (b.b11 * b.b22 - b.b12 * b.b12) / g.det();
}

Eigen::Matrix2d weingarten_matrix(const FirstForm& g, const SecondForm& b) {
    return to_matrix(g).inverse() * to_matrix(b);
}

Eigen::Matrix2d weingarten_by_differentiation(const Immersion& s, double u, double v, double r, Branch branch,
                                              double step) {
    const Steps h = steps_for(s, step);
    const SurfaceJet j = s.jet(u, v);
    const FirstForm g = first_form(j);
    const MVec4 dl_u = (lightcone_at(s, u + h.hu, v, r)[branch] - lightcone_at(s, u - h.hu, v, r)[branch]) /
                       (2.0 * h.hu);
    const MVec4 dl_v = (lightcone_at(s, u, v + h.hv, r)[branch] - lightcone_at(s, u, v - h.hv, r)[branch]) /
                       (2.0 * h.hv);
    Eigen::Matrix2d m;
    m << inner(j.Xu, dl_u), inner(j.Xu, dl_v), inner(j.Xv, dl_u), inner(j.Xv, dl_v);
    return -(to_matrix(g).inverse() * m);
}

MVec4 mean_curvature_vector(const SurfaceJet& j) {
    const FirstForm g = first_form(j);
    const NormalFrame frame = normal_frame(j);
    const double h3 = half_trace(g, inner(j.Xuu, frame.e3), inner(j.Xuv, frame.e3), inner(j.Xvv, frame.e3));
    const double h4 = half_trace(g, inner(j.Xuu, frame.e4), inner(j.Xuv, frame.e4), inner(j.Xvv, frame.e4));
    return h3 * frame.e3 - h4 * frame.e4;
}

CurvatureReport classify_jet(const SurfaceJet& j, double r, double tol) {
    const FirstForm g = first_form(j);
    const LightconePair pair = solve_lightcone_normals(j, r);
    CurvatureReport report;
    report.tol = tol;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const SecondForm b = second_form(j, pair, branch);
        const PrincipalCurvatures k = principal_curvatures(g, b);
        BranchCurvature& out = branch == Branch::Plus ? report.plus : report.minus;
        out.k1 = k.k1;
        out.k2 = k.k2;
        out.H = 0.5 * (k.k1 + k.k2);
        out.K = gauss_kronecker(g, b);
    }
    const MVec4 H = mean_curvature_vector(j);
    report.H_vec_norm_sq = inner(H, H);
    report.H_vec_norm = H.euclidean_norm();

    auto umbilic = [tol](const BranchCurvature& c) {
        return std::abs(c.k1 - c.k2) <= tol * (1.0 + std::abs(c.k1) + std::abs(c.k2));
    };
    auto flat = [tol](const BranchCurvature& c) { return std::abs(c.k1) <= tol && std::abs(c.k2) <= tol; };
    report.flags.umbilic_plus = umbilic(report.plus);
    report.flags.umbilic_minus = umbilic(report.minus);
    report.flags.flat_plus = report.flags.umbilic_plus && flat(report.plus);
    report.flags.flat_minus = report.flags.umbilic_minus && flat(report.minus);
    report.flags.maximal = std::abs(report.plus.H) <= tol && std::abs(report.minus.H) <= tol;
    return report;
}

CurvatureReport classify_point(const Immersion& s, double u, double v, double r, double tol) {
    return classify_jet(s.jet(u, v), r, tol);
}

double parallel_defect(const Immersion& s, double u, double v, double r, Branch branch, double step) {
    const Steps h = steps_for(s, step);
    const SurfaceJet j = s.jet(u, v);
    const FirstForm g = first_form(j);
    const NormalFrame frame = normal_frame(j);
    const MVec4 dl_u = (lightcone_at(s, u + h.hu, v, r)[branch] - lightcone_at(s, u - h.hu, v, r)[branch]) /
                       (2.0 * h.hu);
    const MVec4 dl_v = (lightcone_at(s, u, v + h.hv, r)[branch] - lightcone_at(s, u, v - h.hv, r)[branch]) /
                       (2.0 * h.hv);
    auto normal_size = [&](const MVec4& d, double gii) {
        return std::hypot(inner(d, frame.e3), inner(d, frame.e4)) / std::sqrt(gii);
    };
    return std::max(normal_size(dl_u, g.g11), normal_size(dl_v, g.g22));
}

double normal_curvature(const Immersion& s, double u, double v, double step) {
    const Steps h = steps_for(s, step);
    const SurfaceJet center = s.jet(u, v);
    const FirstForm g0 = first_form(center);
    const NormalFrame reference = normal_frame(center);

    // Smooth local frame: project the reference frame into each nearby normal plane.
    auto frame_at = [&](double uu, double vv) {
        const SurfaceJet j = s.jet(uu, vv);
        const FirstForm g = first_form(j);
        MVec4 e4 = normal_projection(j, g, reference.e4);
        const double t = inner(e4, e4);
        if (!(t < 0.0)) throw Error(ErrorKind::DegeneratePlane, "projected time direction lost" + at_point(j));
        e4 = e4 / std::sqrt(-t);
        MVec4 e3 = normal_projection(j, g, reference.e3);
        e3 = e3 + inner(e3, e4) * e4;
        e3 = e3 / std::sqrt(inner(e3, e3));
        return NormalFrame{e3, e4};
    };

    // omega_v at (uu, v) and omega_u at (u, vv), with omega_i = <d_i e3, e4>.
    auto omega_v = [&](double uu) {
        const MVec4 de3 = (frame_at(uu, v + h.hv).e3 - frame_at(uu, v - h.hv).e3) / (2.0 * h.hv);
        return inner(de3, frame_at(uu, v).e4);
    };
    auto omega_u = [&](double vv) {
        const MVec4 de3 = (frame_at(u + h.hu, vv).e3 - frame_at(u - h.hu, vv).e3) / (2.0 * h.hu);
        return inner(de3, frame_at(u, vv).e4);
    };
    const double curl =
        (omega_v(u + h.hu) - omega_v(u - h.hu)) / (2.0 * h.hu) - (omega_u(v + h.hv) - omega_u(v - h.hv)) / (2.0 * h.hv);
    return curl / std::sqrt(g0.det());
}

double normal_curvature_from_shape_operators(const SurfaceJet& j) {
    const FirstForm g = first_form(j);
    const NormalFrame frame = normal_frame(j);
    auto shape = [&](const MVec4& e) {
        Eigen::Matrix2d b;
        b << inner(j.Xuu, e), inner(j.Xuv, e), inner(j.Xuv, e), inner(j.Xvv, e);
        return orthonormal_representative(g, b);
    };
    const Eigen::Matrix2d a3 = shape(frame.e3);
    const Eigen::Matrix2d a4 = shape(frame.e4);
    const Eigen::Matrix2d commutator = a3 * a4 - a4 * a3;
    return commutator(1, 0);  // <[A3, A4] E1, E2>
}

}  // namespace lcgauss
