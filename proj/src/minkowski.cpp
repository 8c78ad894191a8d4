#include "lcgauss/minkowski.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace lcgauss {

const char* to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Timelike: return "timelike";
        case CausalCharacter::Lightlike: return "lightlike";
    }
    return "?";
}

const char* to_string(QuadricKind k) {
    switch (k) {
        case QuadricKind::Hyperbolic: return "hyperbolic";
        case QuadricKind::DeSitter: return "de-sitter";
        case QuadricKind::Lightcone: return "lightcone";
    }
    return "?";
}

Quadric Quadric::hyperbolic(const MVec4& a, double R) {
    if (!(R > 0.0)) throw Error(ErrorKind::InvalidArgument, "hyperbolic radius must be positive");
    return {QuadricKind::Hyperbolic, a, R};
}

Quadric Quadric::de_sitter(const MVec4& a, double R) {
    if (!(R > 0.0)) throw Error(ErrorKind::InvalidArgument, "de Sitter radius must be positive");
    return {QuadricKind::DeSitter, a, R};
}

Quadric Quadric::lightcone(const MVec4& a) { return {QuadricKind::Lightcone, a, 0.0}; }

CausalCharacter causal_character(const MVec4& x, double tol) {
    const double m = x.max_abs();
    if (!(m > tol)) throw Error(ErrorKind::ZeroVector, "vector " + format_vector(x) + " is zero");
    const double q = inner(x, x);
    const double threshold = tol * m * m;
    if (q > threshold) return CausalCharacter::Spacelike;
    if (q < -threshold) return CausalCharacter::Timelike;
    return CausalCharacter::Lightlike;
}

CausalCharacter hyperplane_character(const Hyperplane& h, double tol) {
    switch (causal_character(h.normal, tol)) {
        case CausalCharacter::Timelike: return CausalCharacter::Spacelike;
        case CausalCharacter::Spacelike: return CausalCharacter::Timelike;
        case CausalCharacter::Lightlike: return CausalCharacter::Lightlike;
    }
    return CausalCharacter::Lightlike;
}

double quadric_residual(const Quadric& q, const MVec4& x) {
    const MVec4 d = x - q.center;
    double target = 0.0;
    if (q.kind == QuadricKind::Hyperbolic) target = -q.radius;
    if (q.kind == QuadricKind::DeSitter) target = q.radius;
    return inner(d, d) - target;
}

namespace {

double spacelike_ratio(const MVec4& c) {
    const double e2 = dot_euclidean(c, c);
    return e2 > 0.0 ? inner(c, c) / e2 : -1.0;
}

}  // namespace

NormalFrame orthonormal_normal_frame(const MVec4& n1, const MVec4& n2, double tol) {
    const double l1 = n1.euclidean_norm();
    const double l2 = n2.euclidean_norm();
    if (!(l1 > 0.0) || !(l2 > 0.0) || !n1.is_finite() || !n2.is_finite())
        throw Error(ErrorKind::DegeneratePlane, "normal-plane basis has a zero or non-finite vector");
    const MVec4 m1 = n1 / l1;
    const MVec4 m2 = n2 / l2;

    const double g11 = inner(m1, m1);
    const double g12 = inner(m1, m2);
    const double g22 = inner(m2, m2);
    const double gram_det = g11 * g22 - g12 * g12;
    if (!(gram_det < -tol))
        throw Error(ErrorKind::DegeneratePlane,
                    "span is not a timelike plane (Gram determinant " + format_real(gram_det) + ")");

    // Gram-Schmidt from whichever input is comfortably spacelike; otherwise
    // use the positive eigendirection of the Gram matrix.
    constexpr double kPreferInput = 0.1;
    MVec4 spacelike;
    if (spacelike_ratio(m1) > kPreferInput) {
        spacelike = m1;
    } else if (spacelike_ratio(m2) > kPreferInput) {
        spacelike = m2;
    } else {
        const double half_trace = 0.5 * (g11 + g22);
        const double radius = std::hypot(0.5 * (g11 - g22), g12);
        const double lambda = half_trace + radius;
        // eigenvector of [[g11,g12],[g12,g22]] for lambda
        double a = g12, b = lambda - g11;
        if (std::abs(a) + std::abs(b) < 1e-300) {
            a = lambda - g22;
            b = g12;
        }
        if (std::abs(a) + std::abs(b) < 1e-300) {
            a = 1.0;
            b = 0.0;
        }
        spacelike = a * m1 + b * m2;
    }
    const double s2 = inner(spacelike, spacelike);
    if (!(s2 > 0.0)) throw Error(ErrorKind::DegeneratePlane, "no spacelike direction found in plane");
    const MVec4 e3 = spacelike / std::sqrt(s2);

    const MVec4 w1 = m1 - inner(m1, e3) * e3;
    const MVec4 w2 = m2 - inner(m2, e3) * e3;
    const MVec4& w = inner(w1, w1) <= inner(w2, w2) ? w1 : w2;
    const double t2 = inner(w, w);
    if (!(t2 < 0.0)) throw Error(ErrorKind::DegeneratePlane, "no timelike direction found in plane");
    MVec4 e4 = w / std::sqrt(-t2);
    if (e4[3] < 0.0) e4 = -e4;
    return {e3, e4};
}

NormalFrame orthonormal_normal_frame(const MVec4& n1, const MVec4& n2, const MVec4& t1,
                                     const MVec4& t2, double tol) {
    NormalFrame frame = orthonormal_normal_frame(n1, n2, tol);
    if (det4(t1, t2, frame.e3, frame.e4) < 0.0) frame.e3 = -frame.e3;
    return frame;
}

double det4(const MVec4& a, const MVec4& b, const MVec4& c, const MVec4& d) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
        m(i, 0) = a[i];
        m(i, 1) = b[i];
        m(i, 2) = c[i];
        m(i, 3) = d[i];
    }
    return m.determinant();
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_vector(const MVec4& v) {
    return format_real(v[0]) + "," + format_real(v[1]) + "," + format_real(v[2]) + "," +
           format_real(v[3]);
}

MVec4 parse_vector(std::string_view text) {
    MVec4 out;
    std::size_t component = 0;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
            field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
            field.remove_suffix(1);
        if (component >= 4)
            throw Error(ErrorKind::ParseError, "expected exactly 4 components in '" + std::string(text) + "'");
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size() ||
            !std::isfinite(value))
            throw Error(ErrorKind::ParseError, "invalid component '" + std::string(field) + "' at offset " +
                                                   std::to_string(pos));
        out[component++] = value;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (component != 4)
        throw Error(ErrorKind::ParseError, "expected exactly 4 components in '" + std::string(text) + "'");
    return out;
}

}  // namespace lcgauss
