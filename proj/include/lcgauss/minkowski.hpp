#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "lcgauss/error.hpp"

namespace lcgauss {

/// A vector of R^4_1. The fourth component is the time coordinate and the
/// bilinear form has signature (+,+,+,-).
struct MVec4 {
    std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};

    constexpr MVec4() = default;
    constexpr MVec4(double x1, double x2, double x3, double x4) : x{x1, x2, x3, x4} {}

    constexpr double& operator[](std::size_t i) { return x[i]; }
    constexpr double operator[](std::size_t i) const { return x[i]; }

    constexpr MVec4& operator+=(const MVec4& o) {
        for (std::size_t i = 0; i < 4; ++i) x[i] += o.x[i];
        return *this;
    }
    constexpr MVec4& operator-=(const MVec4& o) {
        for (std::size_t i = 0; i < 4; ++i) x[i] -= o.x[i];
        return *this;
    }
    constexpr MVec4& operator*=(double s) {
        for (auto& c : x) c *= s;
        return *this;
    }

    friend constexpr MVec4 operator+(MVec4 a, const MVec4& b) { return a += b; }
    friend constexpr MVec4 operator-(MVec4 a, const MVec4& b) { return a -= b; }
    friend constexpr MVec4 operator*(MVec4 a, double s) { return a *= s; }
    friend constexpr MVec4 operator*(double s, MVec4 a) { return a *= s; }
    friend constexpr MVec4 operator/(MVec4 a, double s) { return a *= (1.0 / s); }
    friend constexpr MVec4 operator-(MVec4 a) { return a *= -1.0; }
    friend constexpr bool operator==(const MVec4&, const MVec4&) = default;

    bool is_finite() const {
        for (double c : x)
            if (!std::isfinite(c)) return false;
        return true;
    }
    double max_abs() const {
        double m = 0.0;
        for (double c : x) m = std::max(m, std::abs(c));
        return m;
    }
    /// Plain Euclidean length of the coordinate tuple.
    double euclidean_norm() const {
        return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    }
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

const char* to_string(CausalCharacter c);

/// Relative tolerance for lightlike detection; scaled by the squared largest component.
inline constexpr double kDefaultCausalTol = 1e-10;

struct Hyperplane {
    MVec4 normal;  // pseudo normal: points x with inner(x, normal) == offset
    double offset = 0.0;
};

enum class QuadricKind { Hyperbolic, DeSitter, Lightcone };

const char* to_string(QuadricKind k);

/// H^3(a,R): <x-a,x-a> = -R, S^3_1(a,R): <x-a,x-a> = R, LC^3(a): <x-a,x-a> = 0.
/// R is used linearly (not squared).
struct Quadric {
    QuadricKind kind = QuadricKind::Lightcone;
    MVec4 center;
    double radius = 0.0;

    static Quadric hyperbolic(const MVec4& a, double R);
    static Quadric de_sitter(const MVec4& a, double R);
    static Quadric lightcone(const MVec4& a);
};

struct NormalFrame {
    MVec4 e3;  // <e3,e3> = 1
    MVec4 e4;  // <e4,e4> = -1, future pointing
};

constexpr double inner(const MVec4& a, const MVec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

inline double norm(const MVec4& a) { return std::sqrt(std::abs(inner(a, a))); }

/// Euclidean dot product of the coordinate tuples.
constexpr double dot_euclidean(const MVec4& a, const MVec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Index-lowered copy: flips the sign of the time component so that
/// inner(a, b) == dot_euclidean(a, lower(b)).
constexpr MVec4 lower(const MVec4& a) { return {a[0], a[1], a[2], -a[3]}; }

/// Throws ZeroVector when every component is below `tol` in magnitude.
CausalCharacter causal_character(const MVec4& x, double tol = kDefaultCausalTol);

/// Causal type of HP(n,c): Spacelike when n is timelike, Timelike when n is
/// spacelike, Lightlike when n is lightlike.
CausalCharacter hyperplane_character(const Hyperplane& h, double tol = kDefaultCausalTol);

double quadric_residual(const Quadric& q, const MVec4& x);

/// Minkowski-orthonormal basis of the plane spanned by n1, n2. Throws
/// DegeneratePlane unless the induced form on the span has signature (+,-).
NormalFrame orthonormal_normal_frame(const MVec4& n1, const MVec4& n2, double tol = 1e-12);

/// Same as above, additionally flipping e3 so that det[t1, t2, e3, e4] > 0.
NormalFrame orthonormal_normal_frame(const MVec4& n1, const MVec4& n2, const MVec4& t1,
                                     const MVec4& t2, double tol = 1e-12);

double det4(const MVec4& a, const MVec4& b, const MVec4& c, const MVec4& d);

/// "x1,x2,x3,x4" with 17 significant digits.
std::string format_vector(const MVec4& v);

/// Parses "x1,x2,x3,x4"; throws ParseError on malformed input or non-finite values.
MVec4 parse_vector(std::string_view text);

/// %.17g formatting shared by every serializer.
std::string format_real(double value);

}  // namespace lcgauss
