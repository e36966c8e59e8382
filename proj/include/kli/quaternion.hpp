#pragma once

#include <iosfwd>

namespace kli {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v);

/// Quaternion w + xi + yj + zk, stored scalar-first.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 vec() const { return {x, y, z}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

/// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion multiply(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return multiply(a, b); }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Euclidean inner product in R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

double norm(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A quaternion of norm one: a rotation, or equivalently a point on S^3.
///
/// Instances only come out of the checked factories below, so every value
/// satisfies |norm - 1| <= 1e-9.
class UnitQuaternion {
public:
    /// Inputs whose norm deviates from one by less than this are renormalized.
    static constexpr double kAcceptTolerance = 1e-6;

    UnitQuaternion() = default;  // identity

    /// Accepts a nearly-unit quaternion and renormalizes it. Throws
    /// NearZeroQuaternion for a vanishing input and NonUnitQuaternion when the
    /// norm is off by kAcceptTolerance or more.
    static UnitQuaternion from(const Quaternion& q);
    static UnitQuaternion from(double w, double x, double y, double z) { return from({w, x, y, z}); }

    static UnitQuaternion identity() { return {}; }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

    double w() const { return q_.w; }
    double x() const { return q_.x; }
    double y() const { return q_.y; }
    double z() const { return q_.z; }

    UnitQuaternion operator-() const { return UnitQuaternion(-q_); }

    friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;

private:
    explicit UnitQuaternion(const Quaternion& q) : q_(q) {}
    friend UnitQuaternion normalize(const Quaternion& q);

    Quaternion q_{1.0, 0.0, 0.0, 0.0};
};

/// q / |q|. Throws NearZeroQuaternion when |q| <= 1e-12.
UnitQuaternion normalize(const Quaternion& q);

/// Product of two rotations, renormalized to absorb rounding drift.
UnitQuaternion compose(const UnitQuaternion& a, const UnitQuaternion& b);

/// q^t through the polar form: cos(t*theta/2) + U sin(t*theta/2).
/// q = -1 has no defined axis; it is treated as a 2*pi turn about (1, 0, 0).
UnitQuaternion power(const UnitQuaternion& q, double t);

struct AxisAngle {
    Vec3 axis{1.0, 0.0, 0.0};
    double angle = 0.0;  // radians, [0, 2*pi)
};

/// Polar form. Both q = 1 and q = -1 (a full turn) map to angle 0 about the
/// conventional axis (1, 0, 0).
AxisAngle to_axis_angle(const UnitQuaternion& q);
UnitQuaternion from_axis_angle(const AxisAngle& aa);

/// Vector part of q (0, v) conj(q).
Vec3 rotate_vector(const UnitQuaternion& q, const Vec3& v);

}  // namespace kli
