#include "kli/quaternion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "kli/errors.hpp"

namespace kli {

namespace {

constexpr double kNearZeroNorm = 1e-12;

std::string describe(const Quaternion& q) {
    std::ostringstream os;
    os.precision(17);
    os << q;
    return os.str();
}

}  // namespace

double norm(const Vec3& v) { return std::hypot(v.x, v.y, v.z); }

double norm(const Quaternion& q) {
    return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

UnitQuaternion normalize(const Quaternion& q) {
    const double n = norm(q);
    if (!(n > kNearZeroNorm)) {
        throw NearZeroQuaternion("quaternion " + describe(q) + " is too close to zero to normalize");
    }
    return UnitQuaternion((1.0 / n) * q);
}

UnitQuaternion UnitQuaternion::from(const Quaternion& q) {
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.z)) {
        throw NonUnitQuaternion("quaternion " + describe(q) + " has non-finite components");
    }
    const double n = norm(q);
    if (n <= kNearZeroNorm) {
        throw NearZeroQuaternion("quaternion " + describe(q) + " is too close to zero");
    }
    if (std::abs(n - 1.0) >= kAcceptTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "quaternion " << q << " is not unit (norm " << n << ")";
        throw NonUnitQuaternion(os.str());
    }
    // Values that are already unit to rounding are kept bit for bit.
    if (std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        return UnitQuaternion(q);
    }
    return normalize(q);
}

UnitQuaternion compose(const UnitQuaternion& a, const UnitQuaternion& b) {
    return normalize(multiply(a, b));
}

UnitQuaternion power(const UnitQuaternion& q, double t) {
    const Vec3 v = q.value().vec();
    const double vn = norm(v);
    Vec3 axis{1.0, 0.0, 0.0};
    if (vn > std::numeric_limits<double>::min()) {
        axis = (1.0 / vn) * v;
    }
    // Half-angle in [0, pi].
    const double half = std::atan2(vn, q.w());
    const double s = std::sin(t * half);
    return normalize({std::cos(t * half), s * axis.x, s * axis.y, s * axis.z});
}

AxisAngle to_axis_angle(const UnitQuaternion& q) {
    const Vec3 v = q.value().vec();
    const double vn = norm(v);
    if (vn <= std::numeric_limits<double>::min()) {
        return {};
    }
    return {(1.0 / vn) * v, 2.0 * std::atan2(vn, q.w())};
}

UnitQuaternion from_axis_angle(const AxisAngle& aa) {
    const double an = norm(aa.axis);
    if (!(an > kNearZeroNorm)) {
        if (aa.angle == 0.0) return UnitQuaternion::identity();
        throw NearZeroQuaternion("rotation axis has zero length");
    }
    const Vec3 u = (1.0 / an) * aa.axis;
    const double s = std::sin(0.5 * aa.angle);
    return normalize({std::cos(0.5 * aa.angle), s * u.x, s * u.y, s * u.z});
}

Vec3 rotate_vector(const UnitQuaternion& q, const Vec3& v) {
    const Quaternion r = multiply(multiply(q, Quaternion{0.0, v.x, v.y, v.z}), conjugate(q));
    return r.vec();
}

}  // namespace kli
