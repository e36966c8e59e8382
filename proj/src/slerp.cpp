#include "kli/slerp.hpp"

#include <cmath>
#include <sstream>

#include "kli/errors.hpp"
#include "kli/flow.hpp"

namespace kli {

namespace {

constexpr double kNlerpAngle = 1e-6;

void check_args(const UnitQuaternion& p, const UnitQuaternion& r, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream os;
        os << "slerp parameter " << t << " outside [0, 1]";
        throw DomainError(os.str());
    }
    if (dot(p, r) <= kAntipodalThreshold) {
        throw AntipodalInput("slerp endpoints are antipodal; the great circle is not unique");
    }
}

// Angle between p and r, accurate at both ends of [0, pi].
double separation(const Quaternion& p, const Quaternion& r) {
    return 2.0 * std::atan2(norm(r - p), norm(r + p));
}

}  // namespace

UnitQuaternion slerp_power(const UnitQuaternion& p, const UnitQuaternion& r, double t) {
    check_args(p, r, t);
    const UnitQuaternion relative = compose(UnitQuaternion::from(conjugate(p)), r);
    return compose(p, power(relative, t));
}

UnitQuaternion slerp_sine(const UnitQuaternion& p, const UnitQuaternion& r, double t) {
    check_args(p, r, t);
    const double omega = separation(p, r);
    if (omega < kNlerpAngle) {
        return normalize((1.0 - t) * p.value() + t * r.value());
    }
    const double so = std::sin(omega);
    return normalize((std::sin((1.0 - t) * omega) / so) * p.value() +
                     (std::sin(t * omega) / so) * r.value());
}

UnitQuaternion slerp_eval(const UnitQuaternion& p, const UnitQuaternion& r, double t, bool shortest_path) {
    const UnitQuaternion target = (shortest_path && dot(p, r) < 0.0) ? -r : r;
    check_args(p, target, t);
    if (t == 0.0) return p;
    if (t == 1.0) return target;
    return slerp_sine(p, target, t);
}

InterpolationCurve slerp_sample(const UnitQuaternion& p, const UnitQuaternion& r, int n, bool shortest_path) {
    if (n < 2) {
        throw DomainError("slerp sampling needs at least 2 samples");
    }
    InterpolationCurve curve;
    curve.target = (shortest_path && dot(p, r) < 0.0) ? -r : r;
    curve.converged_time = 1.0;
    curve.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        curve.samples.push_back({t, slerp_eval(p, curve.target, t)});
    }
    return curve;
}

}  // namespace kli
