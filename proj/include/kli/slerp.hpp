#pragma once

#include "kli/curve.hpp"
#include "kli/quaternion.hpp"

namespace kli {

/// Spherical linear interpolation from p to r, t in [0, 1].
///
/// Evaluated with the sine-weighted form, falling back to normalized lerp
/// when the endpoints are closer than 1e-6 rad. t = 0 and t = 1 return the
/// endpoints unchanged. No sign flip unless `shortest_path` is set, in which
/// case r is negated when p.r < 0. Throws DomainError for t outside [0, 1]
/// and AntipodalInput for p = -r.
UnitQuaternion slerp_eval(const UnitQuaternion& p, const UnitQuaternion& r, double t,
                          bool shortest_path = false);

/// p (conj(p) r)^t, the quaternion-power form. Same preconditions as slerp_eval.
UnitQuaternion slerp_power(const UnitQuaternion& p, const UnitQuaternion& r, double t);

/// (sin((1-t) W) p + sin(t W) r) / sin W with W the angle between p and r.
UnitQuaternion slerp_sine(const UnitQuaternion& p, const UnitQuaternion& r, double t);

/// n >= 2 samples at t = i / (n - 1).
InterpolationCurve slerp_sample(const UnitQuaternion& p, const UnitQuaternion& r, int n,
                                bool shortest_path = false);

}  // namespace kli
