#pragma once

#include <vector>

#include "kli/curve.hpp"
#include "kli/quaternion.hpp"

namespace kli {

/// Image of the Hopf map on the unit 2-sphere.
using SpherePoint3 = Vec3;

/// h(w, x, y, z) = (w^2 + x^2 - y^2 - z^2, 2(wz + xy), 2(xz - wy)).
/// Constant along the fibers q (cos psi + i sin psi).
SpherePoint3 hopf_project(const UnitQuaternion& q);

struct ProjectedSample {
    double t = 0.0;
    SpherePoint3 point;
};

std::vector<ProjectedSample> hopf_project_curve(const InterpolationCurve& curve);

}  // namespace kli
