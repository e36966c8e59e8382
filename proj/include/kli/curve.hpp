#pragma once

#include <vector>

#include "kli/quaternion.hpp"

namespace kli {

struct CurveSample {
    double t = 0.0;
    UnitQuaternion q;
};

/// Time-stamped path on S^3 from the start rotation towards `target`.
///
/// KLI curves carry one sample per integrator step and `converged_time` is
/// the horizon at which the stopping test passed. SLERP curves use the
/// parameter in [0, 1] as time and set `converged_time` to 1.
struct InterpolationCurve {
    std::vector<CurveSample> samples;
    double converged_time = 0.0;
    UnitQuaternion target;
};

}  // namespace kli
