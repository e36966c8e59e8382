#include "kli/hopf.hpp"

namespace kli {

SpherePoint3 hopf_project(const UnitQuaternion& q) {
    const double a = q.w();
    const double b = q.x();
    const double c = q.y();
    const double d = q.z();
    return {a * a + b * b - c * c - d * d, 2.0 * (a * d + b * c), 2.0 * (b * d - a * c)};
}

std::vector<ProjectedSample> hopf_project_curve(const InterpolationCurve& curve) {
    std::vector<ProjectedSample> out;
    out.reserve(curve.samples.size());
    for (const auto& s : curve.samples) {
        out.push_back({s.t, hopf_project(s.q)});
    }
    return out;
}

}  // namespace kli
