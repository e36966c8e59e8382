#pragma once

#include <span>
#include <vector>

#include "kli/curve.hpp"
#include "kli/flow.hpp"
#include "kli/quaternion.hpp"

namespace kli {

/// Angle between p and q as points of S^3, in [0, pi]. q and -q are pi apart.
double geodesic_distance(const UnitQuaternion& p, const UnitQuaternion& q);

/// Distance from q to the shorter-than-pi great-circle arc running from p to r.
double distance_to_arc(const UnitQuaternion& q, const UnitQuaternion& p, const UnitQuaternion& r);

struct PathComparison {
    double max_deviation = 0.0;   // radians, sample-to-arc
    double endpoint_error = 0.0;  // |r - q(T)| in R^4
    double converged_time = 0.0;
    std::size_t sample_count = 0;
};

/// Compares a curve against the SLERP arc from p to r. Throws DegenerateArc
/// when p = +-r.
PathComparison path_deviation(const InterpolationCurve& curve, const UnitQuaternion& p,
                              const UnitQuaternion& r);

struct ProgressPoint {
    double t = 0.0;
    double s = 0.0;
};

/// s(t) = (phi0 - phi(t)) / phi0 where phi is the distance to r. Feeding s
/// to slerp_eval recovers the curve point.
std::vector<ProgressPoint> progress_map(const InterpolationCurve& curve, const UnitQuaternion& p,
                                        const UnitQuaternion& r);

/// Sample of a uniformly stepped curve at time t. Throws TimeNotSampled if t
/// is off the grid (by more than 1e-9) or outside the curve.
const CurveSample& sample_at(const InterpolationCurve& curve, double t, double step_h);

struct Frame {
    double t = 0.0;
    UnitQuaternion q;
    std::vector<Vec3> points;
};

/// Object poses along the KLI curve from p to r at the requested times.
std::vector<Frame> generate_frames(const UnitQuaternion& p, const UnitQuaternion& r,
                                   std::span<const double> times, std::span<const Vec3> object_points,
                                   const KliConfig& cfg = {});

/// Corners of the axis-aligned cube of side 1 centred at the origin.
std::vector<Vec3> unit_cube_corners();

}  // namespace kli
