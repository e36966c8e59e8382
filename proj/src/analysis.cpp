#include "kli/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kli/errors.hpp"

namespace kli {

namespace {

constexpr double kDegenerateSeparation = 1e-9;
constexpr double kGridTolerance = 1e-9;

double angle_between(const Quaternion& p, const Quaternion& q) {
    return 2.0 * std::atan2(norm(q - p), norm(q + p));
}

struct ArcFrame {
    Quaternion e1;  // = p
    Quaternion e2;  // unit, orthogonal to p, in span{p, r}
    double omega;   // arc length
};

ArcFrame arc_frame(const UnitQuaternion& p, const UnitQuaternion& r) {
    const double c = dot(p, r);
    const Quaternion perp = r.value() - c * p.value();
    const double s = norm(perp);
    if (s <= kDegenerateSeparation) {
        throw DegenerateArc("endpoints coincide or are antipodal; the arc is undefined");
    }
    return {p.value(), (1.0 / s) * perp, std::atan2(s, c)};
}

double arc_distance(const Quaternion& q, const ArcFrame& arc, const UnitQuaternion& p, const UnitQuaternion& r) {
    const double a = dot(q, arc.e1);
    const double b = dot(q, arc.e2);
    const Quaternion residual = q - a * arc.e1 - b * arc.e2;
    const double alpha = std::atan2(b, a);
    if (alpha >= 0.0 && alpha <= arc.omega) {
        return std::atan2(norm(residual), std::hypot(a, b));
    }
    return std::min(angle_between(q, p), angle_between(q, r));
}

}  // namespace

double geodesic_distance(const UnitQuaternion& p, const UnitQuaternion& q) {
    // Equal to arccos(p.q), without its loss of precision near 0 and pi.
    return angle_between(p, q);
}

double distance_to_arc(const UnitQuaternion& q, const UnitQuaternion& p, const UnitQuaternion& r) {
    return arc_distance(q, arc_frame(p, r), p, r);
}

PathComparison path_deviation(const InterpolationCurve& curve, const UnitQuaternion& p, const UnitQuaternion& r) {
    const ArcFrame arc = arc_frame(p, r);
    PathComparison cmp;
    for (const auto& s : curve.samples) {
        cmp.max_deviation = std::max(cmp.max_deviation, arc_distance(s.q, arc, p, r));
    }
    if (!curve.samples.empty()) {
        cmp.endpoint_error = norm(r.value() - curve.samples.back().q.value());
    }
    cmp.converged_time = curve.converged_time;
    cmp.sample_count = curve.samples.size();
    return cmp;
}

std::vector<ProgressPoint> progress_map(const InterpolationCurve& curve, const UnitQuaternion& p,
                                        const UnitQuaternion& r) {
    const double phi0 = geodesic_distance(p, r);
    if (phi0 < kDegenerateSeparation) {
        throw DegenerateArc("start and target coincide; progress is undefined");
    }
    std::vector<ProgressPoint> out;
    out.reserve(curve.samples.size());
    for (const auto& s : curve.samples) {
        out.push_back({s.t, (phi0 - geodesic_distance(s.q, r)) / phi0});
    }
    return out;
}

const CurveSample& sample_at(const InterpolationCurve& curve, double t, double step_h) {
    const double idx = std::round(t / step_h);
    const bool on_grid = std::isfinite(idx) && idx >= 0.0 && std::abs(idx * step_h - t) <= kGridTolerance;
    if (!on_grid || idx >= static_cast<double>(curve.samples.size())) {
        std::ostringstream os;
        os << "time " << t << " is not a sample of the curve (step " << step_h << ", last "
           << (curve.samples.empty() ? 0.0 : curve.samples.back().t) << ")";
        throw TimeNotSampled(os.str());
    }
    return curve.samples[static_cast<std::size_t>(idx)];
}

std::vector<Frame> generate_frames(const UnitQuaternion& p, const UnitQuaternion& r, std::span<const double> times,
                                   std::span<const Vec3> object_points, const KliConfig& cfg) {
    const InterpolationCurve curve = kli_interpolate(p, r, cfg);
    std::vector<Frame> frames;
    frames.reserve(times.size());
    for (const double t : times) {
        const CurveSample& s = sample_at(curve, t, cfg.step_h());
        Frame f{s.t, s.q, {}};
        f.points.reserve(object_points.size());
        for (const auto& v : object_points) {
            f.points.push_back(rotate_vector(s.q, v));
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

std::vector<Vec3> unit_cube_corners() {
    std::vector<Vec3> corners;
    for (const double x : {-0.5, 0.5}) {
        for (const double y : {-0.5, 0.5}) {
            for (const double z : {-0.5, 0.5}) {
                corners.push_back({x, y, z});
            }
        }
    }
    return corners;
}

}  // namespace kli
