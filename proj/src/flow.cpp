#include "kli/flow.hpp"

#include <cmath>
#include <sstream>

#include "kli/errors.hpp"

namespace kli {

namespace {

// Right-hand side extended off the sphere for the RK4 stages.
Quaternion tangent(const Quaternion& q, const Quaternion& r) { return r - dot(q, r) * q; }

void check_not_antipodal(const UnitQuaternion& p, const UnitQuaternion& r) {
    const double c = dot(p, r);
    if (c <= kAntipodalThreshold) {
        std::ostringstream os;
        os.precision(17);
        os << "endpoints " << p.value() << " and " << r.value()
           << " are antipodal (dot " << c << "); the flow is stationary";
        throw AntipodalInput(os.str());
    }
}

}  // namespace

KliConfig::KliConfig(double epsilon, double delta, double step_h, double t_max, bool shortest_path)
    : epsilon_(epsilon), delta_(delta), step_h_(step_h), t_max_(t_max), shortest_path_(shortest_path) {
    auto fail = [](const std::string& msg) { throw InvalidConfig(msg); };
    if (!(std::isfinite(epsilon) && epsilon > 0.0)) fail("epsilon must be positive");
    if (!(std::isfinite(delta) && delta > 0.0)) fail("delta must be positive");
    if (!(std::isfinite(step_h) && step_h > 0.0)) fail("step must be positive");
    if (!std::isfinite(t_max)) fail("t-max must be finite");
    if (step_h > delta) fail("step must not exceed delta");
    if (t_max < delta) fail("t-max must be at least delta");

    const double ratio = delta / step_h;
    const double rounded = std::round(ratio);
    if (std::abs(rounded * step_h - delta) > 1e-12 || rounded > 1e9) {
        fail("delta must be an integer multiple of step");
    }
    steps_per_horizon_ = static_cast<int>(rounded);
}

Quaternion rhs(const UnitQuaternion& q, const UnitQuaternion& r) { return tangent(q, r); }

UnitQuaternion rk4_step(const UnitQuaternion& q, const UnitQuaternion& r, double h) {
    const Quaternion& y = q;
    const Quaternion k1 = tangent(y, r);
    const Quaternion k2 = tangent(y + (0.5 * h) * k1, r);
    const Quaternion k3 = tangent(y + (0.5 * h) * k2, r);
    const Quaternion k4 = tangent(y + h * k3, r);
    return normalize(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

InterpolationCurve kli_interpolate(const UnitQuaternion& p, const UnitQuaternion& r, const KliConfig& cfg) {
    UnitQuaternion target = r;
    if (cfg.shortest_path() && dot(p, r) < 0.0) {
        target = -r;
    }
    check_not_antipodal(p, target);

    const double h = cfg.step_h();
    const int per_horizon = cfg.steps_per_horizon();

    InterpolationCurve curve;
    curve.target = target;
    curve.samples.push_back({0.0, p});

    UnitQuaternion q = p;
    long step = 0;
    for (long horizon = 0;; ++horizon) {
        if (norm(target.value() - q.value()) < cfg.epsilon()) {
            curve.converged_time = curve.samples.back().t;
            return curve;
        }
        const double next_horizon = static_cast<double>(horizon + 1) * cfg.delta();
        if (next_horizon > cfg.t_max() * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "no convergence to tolerance " << cfg.epsilon() << " within t-max " << cfg.t_max()
               << " (distance " << norm(target.value() - q.value()) << ")";
            throw NonConvergence(os.str());
        }
        for (int i = 0; i < per_horizon; ++i) {
            q = rk4_step(q, target, h);
            ++step;
            curve.samples.push_back({static_cast<double>(step) * h, q});
        }
    }
}

UnitQuaternion closed_form_solution(const UnitQuaternion& p, const UnitQuaternion& r, double t) {
    check_not_antipodal(p, r);
    const double c = dot(p, r);
    const Quaternion perp = p.value() - c * r.value();
    const double s = norm(perp);
    if (s == 0.0) {
        return r;
    }
    const Quaternion w = (1.0 / s) * perp;
    const double phi0 = std::atan2(s, c);
    const double phi = 2.0 * std::atan(std::tan(0.5 * phi0) * std::exp(-t));
    return normalize(std::cos(phi) * r.value() + std::sin(phi) * w);
}

}  // namespace kli
