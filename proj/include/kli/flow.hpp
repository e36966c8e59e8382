#pragma once

#include "kli/curve.hpp"
#include "kli/quaternion.hpp"

namespace kli {

/// Stopping and integration parameters for kli_interpolate.
///
/// Defaults reproduce the reference experiment: tolerance 1e-5, horizon
/// increment 0.01, RK4 step 0.01. The constructor enforces
/// epsilon, delta, step > 0, step <= delta <= t_max, and delta being an
/// integer multiple of step.
class KliConfig {
public:
    static constexpr double kDefaultEpsilon = 1e-5;
    static constexpr double kDefaultDelta = 0.01;
    static constexpr double kDefaultStep = 0.01;
    static constexpr double kDefaultTMax = 100.0;

    KliConfig() = default;
    KliConfig(double epsilon, double delta, double step_h, double t_max, bool shortest_path = false);

    double epsilon() const { return epsilon_; }
    double delta() const { return delta_; }
    double step_h() const { return step_h_; }
    double t_max() const { return t_max_; }
    bool shortest_path() const { return shortest_path_; }

    /// Integrator steps per horizon increment (delta / step_h).
    int steps_per_horizon() const { return steps_per_horizon_; }

private:
    double epsilon_ = kDefaultEpsilon;
    double delta_ = kDefaultDelta;
    double step_h_ = kDefaultStep;
    double t_max_ = kDefaultTMax;
    bool shortest_path_ = false;
    int steps_per_horizon_ = 1;
};

/// Dot products at or below this count as an antipodal endpoint pair.
inline constexpr double kAntipodalThreshold = -1.0 + 1e-12;

/// Tangent vector of the flow q' = -1/2 (q conj(r) q - r) at q.
///
/// On S^3, q conj(r) q = 2 (q.r) q - r, so this is evaluated as
/// r - (q.r) q, which is orthogonal to q.
Quaternion rhs(const UnitQuaternion& q, const UnitQuaternion& r);

/// One classical RK4 step of the flow, projected back onto S^3.
UnitQuaternion rk4_step(const UnitQuaternion& q, const UnitQuaternion& r, double h);

/// Integrates the flow from p and stops at the first multiple T of delta
/// with |r - q(T)| < epsilon.
///
/// With cfg.shortest_path() set, r is negated first when p.r < 0; the
/// effective target is stored in the returned curve. Throws AntipodalInput
/// for p.r <= -1 + 1e-12 and NonConvergence once T would pass cfg.t_max().
InterpolationCurve kli_interpolate(const UnitQuaternion& p, const UnitQuaternion& r,
                                   const KliConfig& cfg = {});

/// Exact solution of the flow: with p = cos(phi0) r + sin(phi0) w and
/// w orthogonal to r, the angle obeys tan(phi/2) = tan(phi0/2) e^{-t}.
UnitQuaternion closed_form_solution(const UnitQuaternion& p, const UnitQuaternion& r, double t);

}  // namespace kli
