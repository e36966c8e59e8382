#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kli/hopf.hpp"
#include "kli/slerp.hpp"
#include "oracles.hpp"

using namespace kli;

TEST(HopfProject, KnownPoints) {
    EXPECT_EQ(hopf_project(UnitQuaternion::identity()), (Vec3{1, 0, 0}));
    EXPECT_EQ(hopf_project(UnitQuaternion::from(0, 0, 0, 1)), (Vec3{-1, 0, 0}));
    EXPECT_EQ(hopf_project(UnitQuaternion::from(0.5, 0.5, 0.5, 0.5)), (Vec3{0, 1, 0}));
}

TEST(HopfProject, UnitImage) {
    oracle::Rng rng(40);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_NEAR(norm(hopf_project(rng.unit())), 1.0, 1e-12);
    }
}

TEST(HopfProject, ConstantOnFibers) {
    oracle::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const auto q = rng.unit();
        const double psi = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const auto moved = normalize(multiply(q, Quaternion{std::cos(psi), std::sin(psi), 0, 0}));
        const auto a = hopf_project(q);
        const auto b = hopf_project(moved);
        EXPECT_NEAR(a.x, b.x, 1e-12);
        EXPECT_NEAR(a.y, b.y, 1e-12);
        EXPECT_NEAR(a.z, b.z, 1e-12);
        EXPECT_EQ(hopf_project(-q), a);
    }
}

TEST(HopfProjectCurve, KeepsTimesAndOrder) {
    const auto p = UnitQuaternion::from(0, 0, 0, 1);
    const auto r = UnitQuaternion::from(0.5, 0.5, 0.5, 0.5);
    InterpolationCurve single;
    single.samples.push_back({0.0, p});
    const auto one = hopf_project_curve(single);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].point, (Vec3{-1, 0, 0}));

    const auto curve = slerp_sample(p, r, 11);
    const auto poly = hopf_project_curve(curve);
    ASSERT_EQ(poly.size(), 11u);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        EXPECT_EQ(poly[k].t, curve.samples[k].t);
        EXPECT_EQ(poly[k].point, hopf_project(curve.samples[k].q));
    }
    EXPECT_EQ(poly.back().point, (Vec3{0, 1, 0}));
}
