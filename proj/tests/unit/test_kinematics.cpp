#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/sam_kinematics.hpp"

using namespace rtspa;

namespace {

const ActuatorModel& default_model() {
  static const ActuatorModel m = make_model(ActuatorGeometry{});
  return m;
}

}  // namespace

TEST(JointAngle, Values) {
  const auto& m = default_model();
  EXPECT_EQ(joint_angle(0.0, 0.0, m.geometry, m.material), 0.0);
  const double e = oracle::membrane_w(0.5, 6.0, 4.4, 20.0, 1.0) * 2.0;
  EXPECT_NEAR(joint_angle(0.5, 0.0, m.geometry, m.material), 8.0 * (e - 2.9), 1e-10);
  EXPECT_NEAR(joint_angle(0.5, 0.0, m.geometry, m.material), 32.455040597952845, 1e-10);
  EXPECT_EQ(joint_angle(0.5, theta1_max(m.geometry), m.geometry, m.material), 35.0);
  EXPECT_THROW(joint_angle(0.6, 0.0, m.geometry, m.material), DomainError);
  EXPECT_THROW(joint_angle(0.2, 50.0, m.geometry, m.material), DomainError);
}

TEST(JointAngle, ContactOnsetIsZero) {
  // Pick the pressure whose expansion equals the gap at theta1 = 0.
  const auto& m = default_model();
  const double g = 2.9;
  const double w = g / 2.0;
  const double a = 10.0;
  const double p = 3.0 * m.material.ogden.initial_modulus_mpa() * 1.0 * w * w * w / (a * a * a * a);
  EXPECT_LE(joint_angle(p * (1.0 - 1e-12), 0.0, m.geometry, m.material), 1e-9);
  EXPECT_GT(joint_angle(p * 1.01, 0.0, m.geometry, m.material), 0.0);
}

TEST(JointAngleProperty, Monotone) {
  const auto& m = default_model();
  const double t1max = theta1_max(m.geometry);
  for (int i = 0; i <= 20; ++i) {
    const double t1 = t1max * i / 20.0;
    double prev = 0.0;
    for (int k = 0; k <= 50; ++k) {
      const double phi = joint_angle(0.5 * k / 50.0, t1, m.geometry, m.material);
      EXPECT_GE(phi, prev);
      if (prev > 0.0 && prev < 35.0) EXPECT_GT(phi, prev);
      prev = phi;
    }
    if (i > 0) {
      EXPECT_GE(joint_angle(0.3, t1, m.geometry, m.material),
                joint_angle(0.3, t1max * (i - 1) / 20.0, m.geometry, m.material));
    }
  }
}

TEST(ForwardKinematics, StraightChain) {
  const auto& m = default_model();
  const auto c = forward_kinematics(m, make_configuration(0, 0, 0));
  ASSERT_EQ(c.frames.size(), 5u);
  EXPECT_EQ(c.frames.front().position, Eigen::Vector3d::Zero());
  EXPECT_NEAR((c.tip.position - Eigen::Vector3d(0, 0, 40.0)).norm(), 0.0, 1e-12);
  for (int i = 0; i < kMarkerCount; ++i) {
    EXPECT_NEAR(c.markers[i].z(), 4.0 * (i + 1), 1e-12);
    EXPECT_EQ(c.markers[i].x(), 0.0);
    EXPECT_EQ(c.markers[i].y(), 0.0);
  }
}

TEST(ForwardKinematics, Mode2ShearMatchesVectorSum) {
  const auto& m = default_model();
  const auto c = forward_kinematics(m, make_configuration(-30, 30, 0));
  const auto o = oracle::sheared_tip(4, 10.0, 10.0, -30.0, 30.0);
  EXPECT_NEAR(c.tip.position.x(), o[0], 1e-12);
  EXPECT_NEAR(c.tip.position.y(), o[1], 1e-12);
  EXPECT_NEAR(c.tip.position.z(), o[2], 1e-12);
  EXPECT_NEAR(c.tip.position.x(), 3 * 10.0 * 0.5, 1e-12);
  // Units keep their orientation.
  EXPECT_NEAR(c.tip_unit_orientation.angularDistance(Eigen::Quaterniond::Identity()), 0.0, 1e-12);
}

TEST(ForwardKinematics, PureBendingIsPlanar) {
  const auto& m = default_model();
  for (int k = 0; k <= 10; ++k) {
    const auto c = forward_kinematics(m, make_configuration(0, 0, 0.05 * k));
    for (const auto& p : c.markers) EXPECT_LT(std::abs(p.x()), 1e-9);
    EXPECT_GE(c.tip.position.y(), 0.0);
  }
}

TEST(Twist, ReferenceAndSign) {
  const auto& m = default_model();
  EXPECT_EQ(tip_twist(m, make_configuration(0, 0, 0.5)), 0.0);
  const double twist = tip_twist(m, make_configuration(30, 0, 0.5));
  const double phi = joint_angle(0.5, 30.0, m.geometry, m.material);
  EXPECT_NEAR(twist, oracle::chain_twist(4, 30.0, phi), 1e-9);
  EXPECT_NEAR(twist, 66.17755169673374, 1e-9);
  EXPECT_GT(tip_twist(m, make_configuration(10, 0, 0.5)), 0.0);
  EXPECT_LT(tip_twist(m, make_configuration(-10, 0, 0.5)), 0.0);
}

TEST(Twist, NonDecreasingInTheta1) {
  const auto& m = default_model();
  const double t1max = theta1_max(m.geometry);
  double prev = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double tw = tip_twist(m, make_configuration(t1max * i / 40.0, 0, 0.5));
    EXPECT_GE(tw, prev - 1e-12);
    prev = tw;
  }
}

TEST(KinematicsProperty, MirrorArcLengthNorms) {
  gen::Rng rng(0xBEEF);
  for (int i = 0; i < 150; ++i) {
    const auto g = gen::geometry(rng);
    const auto model = make_model(g);
    const auto cfg = gen::configuration(rng, g);
    const auto a = forward_kinematics(model, cfg);
    const auto b = forward_kinematics(
        model, make_configuration(-cfg.transform.theta1_deg, -cfg.transform.theta2_deg, cfg.pressure_mpa));
    ASSERT_EQ(a.frames.size(), static_cast<std::size_t>(g.n_units) + 1);
    for (std::size_t f = 0; f < a.frames.size(); ++f) {
      const Eigen::Vector3d& p = a.frames[f].position;
      const Eigen::Vector3d& q = b.frames[f].position;
      EXPECT_NEAR(p.x(), -q.x(), 1e-9);
      EXPECT_NEAR(p.y(), q.y(), 1e-9);
      EXPECT_NEAR(p.z(), q.z(), 1e-9);
      EXPECT_NEAR(a.frames[f].orientation.norm(), 1.0, 1e-9);
    }
    for (int k = 0; k < kMarkerCount; ++k) {
      EXPECT_NEAR(a.markers[k].x(), -b.markers[k].x(), 1e-9);
    }
    EXPECT_NEAR(arc_length(a), g.backbone_length_mm(), 1e-9 * g.backbone_length_mm());
    EXPECT_NEAR(tip_twist(model, cfg), -twist_about_tangent(b), 1e-9);
    EXPECT_EQ(a.markers.back(), a.tip.position);
  }
}

TEST(KinematicsProperty, MarkersEvenlySpaced) {
  gen::Rng rng(3);
  const auto& m = default_model();
  for (int i = 0; i < 50; ++i) {
    const auto c = forward_kinematics(m, gen::configuration(rng, m.geometry));
    // Consecutive markers are chord-separated by at most the arc spacing.
    Eigen::Vector3d prev = Eigen::Vector3d::Zero();
    for (const auto& p : c.markers) {
      EXPECT_LE((p - prev).norm(), 4.0 + 1e-9);
      EXPECT_GT((p - prev).norm(), 0.0);
      prev = p;
    }
  }
}

TEST(KinematicsProperty, BendingMonotoneInPressure) {
  const auto& m = default_model();
  double prev = 0.0;
  for (int k = 0; k <= 50; ++k) {
    const double b = bending_angle(forward_kinematics(m, make_configuration(0, 0, 0.01 * k)));
    EXPECT_GE(b, prev - 1e-12);
    prev = b;
  }
}

TEST(Configuration, Validation) {
  const ActuatorGeometry g;
  EXPECT_THROW(validate_configuration(make_configuration(0, 0, -0.1), g), DomainError);
  EXPECT_THROW(validate_configuration(make_configuration(0, 0, 0.7), g), DomainError);
  EXPECT_THROW(validate_configuration(make_configuration(45, 0, 0.1), g), ContactViolation);
  EXPECT_THROW(validate_configuration(make_configuration(44, 50, 0.1), g), MotorSaturation);
  EXPECT_NO_THROW(validate_configuration(make_configuration(theta1_max(g), 0, 0.5), g));
}
