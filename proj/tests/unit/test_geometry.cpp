#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/geometry.hpp"
#include "rtspa/rrm.hpp"

using namespace rtspa;

TEST(Geometry, DefaultIsValid) {
  const auto report = validate(ActuatorGeometry{});
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.failures().empty());
  EXPECT_NO_THROW(require_valid(ActuatorGeometry{}));
}

TEST(Geometry, SingleFieldMutationsAreRejected) {
  const ActuatorGeometry base;
  auto expect_bad = [](ActuatorGeometry g, const char* what) {
    EXPECT_FALSE(validate(g).ok()) << what;
    EXPECT_THROW(require_valid(g), ConfigError) << what;
  };
  {
    auto g = base; g.unit_width_mm = 10.0; expect_bad(g, "W == L");
  }
  {
    auto g = base; g.unit_width_mm = -1.0; expect_bad(g, "W < 0");
  }
  {
    auto g = base; g.base_width_mm = 12.0; expect_bad(g, "B > L");
  }
  {
    auto g = base; g.base_spacing_mm = 2.9; expect_bad(g, "G = L - W");
  }
  {
    auto g = base; g.n_units = 1; expect_bad(g, "one unit");
  }
  {
    auto g = base; g.p_max_mpa = 0.0; expect_bad(g, "p_max");
  }
  {
    auto g = base; g.wall_thickness_mm = 0.0; expect_bad(g, "wall");
  }
  {
    auto g = base; g.face_side_mm = -2.0; expect_bad(g, "face");
  }
  {
    auto g = base; g.unit_height_mm = 0.0; expect_bad(g, "height");
  }
}

TEST(Geometry, Theta1MaxReference) {
  EXPECT_NEAR(theta1_max(ActuatorGeometry{}), 44.765084671328424, 1e-9);
  EXPECT_NEAR(theta2_max(ActuatorGeometry{}), oracle::deg(std::acos(0.6)), 1e-12);
  EXPECT_DOUBLE_EQ(mode2_limit(ActuatorGeometry{}), theta1_max(ActuatorGeometry{}));
}

TEST(Geometry, GapEndpoints) {
  const ActuatorGeometry g;
  EXPECT_EQ(gap(g, 0.0), g.unit_pitch_mm - g.unit_width_mm);
  EXPECT_LE(gap(g, theta1_max(g)), 1e-9);
  EXPECT_GE(gap(g, theta1_max(g)), 0.0);
  EXPECT_THROW(gap(g, theta1_max(g) + 0.01), DomainError);
  EXPECT_THROW(gap(g, -theta1_max(g) - 0.01), DomainError);
}

TEST(GeometryProperty, LimitRoundTripAndGapShape) {
  gen::Rng rng(0xA11CE);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen::geometry(rng);
    ASSERT_TRUE(validate(g).ok());
    const double t1 = theta1_max(g);
    EXPECT_NEAR(g.unit_pitch_mm * std::cos(oracle::rad(t1)), g.unit_width_mm,
                1e-9 * g.unit_width_mm);
    double prev = gap(g, 0.0);
    for (int k = 1; k <= 100; ++k) {
      const double th = t1 * k / 100.0;
      const double now = gap(g, th);
      EXPECT_NEAR(now, std::max(0.0, oracle::gap(g.unit_pitch_mm, g.unit_width_mm, th)), 1e-12);
      EXPECT_EQ(now, gap(g, -th));
      if (k < 100) EXPECT_LT(now, prev);
      prev = now;
    }
  }
}

TEST(Rrm, ModeTable) {
  const ActuatorGeometry g;
  const auto bend = motors_to_transform({0.0, 0.0}, g);
  EXPECT_EQ(bend.mode, Mode::Bending);
  const auto m1 = motors_to_transform({20.0, 0.0}, g);
  EXPECT_EQ(m1.mode, Mode::Mode1);
  EXPECT_EQ(m1.theta1_deg, 20.0);
  EXPECT_EQ(m1.theta2_deg, 0.0);
  const auto m2 = motors_to_transform({0.0, 25.0}, g);
  EXPECT_EQ(m2.mode, Mode::Mode2);
  EXPECT_EQ(m2.theta2_deg, 25.0);
  EXPECT_EQ(m2.theta1_deg, -m2.theta2_deg);
  const auto mixed = motors_to_transform({30.0, 10.0}, g);
  EXPECT_EQ(mixed.mode, Mode::Mixed);
  EXPECT_EQ(mixed.theta1_deg, 20.0);
  EXPECT_EQ(mixed.theta2_deg, 10.0);
}

TEST(Rrm, LimitsAndSaturation) {
  const ActuatorGeometry g;
  EXPECT_THROW(motors_to_transform({50.0, 0.0}, g), ContactViolation);
  EXPECT_THROW(motors_to_transform({0.0, 60.0}, g), ContactViolation);
  EXPECT_THROW(motors_to_transform({95.0, 0.0}, g), DomainError);
  try {
    transform_to_motors(make_transform(44.0, 50.0), g);
    FAIL() << "expected saturation";
  } catch (const MotorSaturation& e) {
    EXPECT_EQ(e.motor(), "A");
    EXPECT_DOUBLE_EQ(e.required_deg(), 94.0);
  }
  EXPECT_THROW(transform_to_motors(make_transform(46.0, 0.0), g), ContactViolation);
}

TEST(RrmProperty, RoundTrip) {
  gen::Rng rng(7);
  const ActuatorGeometry g;
  for (int i = 0; i < 500; ++i) {
    const MotorState m{rng.uniform(-90.0, 90.0), rng.uniform(-50.0, 50.0)};
    TransformState t;
    try {
      t = motors_to_transform(m, g);
    } catch (const ContactViolation&) {
      continue;
    }
    const auto back = transform_to_motors(t, g);
    EXPECT_NEAR(back.alpha_a_deg, m.alpha_a_deg, 1e-12);
    EXPECT_NEAR(back.alpha_b_deg, m.alpha_b_deg, 1e-12);
    EXPECT_EQ(t.mode, classify(m));
  }
}
