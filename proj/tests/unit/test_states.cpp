#include <gtest/gtest.h>

#include "hydromoments/states.hpp"

using namespace hydromoments;

TEST(States, DerivedQuantities) {
  auto s = make_state(3, 1, 0, 1.0);
  EXPECT_EQ(s.eta(), 1);
  EXPECT_EQ(s.L(), 0);
  EXPECT_EQ(s.nu(), 1);
  EXPECT_EQ(s.k(), 0);

  s = make_state(5, 3, 1, 2.0);
  EXPECT_EQ(s.eta(), 4);
  EXPECT_EQ(s.L(), 2);
  EXPECT_EQ(s.nu(), 3);
  EXPECT_EQ(s.k(), 1);

  s = make_state(2, 1, 0, 1.0);
  EXPECT_EQ(s.eta(), make_rational(1, 2));
  EXPECT_EQ(s.L(), make_rational(-1, 2));
  EXPECT_EQ(s.nu(), make_rational(1, 2));
  EXPECT_EQ(s.k(), 0);
}

TEST(States, IdentitiesHoldOnGrid) {
  for (int D = 2; D <= 12; ++D) {
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        const auto s = make_state(D, n, l, 1.5);
        EXPECT_EQ(s.eta() - s.L() - 1, s.k());
        EXPECT_EQ(2 * s.L() + 1, 2 * l + D - 2);
        EXPECT_EQ(s.nu(), s.L() + 1);
        EXPECT_GT(s.eta(), 0);
      }
    }
  }
}

TEST(States, RejectsInvalidStates) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::UnsupportedArgument;
  };
  EXPECT_EQ(code_of([] { make_state(1, 1, 0, 1.0); }), ErrorCode::DimensionTooSmall);
  EXPECT_EQ(code_of([] { make_state(3, 0, 0, 1.0); }), ErrorCode::QuantumNumberOutOfRange);
  EXPECT_EQ(code_of([] { make_state(3, 2, 2, 1.0); }), ErrorCode::QuantumNumberOutOfRange);
  EXPECT_EQ(code_of([] { make_state(3, 2, -1, 1.0); }), ErrorCode::QuantumNumberOutOfRange);
  EXPECT_EQ(code_of([] { make_state(3, 1, 0, 0.0); }), ErrorCode::NonpositiveCharge);
  EXPECT_EQ(code_of([] { make_state(3, 1, 0, -2.0); }), ErrorCode::NonpositiveCharge);
}

TEST(States, OrderValidity) {
  const auto ground = make_state(3, 1, 0, 1.0);
  EXPECT_FALSE(check_order(ground, {6.0, Space::Momentum}));
  EXPECT_FALSE(check_order(ground, {5.0, Space::Momentum}));
  EXPECT_TRUE(check_order(ground, {4.999, Space::Momentum}));
  EXPECT_TRUE(check_order(ground, {-2.0, Space::Position}));
  EXPECT_FALSE(check_order(ground, {-3.0, Space::Position}));
  EXPECT_TRUE(check_order(ground, {1e6, Space::Position}));
  EXPECT_TRUE(check_order(make_state(3, 2, 1, 1.0), {6.0, Space::Momentum}));
  EXPECT_EQ(valid_interval(ground, Space::Momentum).str(), "(-3, 5)");
}

TEST(States, MomentumIntervalMonotoneInL) {
  for (int D = 2; D <= 8; ++D) {
    for (int n = 2; n <= 6; ++n) {
      for (int l = 0; l + 1 < n; ++l) {
        const auto a = valid_interval(make_state(D, n, l, 1.0), Space::Momentum);
        const auto b = valid_interval(make_state(D, n, l + 1, 1.0), Space::Momentum);
        EXPECT_LE(b.lower, a.lower);
        EXPECT_GE(b.upper, a.upper);
      }
    }
  }
}

TEST(States, DomainErrorCitesInterval) {
  try {
    require_order(make_state(3, 1, 0, 1.0), 6.0, Space::Momentum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderOutOfDomain);
    EXPECT_NE(std::string(e.what()).find("(-3, 5)"), std::string::npos);
  }
}
