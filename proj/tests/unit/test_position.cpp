#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hydromoments/position.hpp"

using namespace hydromoments;

namespace {

ExactValue exact_r(int D, int n, int l, double Z, int alpha) {
  return r_moment(make_state(D, n, l, Z), alpha, Mode::Exact).exact();
}

}  // namespace

TEST(RMoment, Examples) {
  EXPECT_EQ(exact_r(3, 2, 1, 1.0, 1), ExactValue(5));
  EXPECT_EQ(exact_r(3, 1, 0, 1.0, 2), ExactValue(3));
  for (int D = 2; D <= 6; ++D) {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) EXPECT_EQ(exact_r(D, n, l, 2.5, 0), ExactValue(1));
    }
  }
}

TEST(RMoment, HydrogenLiterature) {
  // 3D hydrogen: <r> for 2s is 6, <r^-1> is 1/n^2, <r^-3> for 2p is 1/24.
  EXPECT_EQ(exact_r(3, 2, 0, 1.0, 1), ExactValue(6));
  EXPECT_EQ(exact_r(3, 3, 2, 1.0, -1), ExactValue(make_rational(1, 9)));
  EXPECT_EQ(exact_r(3, 2, 1, 1.0, -3), ExactValue(make_rational(1, 24)));
  EXPECT_EQ(exact_r(3, 3, 2, 1.0, -3), ExactValue(make_rational(1, 405)));
}

TEST(RMomentClosed, Examples) {
  const auto closed = [](int D, int n, int l, double Z, int alpha) {
    return r_moment_closed(make_state(D, n, l, Z), alpha).exact();
  };
  EXPECT_EQ(closed(3, 2, 1, 1.0, 2), ExactValue(30));
  EXPECT_EQ(closed(3, 2, 0, 1.0, -1), ExactValue(make_rational(1, 4)));
  EXPECT_EQ(closed(3, 1, 0, 2.0, -2), ExactValue(8));
  try {
    r_moment_closed(make_state(3, 3, 2, 1.0), -5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedArgument);
  }
}

TEST(RMomentClosed, VanishingFactorsLieOutsideDomain) {
  // L = 3/2 zeroes a factor of the <r^-6> denominator, but alpha = -6 is then excluded.
  try {
    r_moment_closed(make_state(4, 3, 1, 1.0), -6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderOutOfDomain);
  }
  EXPECT_NO_THROW(r_moment_closed(make_state(7, 1, 0, 1.0), -6));
}

TEST(RMomentClosed, AgreesWithHypergeometricOnGrid) {
  for (int D = 2; D <= 12; ++D) {
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        const auto s = make_state(D, n, l, 1.75);
        for (int alpha : closed_position_orders) {
          if (!check_order(s, {static_cast<double>(alpha), Space::Position})) continue;
          ExactValue closed;
          try {
            closed = r_moment_closed(s, alpha).exact();
          } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::SingularDenominator);
            continue;
          }
          EXPECT_EQ(closed, r_moment(s, alpha, Mode::Exact).exact())
              << s.str() << " alpha=" << alpha;
        }
      }
    }
  }
}

TEST(RMomentGround, Examples) {
  EXPECT_EQ(r_moment_ground(3, 1.0, 1.0).exact(), ExactValue(make_rational(3, 2)));
  EXPECT_EQ(r_moment_ground(3, 1.0, 0.0).exact(), ExactValue(1));
  EXPECT_EQ(r_moment_ground(5, 1.0, -1.0).exact(), ExactValue(make_rational(1, 4)));
  EXPECT_THROW(r_moment_ground(3, 1.0, -3.0), Error);
}

TEST(RMomentGround, AgreesWithGeneralFormula) {
  std::mt19937_64 rng(7);
  for (int D = 2; D <= 12; ++D) {
    for (int alpha = -D + 1; alpha <= 8; ++alpha) {
      EXPECT_EQ(r_moment_ground(D, 0.75, alpha).exact(),
                r_moment(make_state(D, 1, 0, 0.75), alpha).exact());
    }
    std::uniform_real_distribution<double> a(-D + 0.01, 9.0);
    for (int i = 0; i < 20; ++i) {
      const double alpha = a(rng);
      const auto g = r_moment_ground(D, 1.3, alpha, Mode::Float);
      const auto r = r_moment(make_state(D, 1, 0, 1.3), alpha, Mode::Float);
      EXPECT_NEAR(g.decimal(), r.decimal(), 1e-12 * g.decimal());
    }
  }
}

TEST(RMoment, FloatMatchesExactWithinBound) {
  for (int D = 2; D <= 10; ++D) {
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        const auto s = make_state(D, n, l, 1.0);
        for (int alpha = -D - 2 * l + 1; alpha <= 6; ++alpha) {
          const double exact = r_moment(s, alpha, Mode::Exact).decimal();
          const auto approx = r_moment(s, alpha, Mode::Float);
          EXPECT_LE(std::abs(approx.decimal() - exact), approx.error_estimate + 1e-300)
              << s.str() << " alpha=" << alpha;
          EXPECT_LT(approx.error_estimate, 1e-10 * exact);
        }
      }
    }
  }
}

TEST(RMoment, PositivityAndCauchySchwarz) {
  std::mt19937_64 rng(11);
  for (int D = 2; D <= 9; ++D) {
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l < n; ++l) {
        const auto s = make_state(D, n, l, 2.0);
        const double bound = D + 2 * l;
        std::uniform_real_distribution<double> a(0.0, bound);
        for (int i = 0; i < 5; ++i) {
          const double alpha = a(rng) * 0.999;
          const double plus = r_moment(s, alpha).decimal();
          const double minus = r_moment(s, -alpha).decimal();
          EXPECT_GT(plus, 0.0);
          EXPECT_GT(minus, 0.0);
          EXPECT_GE(plus * minus, 1.0 - 1e-12);
        }
      }
    }
  }
}

TEST(RMoment, Errors) {
  const auto s = make_state(3, 1, 0, 1.0);
  try {
    r_moment(s, -3.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderOutOfDomain);
  }
  EXPECT_THROW(r_moment(s, 0.5, Mode::Exact), Error);
  EXPECT_NO_THROW(r_moment(s, 0.5, Mode::Float));
}

TEST(RMoment, DefaultRouteUsesClosedForms) {
  const auto s = make_state(3, 2, 1, 1.0);
  EXPECT_EQ(position_moment(s, 2.0).method, Method::ClosedForm);
  EXPECT_EQ(position_moment(s, 3.0).method, Method::Hyp3F2);
  EXPECT_EQ(position_moment(s, 2.5).method, Method::Hyp3F2);
}
