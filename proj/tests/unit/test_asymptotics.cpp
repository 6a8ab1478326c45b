#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hydromoments/asymptotics.hpp"
#include "hydromoments/momentum.hpp"
#include "hydromoments/position.hpp"
#include "support/convergence.hpp"

using namespace hydromoments;
using hydromoments::testing::loglog_slope;

TEST(GammaRatio, Examples) {
  EXPECT_DOUBLE_EQ(gamma_ratio_asym(100, 1, 0), 100.0);
  EXPECT_DOUBLE_EQ(gamma_ratio_asym(50, 1.5, 0.5), 50.5);
  EXPECT_DOUBLE_EQ(gamma_ratio_asym(10, 0, 0), 1.0);
}

TEST(GammaRatio, AgreesWithLogGammaToSecondOrder) {
  for (double a : {-0.5, 0.25, 1.0, 2.5}) {
    for (double b : {0.0, 0.75, 3.0}) {
      std::vector<double> xs, errs;
      for (double x : {50.0, 100.0, 200.0, 400.0}) {
        const double exact = std::exp(log_gamma(x + a) - log_gamma(x + b));
        xs.push_back(x);
        errs.push_back(std::abs(gamma_ratio_asym(x, a, b) / exact - 1.0));
      }
      EXPECT_LT(errs.back(), 1e-4);
      if (errs.front() > 1e-13) {
        EXPECT_NEAR(loglog_slope(xs, errs), -2.0, 0.1) << a << " " << b;
      }
    }
  }
}

TEST(RydbergR, Examples) {
  const auto s = make_state(3, 7, 2, 2.0);
  const double e2z = 49.0 / 2.0;
  EXPECT_NEAR(rydberg_r(1, s).leading, 1.5 * e2z, 1e-12);
  EXPECT_NEAR(rydberg_r(2, s).leading, 2.5 * e2z * e2z, 1e-10);
  EXPECT_NEAR(rydberg_r(0, s).leading, 1.0, 1e-15);
  EXPECT_EQ(rydberg_r(1, s).corrected, rydberg_r(1, s).leading);
  EXPECT_EQ(rydberg_r(1, s).regime, Regime::Rydberg);
}

TEST(RydbergR, NegativeBranch) {
  // <r^-4> ~ 3 Z^4 / (2 eta^3 (L-1/2) L (L+1/2) (L+1) (L+3/2)).
  const auto s = make_state(5, 9, 3, 1.5);
  const double Z = 1.5, eta = s.eta_d(), L = s.L_d();
  const double expected = 3 * std::pow(Z, 4) / (2 * eta * eta * eta * (L - 0.5) * L * (L + 0.5) * (L + 1) * (L + 1.5));
  EXPECT_NEAR(rydberg_r(-4, s).leading / expected, 1.0, 1e-13);
  EXPECT_THROW(rydberg_r(-1.5, s), Error);
  EXPECT_THROW(rydberg_r(-(2 * L + 3), s), Error);
  try {
    rydberg_r(-1.5, s);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderOutOfRegime);
  }
}

TEST(RydbergR, ConvergesLikeOneOverNSquared) {
  for (double alpha : {1.0, 2.0, 0.5, -4.0}) {
    std::vector<double> ns, errs;
    for (int n : {20, 40, 80, 160}) {
      const auto s = make_state(3, n, 1, 1.0);
      ns.push_back(n);
      errs.push_back(std::abs(r_moment(s, alpha).decimal() / rydberg_r(alpha, s).leading - 1.0));
    }
    EXPECT_NEAR(loglog_slope(ns, errs), -2.0, 0.1) << alpha;
  }
}

TEST(RydbergP, Examples) {
  EXPECT_DOUBLE_EQ(rydberg_p(1, 10, 3).leading, 6.0 / (std::numbers::pi * 10));
  EXPECT_NEAR(rydberg_p(2, 10, 3).leading, 0.09, 1e-15);
  EXPECT_NEAR(rydberg_p(0, 10, 3).leading, 1.0, 1e-15);
  // Continuous through alpha = 1.
  EXPECT_NEAR(rydberg_p(1 + 1e-7, 10, 3).leading, rydberg_p(1, 10, 3).leading, 1e-7);
  EXPECT_THROW(rydberg_p(3, 10, 1), Error);
  EXPECT_THROW(rydberg_p(-1, 10, 1), Error);
}

TEST(RydbergP, ApproachesExactValues) {
  for (double alpha : {0.5, 1.0, 1.5, 2.5}) {
    double previous = 1.0;
    for (int n : {20, 40, 80, 160}) {
      const auto s = make_state(3, n, 0, 1.0);
      const double err = std::abs(p_moment(s, alpha).decimal() / rydberg_p(alpha, n, 1).leading - 1.0);
      EXPECT_LT(err, previous) << alpha << " " << n;
      previous = err;
    }
    EXPECT_LT(previous, 0.03);
  }
}

TEST(RydbergCircularP, Examples) {
  const auto e1 = rydberg_circular_p(1, 8, 1);
  EXPECT_DOUBLE_EQ(e1.corrected, e1.leading * (1 - 1.0 / 32));
  const auto e2 = rydberg_circular_p(2, 8, 2);
  EXPECT_DOUBLE_EQ(e2.corrected, e2.leading);
  EXPECT_DOUBLE_EQ(e2.leading, 1.0 / 16);
  EXPECT_EQ(rydberg_circular_p(0, 8, 2).corrected, 1.0);
}

TEST(RydbergCircularP, ConvergesLikeOneOverNSquared) {
  for (double alpha : {-1.5, -1.0, 0.5, 1.0, 2.5, 3.0}) {
    std::vector<double> ns, errs;
    for (int n : {20, 40, 80, 160}) {
      const auto s = make_state(3, n, n - 1, 1.0);
      ns.push_back(n);
      errs.push_back(std::abs(p_moment(s, alpha).decimal() / rydberg_circular_p(alpha, n, 1).corrected - 1.0));
    }
    EXPECT_NEAR(loglog_slope(ns, errs), -2.0, 0.3) << alpha;
  }
}

TEST(RydbergInverseP, Examples) {
  EXPECT_NEAR(rydberg_inverse_p(100, 1, RydbergFamily::Circular).corrected, 100.75, 1e-12);
  // Large-n formula evaluated at n = 1; no accuracy claim there.
  const double ns1 = 4 / std::numbers::pi * (std::log(4.0) + euler_gamma - 0.5 - 0.5 - 1.0 / 12);
  EXPECT_NEAR(rydberg_inverse_p(1, 1, RydbergFamily::NS).corrected, ns1, 1e-14);
  EXPECT_NEAR(ns1, 1.12067, 1e-5);
  EXPECT_NEAR(rydberg_inverse_p(5, 2, RydbergFamily::NS).corrected,
              rydberg_inverse_p(5, 1, RydbergFamily::NS).corrected / 2, 1e-14);
}

TEST(RydbergInverseP, RatioToExactTendsToOne) {
  for (auto family : {RydbergFamily::Circular, RydbergFamily::NS}) {
    double previous = 1.0;
    for (int n : {10, 20, 40, 80, 160}) {
      const auto s = make_state(3, n, family == RydbergFamily::Circular ? n - 1 : 0, 1.0);
      const double err = std::abs(inverse_momentum(s).decimal() / rydberg_inverse_p(n, 1, family).corrected - 1.0);
      EXPECT_LT(err, previous);
      previous = err;
    }
    EXPECT_LT(previous, 1e-3);
  }
}

TEST(HighD, Examples) {
  const auto circ = make_state(20, 4, 3, 1.5);
  const auto p2 = highD(2, circ, Space::Momentum);
  EXPECT_DOUBLE_EQ(p2.corrected, p2.leading);
  EXPECT_NEAR(p2.leading, std::pow(3.0 / 20, 2), 1e-16);
  const auto ground = make_state(20, 1, 0, 1.0);
  EXPECT_NEAR(highD(1, ground, Space::Position).corrected, 100.0 * (1 - 1.0 / 20), 1e-12);
  EXPECT_EQ(highD(0, make_state(30, 3, 1, 2.0), Space::Momentum).corrected, 1.0);
  EXPECT_EQ(highD(0, make_state(30, 1, 0, 2.0), Space::Position).corrected, 1.0 - 1.0 / 30);
  EXPECT_EQ(highD(0, make_state(30, 3, 1, 2.0), Space::Position).leading, 1.0);
  EXPECT_EQ(highD(1, ground, Space::Position).regime, Regime::HighD);
  EXPECT_THROW(highD(-20, ground, Space::Position), Error);
  EXPECT_THROW(highD(22, ground, Space::Momentum), Error);
}

TEST(HighD, CircularSpecialization) {
  for (int D : {10, 40}) {
    for (int n : {1, 2, 5}) {
      const auto s = make_state(D, n, n - 1, 1.0);
      for (double a : {-2.0, 0.5, 3.0}) {
        EXPECT_NEAR(highD(a, s, Space::Position).corrected / highD(a, s, Space::Position).leading,
                    1 + (a + 1) * (4 * n + a - 6) / (2.0 * D), 1e-14);
        EXPECT_NEAR(highD(a, s, Space::Momentum).corrected / highD(a, s, Space::Momentum).leading,
                    1 + a * (a - 2) / (2.0 * D), 1e-14);
      }
    }
  }
}

TEST(HighD, ExactForGroundStateMeanRadius) {
  for (int D : {16, 32, 64, 128}) {
    const auto s = make_state(D, 1, 0, 1.0);
    EXPECT_NEAR(r_moment(s, 1).decimal() / highD(1, s, Space::Position).corrected, 1.0, 1e-14);
  }
}

TEST(HighD, LeadingOrderApproachesExact) {
  for (auto [n, l] : {std::pair{1, 0}, {2, 1}, {3, 0}}) {
    for (double a : {1.0, 2.0, 3.0}) {
      for (Space sp : {Space::Position, Space::Momentum}) {
        double previous = INFINITY;
        for (int D : {16, 32, 64, 128}) {
          const auto s = make_state(D, n, l, 1.0);
          const double exact = sp == Space::Position ? r_moment(s, a).decimal() : p_moment(s, a).decimal();
          const double err = std::abs(exact / highD(a, s, sp).leading - 1.0);
          EXPECT_LT(err, previous) << n << l << " " << a << " D=" << D;
          previous = err;
        }
        EXPECT_LT(previous, 0.5);
      }
    }
  }
}
