// Tour of the library: exact moments, a real order checked against quadrature,
// Rydberg and high-D limits, and one uncertainty relation.

#include <cstdio>

#include "hydromoments.hpp"

using namespace hydromoments;

int main() {
  const HydrogenicState ground = make_state(3, 1, 0, 1.0);
  std::printf("3D hydrogen ground state\n");
  for (int a : {-2, -1, 1, 2, 3, 4}) {
    const MomentResult p = p_moment(ground, a);
    std::printf("  <p^%-2d> = %-14s = %.15g\n", a, p.exact().str().c_str(), p.decimal());
  }
  for (int a : {-2, -1, 1, 2}) {
    const MomentResult r = position_moment(ground, a);
    std::printf("  <r^%-2d> = %-14s = %.15g\n", a, r.exact().str().c_str(), r.decimal());
  }

  const HydrogenicState s = make_state(5, 4, 1, 2.0);
  const double alpha = 1.37;
  const MomentResult sum = p_moment(s, alpha);
  const MomentResult quad = oracle::quad_p_moment(s, alpha);
  std::printf("\n%s, <p^%.2f>\n  single sum  %.15g +/- %.2g\n  quadrature  %.15g +/- %.2g\n", s.str().c_str(), alpha,
              sum.decimal(), sum.error_estimate, quad.decimal(), quad.error_estimate);

  std::printf("\nRydberg nS <p>, exact vs 2Z/(pi n)\n");
  for (int n : {10, 40, 160}) {
    const double exact = mean_momentum(make_state(3, n, 0, 1.0)).decimal();
    const double limit = rydberg_p(1.0, n, 1.0).leading;
    std::printf("  n = %-4d %.15g  %.15g  ratio-1 = %.3g\n", n, exact, limit, exact / limit - 1.0);
  }

  std::printf("\nHigh-D ground state <r>, exact vs corrected estimate\n");
  for (int D : {10, 40, 160}) {
    const HydrogenicState g = make_state(D, 1, 0, 1.0);
    const double exact = position_moment(g, 1.0).decimal();
    std::printf("  D = %-4d %.15g  %.15g\n", D, exact, highD(1.0, g, Space::Position).corrected);
  }

  std::printf("\nHeisenberg-like relations for %s, a = b = 2\n", s.str().c_str());
  for (const InequalityReport& rep : heisenberg_general(s, 2.0, 2.0)) {
    std::printf("  %-18s lhs %.10g  rhs %.10g  %s\n", std::string(to_string(rep.name)).c_str(), rep.lhs, rep.rhs,
                rep.satisfied ? "holds" : "VIOLATED");
  }
  return 0;
}
