// Acceptance gate: one line per criterion, exit status 1 if any fails.
//   acceptance          all criteria
//   acceptance 3 7      selected criteria

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hydromoments/gegenbauer_integrals.hpp"
#include "hydromoments/asymptotics.hpp"
#include "hydromoments/cli/verify.hpp"
#include "hydromoments/momentum.hpp"
#include "hydromoments/oracle/quadrature.hpp"
#include "hydromoments/position.hpp"
#include "hydromoments/uncertainty.hpp"

using namespace hydromoments;

namespace {

namespace tol {
constexpr double kinetic_seconds = 5.0;
constexpr double routes_seconds = 60.0;
constexpr double rydberg_seconds = 30.0;
constexpr double random_vs_quadrature = 1e-10;
constexpr int random_cases = 500;
constexpr double integral_relative = 1e-12;
constexpr double rydberg_ns_slope = -1.0, rydberg_ns_width = 0.2;
constexpr double circular_slope = -2.0, circular_width = 0.3;
constexpr double highd_slope = -2.0, highd_width = 0.3;
constexpr double fermion_constant = 1.17005, fermion_abs = 5e-6;
constexpr double thakkar_ratio = 0.578, thakkar_abs = 0.01;
constexpr double normalization = 1e-12;
constexpr double entropic_one = 1e-10;
}  // namespace tol

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) first_failure = why;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// D in 2..12, n <= 8, l < n, Z in {1, 2}.
std::vector<HydrogenicState> full_grid() { return cli::grid_states(cli::named_grid("full")); }

ExactValue exact(long num, long den, int pi_twice = 0) { return ExactValue(make_rational(num, den), pi_twice); }

double slope(const std::vector<double>& x, const std::vector<double>& y) { return cli::detail::slope(x, y); }

std::string fmt(double x, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void kinetic_identity(Outcome& o) {
  const auto t0 = Clock::now();
  long count = 0;
  for (const auto& s : full_grid()) {
    const Rational ratio = s.Z_exact() / s.eta();
    const bool ok = p_moment(s, 2.0, Mode::Exact).exact() == ExactValue(ratio * ratio);
    o.require(ok, s.str());
    ++count;
  }
  const double t = seconds_since(t0);
  o.require(t < tol::kinetic_seconds, "runtime " + fmt(t) + " s");
  o.detail << count << " states exact, " << fmt(t) << " s (limit " << tol::kinetic_seconds << " s)";
}

void ground_benchmarks(Outcome& o) {
  int count = 0;
  for (long Z : {1L, 2L, 3L}) {
    const auto s = make_state(3, 1, 0, static_cast<double>(Z));
    auto check = [&](const MomentResult& m, const ExactValue& want, const char* what) {
      o.require(m.exact() == want, std::string(what) + " Z=" + std::to_string(Z) + " gave " + m.exact().str());
      ++count;
    };
    check(p_moment(s, 1, Mode::Exact), exact(8 * Z, 3, -2), "<p>");
    check(p_moment(s, -1, Mode::Exact), exact(16, 3 * Z, -2), "<p^-1>");
    check(p_moment(s, -2, Mode::Exact), exact(5, Z * Z), "<p^-2>");
    check(p_moment(s, 4, Mode::Exact), exact(5 * Z * Z * Z * Z, 1), "<p^4>");
    check(position_moment(s, 1, Mode::Exact), exact(3, 2 * Z), "<r>");
    check(position_moment(s, 2, Mode::Exact), exact(3, Z * Z), "<r^2>");
  }
  o.detail << count << " exact equalities (Z = 1, 2, 3)";
}

void route_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  const auto routes = cli::suite_routes(cli::named_grid("full"));
  o.require(routes.failed == 0, routes.failures.empty() ? "routes" : routes.failures.front());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> Dd(2, 12), nd(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < tol::random_cases; ++i) {
    const int D = Dd(rng), n = nd(rng);
    const int l = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const auto s = make_state(D, n, l, unit(rng) < 0.5 ? 1.0 : 2.0);
    const double lo = -D - 2 * l, hi = D + 2 * l + 2;
    const double a = lo + (hi - lo) * (0.001 + 0.998 * unit(rng));
    try {
      const double q = oracle::quad_p_moment(s, a).decimal();
      for (double v : {p_moment(s, a, Mode::Auto, MomentumRoute::SingleSum).decimal(),
                       p_moment(s, a, Mode::Auto, MomentumRoute::Hyp5F4).decimal(),
                       p_moment_double_sum(s, a, Mode::Auto).decimal()}) {
        const double dev = std::abs(v / q - 1.0);
        worst = std::max(worst, dev);
        o.require(dev <= tol::random_vs_quadrature, s.str() + " alpha=" + fmt(a, 17));
      }
    } catch (const Error& e) {
      o.require(false, s.str() + " alpha=" + fmt(a, 17) + ": " + e.what());
    }
  }
  const double t = seconds_since(t0);
  o.require(t < tol::routes_seconds, "runtime " + fmt(t) + " s");
  o.detail << routes.passed << " exact integer-order comparisons, " << tol::random_cases
           << " random orders with worst deviation " << fmt(worst) << " (limit " << tol::random_vs_quadrature << "), "
           << fmt(t) << " s";
}

void reflection(Outcome& o) {
  const auto r = cli::suite_reflection(cli::named_grid("full"));
  o.require(r.failed == 0, r.failures.empty() ? "reflection" : r.failures.front());
  o.detail << r.passed << " exact identities";
}

void ns_digamma(Outcome& o) {
  for (int n = 1; n <= 10; ++n) {
    for (double Z : {1.0, 2.0}) {
      const ExactValue closed = inverse_momentum_3d_ns(n, Z).exact();
      const ExactValue general = p_moment(make_state(3, n, 0, Z), -1.0, Mode::Exact).exact();
      o.require(closed == general, "n=" + std::to_string(n) + ": " + closed.str() + " vs " + general.str());
    }
  }
  o.require(inverse_momentum_3d_ns(1, 1.0).exact() == exact(16, 3, -2), "n=1 is not 16/(3 pi)");
  o.detail << "n <= 10, Z = 1, 2 equal as rational multiples of 1/pi; n=1 gives "
           << inverse_momentum_3d_ns(1, 1.0).exact().str();
}

void integral_routes(Outcome& o) {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto s = make_state(3, n, l, 1.0);
      const auto a = gegenbauer_integrals(s);
      const double mean = mean_momentum(s).decimal(), inverse = inverse_momentum(s).decimal();
      const double d1 = std::abs(a.K1.to_double() * a.I / mean - 1.0);
      const double d2 = std::abs(a.K2.to_double() * a.J / inverse - 1.0);
      worst = std::max({worst, d1, d2});
      o.require(d1 <= tol::integral_relative && d2 <= tol::integral_relative, s.str());
    }
    const auto circ = gegenbauer_integrals(make_state(3, n, n - 1, 1.0));
    const Rational want = pow(Rational(2), 2 * n + 1) * pow(gamma_exact(Rational(n + 1)).coeff(), 2) /
                          gamma_exact(Rational(2 * n + 2)).coeff();
    o.require(circ.I_exact == ExactValue(want), "I_{n,n-1} for n=" + std::to_string(n));
  }
  o.require(gegenbauer_integrals(make_state(3, 1, 0, 1.0)).I_exact == exact(4, 3), "I_{1,0} != 4/3");
  o.detail << "worst relative deviation " << fmt(worst) << " (limit " << tol::integral_relative
           << "); I_{1,0} = 4/3 and I_{n,n-1} exact for n <= 6";
}

std::vector<double> over(const std::vector<double>& xs, const std::function<double(int)>& f) {
  std::vector<double> out;
  for (double x : xs) out.push_back(f(static_cast<int>(x)));
  return out;
}

/// Slope within width of target; a sequence of zeros has no slope and fails.
void slope_check(Outcome& o, const std::string& what, const std::vector<double>& xs, const std::vector<double>& errs,
                 double target, double width) {
  o.detail << what << ' ';
  if (*std::max_element(errs.begin(), errs.end()) < 1e-13) {
    o.detail << "zero; ";
    o.require(false, what + " deviation identically zero");
    return;
  }
  const double s = slope(xs, errs);
  o.detail << fmt(s) << "; ";
  o.require(std::abs(s - target) <= width, what + " slope " + fmt(s));
}

void rydberg(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<double> ns{20, 40, 80, 160};
  o.detail << "slopes: ";
  for (double a : {0.5, 2.0, 2.5}) {
    slope_check(o, "nS a=" + fmt(a), ns, over(ns, [&](int n) {
      return std::abs(p_moment(make_state(3, n, 0, 1.0), a).decimal() / rydberg_p(a, n, 1.0).leading - 1.0);
    }), tol::rydberg_ns_slope, tol::rydberg_ns_width);
  }
  for (double a : {0.5, 2.0, 2.5}) {
    slope_check(o, "circular a=" + fmt(a), ns, over(ns, [&](int n) {
      return std::abs(p_moment(make_state(3, n, n - 1, 1.0), a).decimal() / rydberg_circular_p(a, n, 1.0).corrected -
                      1.0);
    }), tol::circular_slope, tol::circular_width);
  }
  const double t = seconds_since(t0);
  o.require(t < tol::rydberg_seconds, "runtime " + fmt(t) + " s");
  o.detail << "targets " << tol::rydberg_ns_slope << "+/-" << tol::rydberg_ns_width << " and " << tol::circular_slope
           << "+/-" << tol::circular_width << ", " << fmt(t) << " s";
}

void high_dimension(Outcome& o) {
  const std::vector<double> Ds{16, 32, 64, 128};
  o.detail << "slopes: ";
  for (Space sp : {Space::Position, Space::Momentum}) {
    for (auto [n, l] : {std::pair{1, 0}, {2, 1}, {3, 0}}) {
      for (double a : {1.0, 2.0, 3.0}) {
        const std::string what = std::string(to_string(sp)) + "(" + std::to_string(n) + "," + std::to_string(l) +
                                 ") a=" + fmt(a);
        slope_check(o, what, Ds, over(Ds, [&](int D) {
          const auto s = make_state(D, n, l, 1.0);
          const double value = sp == Space::Position ? position_moment(s, a).decimal() : p_moment(s, a).decimal();
          return std::abs(value / highD(a, s, sp).corrected - 1.0);
        }), tol::highd_slope, tol::highd_width);
      }
    }
  }
  o.detail << "target " << tol::highd_slope << "+/-" << tol::highd_width;
}

void uncertainty(Outcome& o) {
  const auto r = cli::suite_uncertainty(cli::named_grid("full"));
  o.require(r.failed == 0, r.failures.empty() ? "uncertainty" : r.failures.front());
  const double constant = fermion_constant(3, 2.0, 2.0) * std::pow(2.0, -2.0 / 3.0);
  o.require(std::abs(constant - tol::fermion_constant) < tol::fermion_abs, "constant " + fmt(constant, 8));
  const auto ground = daubechies_thakkar(make_state(3, 1, 0, 1.0), 2.0);
  const double ratio = ground[0].rhs / ground[0].lhs;
  o.require(ground[0].satisfied && std::abs(ratio - tol::thakkar_ratio) <= tol::thakkar_abs, "ratio " + fmt(ratio));
  o.detail << r.passed << " rigorous checks, constant " << fmt(constant, 6) << ", ground rhs/lhs " << fmt(ratio, 6)
           << ", " << r.findings.size() << " soft findings";
  for (const auto& f : r.findings) o.detail << "\n      finding: " << f;
}

void oracle_consistency(Outcome& o) {
  double worst_norm = 0.0, worst_w = 0.0;
  const oracle::QuadratureSpec adaptive{oracle::Rule::AdaptiveGK};
  for (const auto& s : full_grid()) {
    try {
      const double nr = oracle::quad_r_moment(s, 0.0, adaptive).decimal();
      const double np = oracle::quad_p_moment(s, 0.0, adaptive).decimal();
      worst_norm = std::max({worst_norm, std::abs(nr - 1.0), std::abs(np - 1.0)});
      o.require(std::abs(nr - 1.0) <= tol::normalization && std::abs(np - 1.0) <= tol::normalization, s.str());
      if (s.l() == 0) {
        const double w = oracle::entropic_moment(s, 1.0);
        worst_w = std::max(worst_w, std::abs(w - 1.0));
        o.require(std::abs(w - 1.0) <= tol::entropic_one, s.str() + " W_1");
      }
    } catch (const Error& e) {
      o.require(false, s.str() + ": " + e.what());
    }
  }
  o.detail << "worst normalization error " << fmt(worst_norm) << " (limit " << tol::normalization
           << "), worst |W_1 - 1| " << fmt(worst_w) << " (limit " << tol::entropic_one << ")";
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Outcome&);
};

const Criterion criteria[] = {
    {1, "kinetic-energy identity", kinetic_identity},
    {2, "ground-state 3D benchmarks", ground_benchmarks},
    {3, "momentum route equivalence", route_equivalence},
    {4, "reflection identity", reflection},
    {5, "nS digamma formula", ns_digamma},
    {6, "Gegenbauer integral routes", integral_routes},
    {7, "Rydberg convergence rates", rydberg},
    {8, "high-D convergence rates", high_dimension},
    {9, "uncertainty suite", uncertainty},
    {10, "oracle self-consistency", oracle_consistency},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << o.detail.str();
    if (!o.pass) std::cout << "\n      first failure: " << o.first_failure;
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
