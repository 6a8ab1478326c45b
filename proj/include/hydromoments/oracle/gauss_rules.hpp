#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "hydromoments/oracle/polynomials.hpp"

namespace hydromoments::oracle {

enum class Rule { GaussGenLaguerre, GaussJacobi, AdaptiveGK };

struct QuadratureSpec {
  Rule rule = Rule::GaussGenLaguerre;
  /// Node count; zero picks k + 2 for the state at hand.
  long nodes = 0;
  double rel_tol = 1e-12;
};

/// Nodes and weights of a Gauss rule for a probability measure.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: eigenvalues of the Jacobi matrix give the nodes, which are then
/// polished by Newton steps on p_N; weights come from the Christoffel numbers
/// 1 / sum_j p_j(x)^2, which keeps small weights accurate to full relative precision.
inline GaussRule golub_welsch(const Recurrence& rec, long count) {
  if (count < 1) throw Error(ErrorCode::QuadratureFailure, "Gauss rule needs at least one node");
  Eigen::VectorXd diag(count), sub(std::max<long>(count - 1, 0));
  for (long j = 0; j < count; ++j) diag[j] = rec.a(j);
  for (long j = 1; j < count; ++j) sub[j - 1] = std::sqrt(rec.b(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::QuadratureFailure, "tridiagonal eigensolver did not converge");
  }

  GaussRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (long i = 0; i < count; ++i) {
    double x = solver.eigenvalues()[i];
    double christoffel = 0.0;
    for (int iter = 0; iter < 3; ++iter) {
      // p_N and p_N' by the recurrence, plus the Christoffel sum.
      double p_prev = 0.0, p = 1.0, d_prev = 0.0, d = 0.0, sum = 1.0;
      for (long j = 0; j < count; ++j) {
        const double sb_next = std::sqrt(rec.b(j + 1));
        const double sb = j > 0 ? std::sqrt(rec.b(j)) : 0.0;
        const double p_next = ((x - rec.a(j)) * p - sb * p_prev) / sb_next;
        const double d_next = (p + (x - rec.a(j)) * d - sb * d_prev) / sb_next;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        if (j + 1 < count) sum += p * p;
      }
      christoffel = sum;
      if (d == 0.0 || !std::isfinite(p / d)) break;
      const double step = p / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  return rule;
}

/// Process-wide cache of Gauss rules keyed by (rule, parameters, node count).
class RuleCache {
 public:
  static RuleCache& instance() {
    static RuleCache cache;
    return cache;
  }

  std::shared_ptr<const GaussRule> laguerre(double lambda, long count) {
    return lookup({Rule::GaussGenLaguerre, lambda, 0.0, count},
                  [&] { return golub_welsch(LaguerreRecurrence(lambda), count); });
  }

  std::shared_ptr<const GaussRule> jacobi(double alpha, double beta, long count) {
    return lookup({Rule::GaussJacobi, alpha, beta, count},
                  [&] { return golub_welsch(JacobiRecurrence(alpha, beta), count); });
  }

  size_t size() const {
    std::shared_lock lock(mutex_);
    return rules_.size();
  }

 private:
  using Key = std::tuple<Rule, double, double, long>;

  template <class Build>
  std::shared_ptr<const GaussRule> lookup(const Key& key, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      auto it = rules_.find(key);
      if (it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussRule>(build());
    std::unique_lock lock(mutex_);
    return rules_.emplace(key, std::move(rule)).first->second;
  }

  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const GaussRule>> rules_;
};

}  // namespace hydromoments::oracle
