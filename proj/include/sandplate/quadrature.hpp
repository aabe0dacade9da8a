#pragma once

#include <vector>

namespace sandplate {

struct GaussRule {
  std::vector<double> points;   // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule with n points (exact for polynomials of degree 2n-1).
const GaussRule& gauss_rule(int n);

/// Integrate f over [a, b] with an n-point Gauss rule.
template <typename F>
double gauss_integrate(F&& f, double a, double b, int n) {
  const GaussRule& rule = gauss_rule(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.points[i]);
  return half * sum;
}

}  // namespace sandplate
