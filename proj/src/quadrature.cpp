#include "haffsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "haffsim/errors.hpp"

namespace haffsim {

namespace {

// Newton iteration on Legendre polynomials; standard construction of
// the Gauss-Legendre rule to machine precision.
GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

namespace {

struct AdaptiveState {
  const std::function<double(double)>* f;
  double abs_tol;
  double achieved = 0.0;
  int max_depth = 48;
};

double refine(AdaptiveState& st, double a, double b, double coarse, double budget, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = integrate_fixed(*st.f, a, mid);
  const double right = integrate_fixed(*st.f, mid, b);
  const double err = std::abs(left + right - coarse);
  if (err <= budget || depth >= st.max_depth) {
    if (depth >= st.max_depth && err > budget)
      throw NumericalError("adaptive quadrature did not converge", err);
    st.achieved += err;
    return left + right;
  }
  return refine(st, a, mid, left, 0.5 * budget, depth + 1) +
         refine(st, mid, b, right, 0.5 * budget, depth + 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breaks) {
  if (a == b) return 0.0;

  std::vector<double> cuts{a, b};
  for (double c : breaks)
    if (c > a && c < b) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());

  // coarse pass fixes the absolute budget
  double coarse_total = 0.0;
  std::vector<double> coarse(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    coarse[i] = integrate_fixed(f, cuts[i], cuts[i + 1]);
    coarse_total += std::abs(coarse[i]);
  }
  const double abs_tol = std::max(rel_tol * coarse_total, 1e-300);

  AdaptiveState st{&f, abs_tol};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double span = (cuts[i + 1] - cuts[i]) / (b - a);
    total += refine(st, cuts[i], cuts[i + 1], coarse[i], abs_tol * span, 0);
  }
  return total;
}

} // namespace haffsim
