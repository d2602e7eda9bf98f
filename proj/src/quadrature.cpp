#include "cmzv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cmzv/ncpoly.hpp"

namespace cmzv {

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  // Newton on P_n with the usual asymptotic initial guess; nodes mapped
  // from (-1,1) to (0,1).
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double p0 = 0, p1 = 0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
      }
      double dp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = 0.0;
    for (int j = 0; j < order; ++j) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
    }
    double dp = order * (x * p0 - p1) / (x * x - 1.0);
    rule.nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

namespace {

double letter_form(Letter l, double t) {
  return l == Letter::X ? 1.0 / t : 1.0 / (1.0 - t);
}

double ordered_integral_rec(const Word& w, int i, double tprev, double hi,
                            const GaussRule& rule) {
  if (i == w.weight()) return 1.0;
  double total = 0;
  const double span = hi - tprev;
  for (size_t j = 0; j < rule.nodes.size(); ++j) {
    double t = tprev + span * rule.nodes[j];
    total += rule.weights[j] * letter_form(w.at(i), t) *
             ordered_integral_rec(w, i + 1, t, hi, rule);
  }
  return total * span;
}

}  // namespace

double ordered_integral(const Word& w, double lo, double hi, int nodes) {
  if (!(0.0 < lo && lo < hi && hi < 1.0))
    throw std::invalid_argument("ordered_integral: need 0 < lo < hi < 1");
  return ordered_integral_rec(w, 0, lo, hi, gauss_legendre(nodes));
}

QuadResult quad_fixed_endpoints(const Word& w, double p, double q) {
  if (!(0.0 < p && p < q && q < 1.0))
    throw std::invalid_argument("quad_fixed_endpoints: need 0 < p < q < 1");
  const int k = w.weight();
  if (k > 4) throw std::invalid_argument("quad_fixed_endpoints: weight must be <= 4");
  if (k == 0) throw std::invalid_argument("quad_fixed_endpoints: empty word");
  if (k == 1) return {0.0, 0.0};
  const double ends = letter_form(w.front(), p) * letter_form(w.back(), q);
  if (k == 2) return {ends, 0.0};
  const Word interior = w.interior();
  const double coarse = ordered_integral(interior, p, q, 24);
  const double fine = ordered_integral(interior, p, q, 48);
  return {ends * fine, std::abs(ends) * std::abs(fine - coarse)};
}

double mzv_via_integral(const Word& w) {
  if (!in_h0(NcPoly(w)) || w.is_unit())
    throw std::invalid_argument("mzv_via_integral: word must lie in y h x");
  if (w.weight() > 4)
    throw std::invalid_argument("mzv_via_integral: weight must be <= 4");
  const int nodes = w.weight() <= 2 ? 96 : (w.weight() == 3 ? 64 : 40);
  std::vector<double> vals;
  for (int j = 4; j <= 12; ++j) {
    double eps = std::ldexp(1.0, -j);
    vals.push_back(ordered_integral(w, eps, 1.0 - eps, nodes));
  }
  // Two Richardson stages at ratio 2 remove the eps*log(eps) and eps terms.
  std::vector<double> d1, d2;
  for (size_t i = 0; i + 1 < vals.size(); ++i) d1.push_back(2 * vals[i + 1] - vals[i]);
  for (size_t i = 0; i + 1 < d1.size(); ++i) d2.push_back(2 * d1[i + 1] - d1[i]);
  return d2.back();
}

}  // namespace cmzv
