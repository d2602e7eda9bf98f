#pragma once

#include <vector>

#include "cmzv/word.hpp"

namespace cmzv {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
};

// Gauss-Legendre nodes/weights on (0,1), cached per order.
struct GaussRule {
  std::vector<double> nodes, weights;
};
const GaussRule& gauss_legendre(int order);

// Ordered integral of the letter forms (dt/t for x, dt/(1-t) for y) over
// lo < t_1 < ... < t_k < hi, by tensorized Gauss-Legendre after flattening
// each t_i onto (t_{i-1}, hi).
double ordered_integral(const Word& w, double lo, double hi, int nodes);

// The endpoint-pinned iterated integral on h_C: t_1 = p and t_k = q are
// fixed, the interior is integrated over p < t_2 < ... < t_{k-1} < q, and
// the endpoint forms contribute as factors.  Single letters give 0.
// Requires 0 < p < q < 1 and weight <= 4.
QuadResult quad_fixed_endpoints(const Word& w, double p, double q);

// Full-interval ordered integral of a word in h^0, evaluated on the
// eps-shrunken simplex and Richardson-extrapolated eps -> 0 (the endpoint
// singularities decay like eps*log(eps) + eps).  Weight <= 4.
double mzv_via_integral(const Word& w);

}  // namespace cmzv
