#pragma once

#include <span>
#include <vector>

#include "cmzv/index.hpp"
#include "cmzv/ncpoly.hpp"

namespace cmzv {

// A pair of strictly increasing maps f:{1..r}->{1..d}, g:{1..s}->{1..d}
// with Im f ∪ Im g = {1..d}; the combinatorial datum behind the harmonic
// products.  `confined` additionally demands g(1) <= f(i) <= g(s) for all i.
struct MergePair {
  std::vector<int> f, g;  // images, 1-based, strictly increasing
  int d = 0;
};

std::vector<MergePair> merge_pairs(int r, int s, bool confined);

// Shuffle product on all of h: bilinear, 1 ⧢ w = w ⧢ 1 = w and
// uw ⧢ u'w' = u(w ⧢ u'w') + u'(uw ⧢ w').
NcPoly shuffle(const NcPoly& a, const NcPoly& b);

// Harmonic product on h^1 (z-word combinations; constants allowed),
// defined by merge-map enumeration with collisions adding exponents.
NcPoly harmonic(const NcPoly& a, const NcPoly& b);

// Inner shuffle h x h_C -> h_C: single letters go to 0, otherwise the
// first/last letters of b are pinned and a is shuffled into the interior.
NcPoly inner_shuffle(const NcPoly& a, const NcPoly& b);

// Inner harmonic h^1 x h_C^1 -> h_C^1: the harmonic merge enumeration
// restricted to maps confined between the endpoints of b.
NcPoly inner_harmonic(const NcPoly& a, const NcPoly& b);

// Sum over lo <= n_1 < ... < n_r <= hi of prod n_i^-k_i (exact).
Rational ordered_power_sum(std::span<const int> exponents, long lo, long hi);

// The endpoint-pinned power sum on h_C^1: for a z-word z_{k_1}...z_{k_r},
// the sum over n_1 < ... < n_r with n_1 = p and n_r = q of prod n_i^-k_i;
// extended linearly.  Zero when no lattice point fits.  Requires p <= q.
Rational endpoint_power_sum(const NcPoly& w, long p, long q);

}  // namespace cmzv
