#pragma once

#include <span>
#include <vector>

#include "cmzv/index.hpp"
#include "cmzv/rational.hpp"

namespace cmzv {

enum class Arith { Exact, Float };

// Truncation is the box "all summation variables <= cutoff", which keeps
// the finite-cutoff set decompositions exact in exact mode.
struct TruncationSpec {
  long cutoff = 1000;
  Arith mode = Arith::Float;
};

// Nested sums over 0 < n_1 < ... < n_r (mzv) resp. <= (mzsv); the index
// must be admissible (divergent symbols are rejected).
Rational eval_mzv_exact(const Index& k, long cutoff);
double eval_mzv_float(const Index& k, long cutoff);
Rational eval_mzsv_exact(const Index& k, long cutoff);
double eval_mzsv_float(const Index& k, long cutoff);

// Cyclic sum over the wrapped chain region S; requires an admissible
// cyclic index.
Rational eval_cyc_exact(const CyclicIndex& k, long cutoff);
double eval_cyc_float(const CyclicIndex& k, long cutoff);

// Non-wrapped chain region S'; requires the first block != (1).
Rational eval_ribbon_exact(const CyclicIndex& k, long cutoff);
double eval_ribbon_float(const CyclicIndex& k, long cutoff);

// Region membership for integer tuples (series side) and real tuples
// (integral side).  Tuple arity must match the index shape: the depth
// profile for S/S', the weight profile for D/D'.
bool indicator_S(const CyclicIndex& k, std::span<const long> n);
bool indicator_Sprime(const CyclicIndex& k, std::span<const long> n);
bool indicator_D(const CyclicIndex& k, std::span<const double> t);
bool indicator_Dprime(const CyclicIndex& k, std::span<const double> t);

// Interval indicators.  Arguments must be oriented (p <= q resp. s <= s2);
// on the regions S and D the wrapped pairs are always oriented, so a
// violation is a caller bug.
int e_discrete(long p, long q, long n);
int e_cont(double s, double s2, double t);

// Checks sum_i E(n_{i,1}, n_{i,r_i}, n) = sum_i E(n_{(i+1 mod s),1}, n_{i,r_i}, n)
// for all probes n in 1..probe_max.  The point must lie in S.
bool check_e_identity_discrete(const CyclicIndex& k, std::span<const long> point,
                               long probe_max);

// Continuous analogue over probe values t in (0,1); the point must lie in D.
bool check_e_identity_cont(const CyclicIndex& k, std::span<const double> point,
                           std::span<const double> probes);

}  // namespace cmzv
