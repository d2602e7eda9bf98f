#include "cmzv/eval.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cmzv {

namespace {

enum class Rel : uint8_t { First, Less, LessEq, GreaterEq };

struct ChainFactor {
  int exponent;
  Rel rel;  // relation of this variable to the previous one
};

using Chain = std::vector<ChainFactor>;

Chain index_chain(const Index& k, Rel step) {
  Chain ch;
  const auto& parts = k.parts();
  for (size_t i = 0; i < parts.size(); ++i)
    ch.push_back({parts[i], i == 0 ? Rel::First : step});
  return ch;
}

// Chain for S'/S: strict increase inside blocks, >= across block borders.
Chain cyclic_chain(const CyclicIndex& k) {
  Chain ch;
  for (const auto& block : k.blocks())
    for (size_t j = 0; j < block.parts().size(); ++j)
      ch.push_back({block.parts()[j],
                    ch.empty() ? Rel::First : (j == 0 ? Rel::GreaterEq : Rel::Less)});
  return ch;
}

// Compensated accumulator for the float path.
struct Neumaier {
  double s = 0, c = 0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double get() const { return s + c; }
};

template <class T>
std::vector<T> power_table(long n_max, int exponent) {
  std::vector<T> w(static_cast<size_t>(n_max) + 1, T(0));
  for (long n = 1; n <= n_max; ++n) {
    if constexpr (std::is_same_v<T, Rational>)
      w[n] = inv_pow(n, exponent);
    else
      w[n] = std::pow(static_cast<double>(n), -static_cast<double>(exponent));
  }
  return w;
}

// prev[n] = sum over m related to n of g[m]; ascending n throughout so the
// float path has a fixed accumulation order.
template <class T>
void relate(Rel rel, const std::vector<T>& g, std::vector<T>& prev) {
  const long n_max = static_cast<long>(g.size()) - 1;
  switch (rel) {
    case Rel::Less: {
      T run(0);
      for (long n = 1; n <= n_max; ++n) {
        prev[n] = run;
        run += g[n];
      }
      break;
    }
    case Rel::LessEq: {
      T run(0);
      for (long n = 1; n <= n_max; ++n) {
        run += g[n];
        prev[n] = run;
      }
      break;
    }
    case Rel::GreaterEq: {
      T run(0);
      for (long n = n_max; n >= 1; --n) {
        run += g[n];
        prev[n] = run;
      }
      break;
    }
    case Rel::First:
      break;
  }
}

template <class T>
T sum_range(const std::vector<T>& g, long lo) {
  if constexpr (std::is_same_v<T, Rational>) {
    T total(0);
    for (long n = lo; n < static_cast<long>(g.size()); ++n) total += g[n];
    return total;
  } else {
    Neumaier acc;
    for (long n = lo; n < static_cast<long>(g.size()); ++n) acc.add(g[n]);
    return acc.get();
  }
}

template <class T>
T eval_chain(const Chain& chain, long n_max) {
  std::vector<T> g, prev(static_cast<size_t>(n_max) + 1, T(0));
  for (const auto& f : chain) {
    auto w = power_table<T>(n_max, f.exponent);
    if (f.rel == Rel::First) {
      g = std::move(w);
    } else {
      relate(f.rel, g, prev);
      for (long n = 1; n <= n_max; ++n) g[n] = w[n] * prev[n];
    }
  }
  return sum_range(g, 1);
}

// Wrapped chain: v_last >= v_first.  The first variable is pinned to every
// value a in turn; O(len(chain) * n_max^2).
template <class T>
T eval_chain_wrapped(const Chain& chain, long n_max) {
  std::vector<std::vector<T>> tables;
  tables.reserve(chain.size());
  for (const auto& f : chain) tables.push_back(power_table<T>(n_max, f.exponent));

  std::vector<T> g(static_cast<size_t>(n_max) + 1, T(0));
  std::vector<T> prev(static_cast<size_t>(n_max) + 1, T(0));
  T total(0);
  [[maybe_unused]] Neumaier facc;
  for (long a = 1; a <= n_max; ++a) {
    std::fill(g.begin(), g.end(), T(0));
    g[a] = tables[0][a];
    for (size_t j = 1; j < chain.size(); ++j) {
      relate(chain[j].rel, g, prev);
      for (long n = 1; n <= n_max; ++n) g[n] = tables[j][n] * prev[n];
    }
    T part = sum_range(g, a);
    if constexpr (std::is_same_v<T, Rational>)
      total += part;
    else
      facc.add(part);
  }
  if constexpr (std::is_same_v<T, Rational>)
    return total;
  else
    return facc.get();
}

void require_cutoff(long cutoff) {
  if (cutoff < 1) throw std::invalid_argument("eval: cutoff must be >= 1");
}

void require_admissible(const Index& k) {
  if (!k.admissible())
    throw std::domain_error("eval: index " + k.to_text() + " is divergent");
}

void require_admissible(const CyclicIndex& k) {
  if (!k.admissible())
    throw std::domain_error("eval: cyclic index " + k.to_text() + " is divergent");
}

void require_ribbon_shape(const CyclicIndex& k) {
  require_admissible(k);
  if (k.blocks().front().parts() == std::vector<int>{1})
    throw std::domain_error("eval: ribbon requires first block != (1)");
}

template <class T>
T eval_cyc_impl(const CyclicIndex& k, long cutoff) {
  require_cutoff(cutoff);
  require_admissible(k);
  Chain ch = cyclic_chain(k);
  // For a single block the wrap condition is implied by the chain.
  if (k.block_count() == 1) return eval_chain<T>(ch, cutoff);
  return eval_chain_wrapped<T>(ch, cutoff);
}

template <class T>
T eval_ribbon_impl(const CyclicIndex& k, long cutoff) {
  require_cutoff(cutoff);
  require_ribbon_shape(k);
  return eval_chain<T>(cyclic_chain(k), cutoff);
}

}  // namespace

Rational eval_mzv_exact(const Index& k, long cutoff) {
  require_cutoff(cutoff);
  require_admissible(k);
  return eval_chain<Rational>(index_chain(k, Rel::Less), cutoff);
}

double eval_mzv_float(const Index& k, long cutoff) {
  require_cutoff(cutoff);
  require_admissible(k);
  return eval_chain<double>(index_chain(k, Rel::Less), cutoff);
}

Rational eval_mzsv_exact(const Index& k, long cutoff) {
  require_cutoff(cutoff);
  require_admissible(k);
  return eval_chain<Rational>(index_chain(k, Rel::LessEq), cutoff);
}

double eval_mzsv_float(const Index& k, long cutoff) {
  require_cutoff(cutoff);
  require_admissible(k);
  return eval_chain<double>(index_chain(k, Rel::LessEq), cutoff);
}

Rational eval_cyc_exact(const CyclicIndex& k, long cutoff) {
  return eval_cyc_impl<Rational>(k, cutoff);
}

double eval_cyc_float(const CyclicIndex& k, long cutoff) {
  return eval_cyc_impl<double>(k, cutoff);
}

Rational eval_ribbon_exact(const CyclicIndex& k, long cutoff) {
  return eval_ribbon_impl<Rational>(k, cutoff);
}

double eval_ribbon_float(const CyclicIndex& k, long cutoff) {
  return eval_ribbon_impl<double>(k, cutoff);
}

namespace {

template <class T>
bool indicator_chain(std::span<const T> v, std::span<const int> sizes, bool wrap,
                     bool strict_border) {
  size_t pos = 0;
  bool ok = true;
  T first = v[0];
  T prev_last{};
  for (size_t b = 0; b < sizes.size(); ++b) {
    for (int j = 0; j < sizes[b]; ++j, ++pos) {
      if (j > 0 && !(v[pos - 1] < v[pos])) ok = false;
      if (j == 0 && b > 0) {
        if (strict_border ? !(prev_last > v[pos]) : !(prev_last >= v[pos]))
          ok = false;
      }
    }
    prev_last = v[pos - 1];
  }
  if (wrap) {
    if (strict_border ? !(prev_last > first) : !(prev_last >= first)) ok = false;
  }
  return ok;
}

std::vector<int> depth_profile(const CyclicIndex& k) {
  std::vector<int> out;
  for (const auto& b : k.blocks()) out.push_back(b.depth());
  return out;
}

std::vector<int> weight_profile(const CyclicIndex& k) {
  std::vector<int> out;
  for (const auto& b : k.blocks()) out.push_back(b.weight());
  return out;
}

void require_arity(size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want)
    throw std::invalid_argument(std::string(what) + ": arity mismatch");
}

}  // namespace

bool indicator_S(const CyclicIndex& k, std::span<const long> n) {
  auto sizes = depth_profile(k);
  require_arity(n.size(), k.total_depth(), "indicator_S");
  return indicator_chain<long>(n, sizes, /*wrap=*/true, /*strict_border=*/false);
}

bool indicator_Sprime(const CyclicIndex& k, std::span<const long> n) {
  auto sizes = depth_profile(k);
  require_arity(n.size(), k.total_depth(), "indicator_Sprime");
  return indicator_chain<long>(n, sizes, /*wrap=*/false, /*strict_border=*/false);
}

bool indicator_D(const CyclicIndex& k, std::span<const double> t) {
  auto sizes = weight_profile(k);
  require_arity(t.size(), k.weight(), "indicator_D");
  return indicator_chain<double>(t, sizes, /*wrap=*/true, /*strict_border=*/true);
}

bool indicator_Dprime(const CyclicIndex& k, std::span<const double> t) {
  auto sizes = weight_profile(k);
  require_arity(t.size(), k.weight(), "indicator_Dprime");
  return indicator_chain<double>(t, sizes, /*wrap=*/false, /*strict_border=*/true);
}

int e_discrete(long p, long q, long n) {
  assert(p <= q && "e_discrete: arguments must be oriented");
  return (p <= n && n <= q) ? 1 : 0;
}

int e_cont(double s, double s2, double t) {
  assert(s <= s2 && "e_cont: arguments must be oriented");
  return (s <= t && t <= s2) ? 1 : 0;
}

namespace {

// First and last chain positions of every block, for either profile.
struct BlockEnds {
  std::vector<size_t> first, last;
};

BlockEnds block_ends(const std::vector<int>& sizes) {
  BlockEnds be;
  size_t pos = 0;
  for (int sz : sizes) {
    be.first.push_back(pos);
    be.last.push_back(pos + sz - 1);
    pos += sz;
  }
  return be;
}

template <class T, class Probe>
bool e_identity_at(const CyclicIndex& k, std::span<const T> point,
                   const std::vector<int>& sizes, Probe probe) {
  const auto be = block_ends(sizes);
  const int s = k.block_count();
  int lhs = 0, rhs = 0;
  for (int i = 0; i < s; ++i) {
    lhs += probe(point[be.first[i]], point[be.last[i]]);
    rhs += probe(point[be.first[(i + 1) % s]], point[be.last[i]]);
  }
  return lhs == rhs;
}

}  // namespace

bool check_e_identity_discrete(const CyclicIndex& k, std::span<const long> point,
                               long probe_max) {
  if (!indicator_S(k, point))
    throw std::invalid_argument("check_e_identity_discrete: point not in S");
  auto sizes = depth_profile(k);
  for (long n = 1; n <= probe_max; ++n)
    if (!e_identity_at<long>(k, point, sizes,
                             [n](long p, long q) { return e_discrete(p, q, n); }))
      return false;
  return true;
}

bool check_e_identity_cont(const CyclicIndex& k, std::span<const double> point,
                           std::span<const double> probes) {
  if (!indicator_D(k, point))
    throw std::invalid_argument("check_e_identity_cont: point not in D");
  auto sizes = weight_profile(k);
  for (double t : probes)
    if (!e_identity_at<double>(
            k, point, sizes,
            [t](double p, double q) { return e_cont(p, q, t); }))
      return false;
  return true;
}

}  // namespace cmzv
