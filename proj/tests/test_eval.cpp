#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cmzv/enumerate.hpp"
#include "cmzv/eval.hpp"
#include "cmzv/products.hpp"
#include "cmzv/quadrature.hpp"
#include "cmzv/relations.hpp"

using namespace cmzv;

namespace {

// Brute-force oracle: enumerate the whole box and filter by the region
// indicator; completely independent of the chain DP.
Rational brute_cyc(const CyclicIndex& k, long n_max, bool wrap) {
  const int depth = k.total_depth();
  std::vector<int> exps;
  for (const auto& b : k.blocks())
    for (int p : b.parts()) exps.push_back(p);
  std::vector<long> tuple(depth, 1);
  Rational total(0);
  while (true) {
    bool in = wrap ? indicator_S(k, tuple) : indicator_Sprime(k, tuple);
    if (in) {
      Rational prod(1);
      for (int i = 0; i < depth; ++i) prod *= inv_pow(tuple[i], exps[i]);
      total += prod;
    }
    int pos = depth - 1;
    while (pos >= 0 && tuple[pos] == n_max) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return total;
}

Rational brute_mzv(const Index& k, long n_max, bool strict) {
  const int r = k.depth();
  std::vector<long> n(r, 1);
  Rational total(0);
  while (true) {
    bool ok = true;
    for (int i = 1; i < r; ++i)
      if (strict ? !(n[i - 1] < n[i]) : !(n[i - 1] <= n[i])) ok = false;
    if (ok) {
      Rational prod(1);
      for (int i = 0; i < r; ++i) prod *= inv_pow(n[i], k.parts()[i]);
      total += prod;
    }
    int pos = r - 1;
    while (pos >= 0 && n[pos] == n_max) n[pos--] = 1;
    if (pos < 0) break;
    ++n[pos];
  }
  return total;
}

}  // namespace

TEST_CASE("truncated zeta examples") {
  CHECK(eval_mzv_exact(Index({2}), 3) == make_rational(49, 36));
  CHECK(std::abs(eval_mzv_float(Index({2}), 10000) -
                 std::numbers::pi * std::numbers::pi / 6) < 2e-4);
  CHECK(std::abs(eval_mzsv_float(Index({1, 2}), 1000) -
                 2 * eval_mzv_float(Index({3}), 1000000)) < 1e-2);
  CHECK_THROWS_AS(eval_mzv_exact(Index({1}), 10), std::domain_error);
  CHECK_THROWS_AS(eval_mzv_exact(Index({2}), 0), std::invalid_argument);
}

TEST_CASE("cyclic evaluation examples") {
  for (long n : {3L, 10L, 25L})
    CHECK(eval_cyc_exact(CyclicIndex::parse("[(2)]"), n) ==
          eval_mzv_exact(Index({2}), n));
  CHECK(eval_cyc_exact(CyclicIndex::parse("[(2),(1)]"), 2) == make_rational(9, 8));
  CHECK(std::abs(eval_cyc_float(CyclicIndex::parse("[(2),(1)]"), 2000) -
                 1.2020569) < 1e-3);
  CHECK_THROWS_AS(eval_cyc_exact(CyclicIndex::parse("[(1),(1)]"), 5),
                  std::domain_error);
}

TEST_CASE("ribbon evaluation") {
  for (long n : {4L, 9L})
    CHECK(eval_ribbon_exact(CyclicIndex::parse("[(2)]"), n) ==
          eval_mzv_exact(Index({2}), n));
  CHECK(eval_ribbon_exact(CyclicIndex::parse("[(2),(1)]"), 20) ==
        eval_cyc_exact(CyclicIndex::parse("[(2),(1)]"), 20) +
            eval_cyc_exact(CyclicIndex::parse("[(1,2)]"), 20));
  CHECK_THROWS_AS(eval_ribbon_exact(CyclicIndex::parse("[(1),(2)]"), 5),
                  std::domain_error);
}

TEST_CASE("chain DP agrees with brute-force box enumeration") {
  for (int w = 2; w <= 5; ++w) {
    for (const auto& k : cyclic_indices(w, 3)) {
      CHECK(eval_cyc_exact(k, 6) == brute_cyc(k, 6, /*wrap=*/true));
      if (k.blocks().front().parts() != std::vector<int>{1})
        CHECK(eval_ribbon_exact(k, 6) == brute_cyc(k, 6, /*wrap=*/false));
    }
    for (const auto& k : admissible_indices(w)) {
      CHECK(eval_mzv_exact(k, 7) == brute_mzv(k, 7, true));
      CHECK(eval_mzsv_exact(k, 7) == brute_mzv(k, 7, false));
    }
  }
}

TEST_CASE("float path tracks the exact path") {
  for (const auto& k : cyclic_indices(4, 3))
    CHECK(std::abs(eval_cyc_float(k, 40) - eval_cyc_exact(k, 40).get_d()) < 1e-12);
  CHECK(std::abs(eval_mzv_float(Index({1, 2}), 60) -
                 eval_mzv_exact(Index({1, 2}), 60).get_d()) < 1e-12);
}

TEST_CASE("ribbon cutoff decomposition holds exactly") {
  for (int w = 2; w <= 5; ++w)
    for (const auto& k : cyclic_indices(w, 3, /*first_not_one=*/true)) {
      if (k.block_count() < 2) continue;
      std::vector<Index> rest(k.blocks().begin(), k.blocks().end() - 1);
      rest[0] = concat_blocks(k.blocks().back(), k.blocks().front());
      CHECK(eval_ribbon_exact(k, 8) ==
            eval_cyc_exact(k, 8) + eval_cyc_exact(CyclicIndex(rest), 8));
    }
}

TEST_CASE("single-block collapse identities hold exactly at cutoff") {
  // all-depth-one cyclic indices collapse to a single zeta value
  for (const auto& ks :
       {std::vector<int>{2}, {1, 2}, {2, 1}, {3, 1, 1}, {1, 1, 4}}) {
    std::vector<Index> blocks;
    int total = 0;
    for (int v : ks) {
      blocks.push_back(Index({v}));
      total += v;
    }
    CyclicIndex k(blocks);
    CHECK(eval_cyc_exact(k, 12) == eval_mzv_exact(Index({total}), 12));
  }
  // depth-two head block: zetastar minus zeta
  for (const auto& parts :
       {std::vector<int>{1, 2}, {2, 3}, {1, 1, 2}, {2, 1, 3}, {1, 2, 2, 2}}) {
    const int l = parts[0];
    std::vector<int> kk(parts.begin() + 1, parts.end());
    std::vector<Index> blocks{Index({l, kk.back()})};
    for (int i = static_cast<int>(kk.size()) - 2; i >= 0; --i)
      blocks.push_back(Index({kk[i]}));
    int total = l;
    for (int v : kk) total += v;
    CHECK(eval_cyc_exact(CyclicIndex(blocks), 11) ==
          eval_mzsv_exact(Index(parts), 11) - eval_mzv_exact(Index({total}), 11));
  }
}

TEST_CASE("partial sums are monotone in the cutoff") {
  for (const auto& k : cyclic_indices(4, 2)) {
    Rational prev(0);
    for (long n = 1; n <= 9; ++n) {
      Rational cur = eval_cyc_exact(k, n);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("region indicators") {
  // S compares one variable per index entry: depth profile (2,1) here,
  // chain n11 < n12 >= n21 >= n11.
  CyclicIndex k = CyclicIndex::parse("[(1,2),(1)]");
  CHECK(indicator_S(k, std::vector<long>{1, 2, 2}));
  CHECK_FALSE(indicator_S(k, std::vector<long>{1, 2, 3}));
  CHECK(indicator_Sprime(k, std::vector<long>{2, 3, 1}));
  CHECK_FALSE(indicator_S(k, std::vector<long>{2, 3, 1}));
  CHECK_THROWS_AS(indicator_S(k, std::vector<long>{1, 2}), std::invalid_argument);

  CyclicIndex shape = CyclicIndex::parse("[(2),(1)]");  // weights 2 and 1
  CHECK(indicator_D(shape, std::vector<double>{0.1, 0.5, 0.3}));
  CHECK_FALSE(indicator_D(shape, std::vector<double>{0.3, 0.5, 0.1}));
  CHECK(indicator_Dprime(shape, std::vector<double>{0.3, 0.5, 0.1}));
  CHECK_THROWS_AS(indicator_D(shape, std::vector<double>{0.1, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("interval indicators") {
  CHECK(e_discrete(2, 5, 3) == 1);
  CHECK(e_discrete(2, 5, 7) == 0);
  CHECK(e_discrete(2, 5, 2) == 1);
  CHECK(e_cont(0.2, 0.9, 0.5) == 1);
  CHECK(e_cont(0.2, 0.9, 0.95) == 0);
}

TEST_CASE("discrete E-identity on enumerated S-points") {
  for (int w = 2; w <= 4; ++w)
    for (const auto& k : cyclic_indices(w, 3)) {
      const int depth = k.total_depth();
      std::vector<long> tuple(depth, 1);
      while (true) {
        if (indicator_S(k, tuple))
          CHECK(check_e_identity_discrete(k, tuple, 8));
        int pos = depth - 1;
        while (pos >= 0 && tuple[pos] == 7) tuple[pos--] = 1;
        if (pos < 0) break;
        ++tuple[pos];
      }
    }
  CyclicIndex k = CyclicIndex::parse("[(2),(1)]");
  CHECK_THROWS_AS(
      check_e_identity_discrete(k, std::vector<long>{1, 2, 3}, 5),
      std::invalid_argument);
}

TEST_CASE("continuous E-identity and D-prime split on random points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto shapes = cyclic_indices(4, 3);
  std::vector<double> probes;
  for (int i = 1; i <= 19; ++i) probes.push_back(i / 20.0);
  int accepted = 0;
  for (long draw = 0; accepted < 400 && draw < 500000; ++draw) {
    const auto& k = shapes[draw % shapes.size()];
    std::vector<double> t(k.weight());
    for (auto& v : t) v = unif(rng);
    bool dp = indicator_Dprime(k, t);
    bool d = indicator_D(k, t);
    bool comp = dp && t.back() < t.front();
    CHECK(dp == (d || comp));
    bool both = d && comp;
    CHECK_FALSE(both);
    if (d) {
      ++accepted;
      CHECK(check_e_identity_cont(k, t, probes));
    }
  }
  CHECK(accepted == 400);
}

TEST_CASE("fixed-endpoint quadrature") {
  const double p = 0.2, q = 0.8;
  CHECK(quad_fixed_endpoints(Word("x"), p, q).value == 0.0);
  CHECK(quad_fixed_endpoints(Word("y"), p, q).value == 0.0);
  CHECK(quad_fixed_endpoints(Word("yx"), p, q).value ==
        doctest::Approx(1.0 / (1.0 - p) / q).epsilon(1e-14));
  // interior of yxxx integrates the two x-forms: closed form log(q/p)^2/2
  QuadResult r = quad_fixed_endpoints(Word("yxxx"), p, q);
  double closed = 1.0 / (1.0 - p) / q * std::pow(std::log(q / p), 2) / 2.0;
  CHECK(std::abs(r.value - closed) < 1e-10);
  CHECK(r.error_estimate < 1e-6);
  CHECK_THROWS_AS(quad_fixed_endpoints(Word("yx"), 0.8, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(quad_fixed_endpoints(Word("yxyxx"), p, q), std::invalid_argument);
}

TEST_CASE("shrunken-simplex integral reproduces zeta(2)") {
  double got = mzv_via_integral(Word("yx"));
  CHECK(std::abs(got - std::numbers::pi * std::numbers::pi / 6) < 1e-4);
  CHECK_THROWS_AS(mzv_via_integral(Word("xy")), std::invalid_argument);
}

TEST_CASE("symbol evaluation carries a tail gauge in float mode") {
  EvalOutcome out = evaluate_symbol(Symbol::mzv(Index({2})),
                                    TruncationSpec{100, Arith::Float});
  CHECK(!out.error_bound.empty());
  EvalOutcome exact = evaluate_symbol(Symbol::mzv(Index({2})),
                                      TruncationSpec{3, Arith::Exact});
  CHECK(exact.value == "49/36");
  CHECK(exact.error_bound.empty());
}
