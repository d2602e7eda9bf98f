#include "cmzv/selftest.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cmzv/derivations.hpp"
#include "cmzv/enumerate.hpp"
#include "cmzv/eval.hpp"
#include "cmzv/products.hpp"
#include "cmzv/quadrature.hpp"
#include "cmzv/relations.hpp"

namespace cmzv {

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& key, bool pass, const std::string& detail) {
    results.push_back({key, pass, detail});
  }
};

std::vector<Word> words_up_to(int max_weight) {
  std::vector<Word> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& word : words_of_weight(w)) out.push_back(std::move(word));
  return out;
}

template <class Pred>
std::vector<Word> filter_words(int max_weight, Pred pred) {
  std::vector<Word> out;
  for (auto& w : words_up_to(max_weight))
    if (pred(w)) out.push_back(std::move(w));
  return out;
}

std::vector<Word> hc_basis(int max_weight) {
  return filter_words(max_weight, [](const Word& w) { return !w.is_unit(); });
}

std::vector<Word> hc1_basis(int max_weight) {
  return filter_words(max_weight, [](const Word& w) {
    return !w.is_unit() && w.front() == Letter::Y;
  });
}

std::vector<Word> hc0_basis(int max_weight) {
  return filter_words(max_weight, [](const Word& w) {
    return w.weight() >= 2 && w.front() == Letter::Y && w.back() == Letter::X;
  });
}

NcPoly random_poly(std::mt19937_64& rng, int max_weight, int terms) {
  std::uniform_int_distribution<int> wdist(0, max_weight);
  std::uniform_int_distribution<int> cdist(-3, 3);
  std::uniform_int_distribution<int> ddist(1, 3);
  NcPoly p;
  for (int t = 0; t < terms; ++t) {
    int w = wdist(rng);
    std::string s(w, 'x');
    for (int i = 0; i < w; ++i)
      if (rng() & 1) s[i] = 'y';
    p += NcPoly::monomial(Word(s), make_rational(cdist(rng), ddist(rng)));
  }
  return p;
}

// ---- product identities -------------------------------------------------

void suite_products(Suite& s, SelftestLevel level, std::mt19937_64& rng) {
  const int env = level == SelftestLevel::Quick ? 4 : 5;
  const int reps = level == SelftestLevel::Quick ? 30 : 80;

  {
    bool ok = true;
    for (int i = 0; i < reps && ok; ++i) {
      NcPoly a = random_poly(rng, env, 3), b = random_poly(rng, env, 3),
             c = random_poly(rng, 2, 2);
      ok = shuffle(a, b) == shuffle(b, a) &&
           shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c));
    }
    s.check("shuffle_comm_assoc", ok, "random polys, weight <= " + std::to_string(env));
  }
  {
    bool ok = true;
    auto zs = [&](int maxw) {
      std::vector<NcPoly> out{NcPoly::unit()};
      for (int w = 1; w <= maxw; ++w)
        for (const auto& k : compositions(w)) out.push_back(NcPoly(index_to_word(Index(k))));
      return out;
    };
    auto za = zs(3), zb = zs(3), zc = zs(2);
    for (const auto& a : za)
      for (const auto& b : zb) {
        if (harmonic(a, b) != harmonic(b, a)) ok = false;
      }
    for (const auto& a : za)
      for (const auto& b : zb)
        for (const auto& c : zc)
          if (harmonic(harmonic(a, b), c) != harmonic(a, harmonic(b, c))) ok = false;
    s.check("harmonic_comm_assoc", ok, "z-word basis, weight <= 3+3+2");
  }
  {
    bool ok = true;
    const NcPoly y(Word(Letter::Y));
    for (const auto& w : hc_basis(env + 1)) {
      NcPoly pw(w);
      if (inner_shuffle(y, pw) != shuffle(y, pw) - y * pw - pw * y) ok = false;
    }
    s.check("inner_shuffle_bridge", ok,
            "y case on h_C basis, weight <= " + std::to_string(env + 1));
  }
  {
    bool ok = true;
    for (int k = 1; k <= 4 && ok; ++k) {
      NcPoly zk(word_z(k));
      for (const auto& w : hc1_basis(env + 1)) {
        NcPoly pw(w);
        if (inner_harmonic(zk, pw) != harmonic(zk, pw) - zk * pw - pw * zk) ok = false;
      }
    }
    s.check("inner_harmonic_bridge", ok,
            "z_k case, k <= 4, h_C^1 basis weight <= " + std::to_string(env + 1));
  }
  {
    bool ok = true;
    for (int w1 = 0; w1 <= 2; ++w1)
      for (const auto& c1 : compositions(w1)) {
        NcPoly u1 = c1.empty() ? NcPoly::unit() : NcPoly(index_to_word(Index(c1)));
        for (const auto& wu2 : hc1_basis(2))
          for (const auto& wu3 : hc1_basis(env - 1)) {
            NcPoly u2(wu2), u3(wu3);
            if (inner_harmonic(u1, inner_harmonic(u2, u3)) !=
                inner_harmonic(harmonic(u1, u2), u3))
              ok = false;
          }
      }
    s.check("mixed_associativity", ok, "u1 *̲ (u2 *̲ u3) = (u1 * u2) *̲ u3");
  }
  {
    bool ok = true;
    for (int i = 0; i < reps && ok; ++i) {
      NcPoly a = random_poly(rng, 3, 2);
      NcPoly b;
      for (int t = 0; t < 2; ++t) {
        auto basis = hc_basis(3);
        b += NcPoly(basis[rng() % basis.size()]);
      }
      if (!in_hC(inner_shuffle(a, b))) ok = false;
      auto h1 = hc1_basis(3);
      NcPoly zb(h1[rng() % h1.size()]);
      NcPoly za(word_z(1 + rng() % 3));
      if (!in_hC1(inner_harmonic(za, zb))) ok = false;
    }
    s.check("inner_product_closure", ok, "h_C / h_C^1 closure on random inputs");
  }
  {
    // Endpoint-sum property of the inner harmonic product, checked exactly.
    const int qmax = level == SelftestLevel::Quick ? 6 : 8;
    const int left_max = level == SelftestLevel::Quick ? 3 : 4;
    const int right_max = level == SelftestLevel::Quick ? 4 : 5;
    bool ok = true;
    long checked = 0;
    for (int wl = 1; wl <= left_max && ok; ++wl)
      for (const auto& ka : compositions(wl)) {
        NcPoly a(index_to_word(Index(ka)));
        for (const auto& wr : hc1_basis(right_max)) {
          NcPoly w(wr);
          NcPoly prod = inner_harmonic(a, w);
          for (long p = 1; p <= qmax && ok; ++p)
            for (long q = p; q <= qmax; ++q) {
              Rational lhs = endpoint_power_sum(prod, p, q);
              Rational rhs = endpoint_power_sum(w, p, q) *
                             ordered_power_sum(ka, p, q);
              ++checked;
              if (lhs != rhs) {
                ok = false;
                break;
              }
            }
        }
      }
    s.check("fpq_inner_harmonic", ok,
            std::to_string(checked) + " exact endpoint-sum checks, q <= " +
                std::to_string(qmax));
  }
}

// ---- derivation identities ---------------------------------------------

void suite_derivations(Suite& s, SelftestLevel level) {
  const int env = level == SelftestLevel::Quick ? 4 : 5;
  const auto basis = words_up_to(env);

  {
    bool ok = true;
    for (const auto& v : words_up_to(3))
      for (const auto& w : words_up_to(3)) {
        NcPoly pv(v), pw(w), pvw = pv * pw;
        for (int m = 1; m <= 3; ++m) {
          if (delta(m, pvw) != delta(m, pv) * pw + pv * delta(m, pw)) ok = false;
          if (partial(m, pvw) != partial(m, pv) * pw + pv * partial(m, pw)) ok = false;
        }
        if (s_op(pvw) != s_op(pv) * pw + pv * s_op(pw)) ok = false;
      }
    s.check("leibniz", ok, "delta/partial/s on split words, weight <= 6");
  }
  {
    bool ok_d = true, ok_p = true;
    for (int m = 1; m <= 4; ++m) {
      auto sd = Derivation::commutator(Derivation::s(), Derivation::delta(m));
      auto sp = Derivation::commutator(Derivation::s(), Derivation::partial(m));
      for (const auto& w : basis) {
        NcPoly pw(w);
        if (sd.apply(pw) != Rational(m) * delta(m + 1, pw)) ok_d = false;
        if (sp.apply(pw) != Rational(m) * partial(m + 1, pw)) ok_p = false;
      }
    }
    s.check("s_delta_commutator", ok_d, "[s,delta_m] = m delta_{m+1}, m <= 4");
    s.check("s_partial_commutator", ok_p, "[s,partial_m] = m partial_{m+1}, m <= 4");
  }
  {
    const int mmax = level == SelftestLevel::Quick ? 4 : 6;
    bool ok = true;
    for (int m = 1; m <= mmax; ++m)
      for (const auto& w : basis) {
        NcPoly pw(w);
        NcPoly lhs;
        for (int j = 1; j <= m - 1; ++j)
          lhs += commutator(Derivation::delta(j), Derivation::partial(m - j), pw);
        NcPoly rhs = Rational(m - 1) * (partial(m, pw) + delta(m, pw));
        if (lhs != rhs) ok = false;
      }
    s.check("two_derivation", ok,
            "sum_j [delta_j, partial_{m-j}] = (m-1)(partial_m + delta_m), m <= " +
                std::to_string(mmax));
  }
  {
    bool ok = true;
    for (int m = 1; m <= 4; ++m) {
      NcPoly zm(word_z(m));
      for (const auto& w : hc1_basis(env)) {
        NcPoly pw(w);
        NcPoly d = delta(m, pw);
        if (d != harmonic(zm, pw) - pw * zm) ok = false;
        if (d != inner_harmonic(zm, pw) + zm * pw) ok = false;
      }
    }
    s.check("delta_m", ok, "delta_m(w) = z_m*w - w z_m = z_m *̲ w + z_m w, m <= 4");
  }
  {
    bool ok = true;
    for (int m = 1; m <= 8; ++m) {
      NcPoly lhs;
      for (int j = 1; j <= m - 1; ++j) lhs += partial(m - j, NcPoly(word_z(j)));
      if (lhs != Rational(-(m - 1)) * NcPoly(word_z(m))) ok = false;
    }
    s.check("der_z_sum", ok, "sum_j partial_{m-j}(z_j) = -(m-1) z_m, m <= 8");
  }
  {
    bool ok1 = true, ok2 = true, ok3 = true, okw = true;
    for (int m = 1; m <= 8; ++m) {
      NcPoly e1;
      for (int i = 1; i <= m; ++i)
        e1 += harmonic(NcPoly(word_z(i)), ones_star(m - i));
      if (e1 != Rational(m) * ones_star(m)) ok1 = false;

      NcPoly e2;
      Rational sign(1);
      for (int i = 1; i <= m; ++i) {
        e2 += sign * harmonic(NcPoly(word_z(i)), NcPoly(ones_word(m - i)));
        sign = -sign;
      }
      if (e2 != Rational(m) * NcPoly(ones_word(m))) ok2 = false;

      NcPoly e3;
      sign = 1;
      for (int i = 0; i <= m; ++i) {
        e3 += sign * harmonic(ones_star(m - i), NcPoly(ones_word(i)));
        sign = -sign;
      }
      if (e3 != (m == 0 ? NcPoly::unit() : NcPoly())) ok3 = false;

      NcPoly ws;
      sign = 1;
      for (int i = 0; i <= m - 1; ++i) {
        ws += (sign * Rational(m - i)) * harmonic(ones_star(m - i), NcPoly(ones_word(i)));
        sign = -sign;
      }
      if (ws != NcPoly(word_z(m))) okw = false;
    }
    s.check("eq1", ok1, "m {1}_*^m = sum z_i * {1}_*^{m-i}, m <= 8");
    s.check("eq2", ok2, "m {1}^m = sum (-1)^{i-1} z_i * {1}^{m-i}, m <= 8");
    s.check("eq3", ok3, "alternating {1}_*/{1} convolution vanishes, m <= 8");
    s.check("weighted_sum", okw, "weighted alternating convolution = z_m, m <= 8");
  }
  {
    const int mmax = level == SelftestLevel::Quick ? 2 : 4;
    bool ok = true;
    for (int m = 1; m <= mmax; ++m)
      for (const auto& w : hc0_basis(env)) {
        NcPoly pw(w);
        if (g_combination(m, pw) != partial(m, pw)) ok = false;
      }
    s.check("der_z_1", ok,
            "G_m(w) = partial_m(w) on h_C^0 basis, m <= " + std::to_string(mmax));
  }
  {
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
      for (const auto& w : hc0_basis(env)) {
        if (!in_h0(partial(m, NcPoly(w)))) ok = false;
        if (!in_h0(f_combination(NcPoly(w), m - 1))) ok = false;
      }
    s.check("partial_preserves_h0", ok, "partial_m and F(w,m) land in h^0");
  }
  {
    const int kmax = level == SelftestLevel::Quick ? 7 : 9;
    bool ok = true;
    for (int k = 2; k <= kmax; ++k)
      for (int r = 1; r < k; ++r) {
        NcPoly lhs = inner_shuffle(NcPoly(ones_word(r - 1)), NcPoly(word_z(k - r + 1)));
        NcPoly rhs;
        for (const auto& comp : compositions_fixed_depth(k, r))
          if (comp.back() >= 2) rhs += NcPoly(index_to_word(Index(comp)));
        if (lhs != rhs) ok = false;
      }
    s.check("sum_formula_words", ok,
            "y^{r-1} inner-shuffled into z_{k-r+1}, k <= " + std::to_string(kmax));
  }
}

// ---- cutoff identities ----------------------------------------------------

void suite_cutoff(Suite& s, SelftestLevel level) {
  const int env = level == SelftestLevel::Quick ? 4 : 6;
  const long n_cut = level == SelftestLevel::Quick ? 10 : 20;

  {
    bool ok = true;
    for (int w = 2; w <= env && ok; ++w)
      for (const auto& k : cyclic_indices(w, 3, /*first_not_one=*/true)) {
        Rational ribbon = eval_ribbon_exact(k, n_cut);
        if (k.block_count() == 1) {
          if (ribbon != eval_mzv_exact(k.blocks()[0], n_cut)) ok = false;
          continue;
        }
        std::vector<Index> rest(k.blocks().begin(), k.blocks().end() - 1);
        rest[0] = concat_blocks(k.blocks().back(), k.blocks().front());
        Rational rhs = eval_cyc_exact(k, n_cut) +
                       eval_cyc_exact(CyclicIndex(std::move(rest)), n_cut);
        if (ribbon != rhs) ok = false;
      }
    s.check("ribbon_decomposition", ok,
            "exact at cutoff " + std::to_string(n_cut) + ", weight <= " +
                std::to_string(env));
  }
  {
    bool ok = true;
    for (int w = 2; w <= env && ok; ++w)
      for (const auto& k : cyclic_indices(w, env, false))
        for (int j = 0; j < k.block_count(); ++j)
          if (eval_cyc_exact(k, n_cut) != eval_cyc_exact(rotate(k, j), n_cut)) {
            ok = false;
            break;
          }
    s.check("rotation_invariance", ok,
            "eval_cyc equal on all rotations at cutoff " + std::to_string(n_cut));
  }
  {
    const int wmax = level == SelftestLevel::Quick ? 5 : 7;
    const long n = level == SelftestLevel::Quick ? 10 : 15;
    bool ok_single = true, ok_star = true;
    for (int w = 2; w <= wmax; ++w)
      for (const auto& ks : compositions(w)) {
        if (*std::max_element(ks.begin(), ks.end()) < 2) continue;
        std::vector<Index> blocks;
        for (int v : ks) blocks.push_back(Index({v}));
        CyclicIndex k(blocks);
        if (k.admissible() &&
            eval_cyc_exact(k, n) != eval_mzv_exact(Index({w}), n))
          ok_single = false;
      }
    for (int total = 3; total <= wmax; ++total)
      for (const auto& parts : compositions(total)) {
        // parts = (l, k_1, ..., k_s) with k_s >= 2
        if (parts.size() < 2 || parts.back() < 2) continue;
        const int l = parts[0];
        std::vector<int> kk(parts.begin() + 1, parts.end());
        std::vector<Index> blocks{Index({l, kk.back()})};
        for (int i = static_cast<int>(kk.size()) - 2; i >= 0; --i)
          blocks.push_back(Index({kk[i]}));
        Rational lhs = eval_cyc_exact(CyclicIndex(blocks), n);
        Rational rhs =
            eval_mzsv_exact(Index(parts), n) - eval_mzv_exact(Index({total}), n);
        if (lhs != rhs) ok_star = false;
      }
    s.check("cyc_single_collapse", ok_single,
            "single-part blocks collapse to zeta(k_1+...+k_s)");
    s.check("cyc_star_collapse", ok_star,
            "depth-2 head block gives zetastar - zeta, weight <= " +
                std::to_string(wmax));
  }
  {
    bool ok = true;
    for (const auto& k : cyclic_indices(4, 3, false)) {
      Rational prev(0);
      for (long n = 1; n <= 8; ++n) {
        Rational cur = eval_cyc_exact(k, n);
        if (cur < prev) ok = false;
        prev = cur;
      }
    }
    s.check("monotone_cutoff", ok, "partial sums nondecreasing in the cutoff");
  }
  {
    bool ok = true;
    const int wmax = level == SelftestLevel::Quick ? 4 : 5;
    for (int w = 3; w <= wmax && ok; ++w)
      for (int k = 1; k <= 2; ++k) {
        if (w - k < 2) continue;
        for (const auto& t : tensor_words(w - k, 3)) {
          auto rep = verify_numeric(gen_cyc2(t, k), {12, Arith::Exact}, 0.0);
          if (!rep.pass || rep.exact_residual != "0") ok = false;
        }
      }
    s.check("cyc2_exact_at_cutoff", ok,
            "cyc2 relations have residual exactly 0 at finite cutoff");
  }
}

// ---- region checks --------------------------------------------------------

void suite_regions(Suite& s, SelftestLevel level, std::mt19937_64& rng) {
  {
    const int wmax = level == SelftestLevel::Quick ? 4 : 5;
    const long entry_max = level == SelftestLevel::Quick ? 6 : 10;
    bool ok = true;
    long points = 0;
    for (int w = 2; w <= wmax; ++w)
      for (const auto& k : cyclic_indices(w, w, false)) {
        const int depth = k.total_depth();
        std::vector<long> tuple(depth, 1);
        while (true) {
          if (indicator_S(k, tuple)) {
            ++points;
            if (!check_e_identity_discrete(k, tuple, entry_max)) ok = false;
          }
          int pos = depth - 1;
          while (pos >= 0 && tuple[pos] == entry_max) tuple[pos--] = 1;
          if (pos < 0) break;
          ++tuple[pos];
        }
      }
    s.check("E_discrete", ok,
            std::to_string(points) + " S-points, entries <= " +
                std::to_string(entry_max));
  }
  {
    const int target = level == SelftestLevel::Quick ? 1000 : 10000;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto shapes = cyclic_indices(3, 3, false);
    auto shapes4 = cyclic_indices(4, 3, false);
    shapes.insert(shapes.end(), shapes4.begin(), shapes4.end());
    std::vector<double> probes;
    for (int i = 1; i <= 19; ++i) probes.push_back(i / 20.0);
    auto has_tie = [](const std::vector<double>& t) {
      for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
          if (t[i] == t[j]) return true;
      return false;
    };

    bool ok_e = true;
    int accepted = 0;
    size_t shape_i = 0;
    long draws = 0;
    while (accepted < target && draws < 200L * target) {
      const auto& k = shapes[shape_i++ % shapes.size()];
      std::vector<double> t(k.weight());
      for (auto& v : t) v = unif(rng);
      ++draws;
      if (has_tie(t) || !indicator_D(k, t)) continue;
      ++accepted;
      if (!check_e_identity_cont(k, t, probes)) ok_e = false;
    }
    s.check("E_continuous", ok_e && accepted == target,
            std::to_string(accepted) + " D-points across " +
                std::to_string(shapes.size()) + " shapes");

    bool ok_split = true;
    for (int i = 0; i < target; ++i) {
      const auto& k = shapes[i % shapes.size()];
      std::vector<double> t(k.weight());
      do {
        for (auto& v : t) v = unif(rng);
      } while (has_tie(t));
      bool dp = indicator_Dprime(k, t);
      bool d = indicator_D(k, t);
      bool comp = dp && t.back() < t.front();
      if (dp != (d || comp) || (d && comp)) ok_split = false;
    }
    s.check("Dprime_split", ok_split,
            "D' = D ⊔ {last < first} on " + std::to_string(target) + " points");
  }
}

// ---- relation-level consistency -------------------------------------------

void suite_relations(Suite& s, SelftestLevel level) {
  {
    const int wmax = level == SelftestLevel::Quick ? 5 : 7;
    bool ok = true;
    long count = 0;
    for (int w = 2; w < wmax; ++w)
      for (const auto& ks : compositions(w)) {
        if (*std::max_element(ks.begin(), ks.end()) < 2) continue;
        try {
          gen_cyclic_sum(ks);  // asserts pipeline == direct internally
          ++count;
        } catch (const std::exception&) {
          ok = false;
        }
      }
    s.check("cyclic_sum_pipeline", ok,
            std::to_string(count) + " tuples rebuilt through the cyc1 pipeline");
  }
  {
    const int wmax = level == SelftestLevel::Quick ? 5 : 6;
    bool ok = true;
    for (int weight = 3; weight <= wmax; ++weight)
      for (int m = 1; m <= weight - 2; ++m)
        for (const auto& k : admissible_indices(weight - m)) {
          NcPoly w(index_to_word(k));
          if (!(gen_derivation(w, m) == gen_derivation_via_g(w, m))) ok = false;
        }
    s.check("derivation_two_paths", ok,
            "partial-route equals F/G-route, weight <= " + std::to_string(wmax));
  }
}

// ---- quadrature -------------------------------------------------------------

void suite_quadrature(Suite& s, SelftestLevel level) {
  {
    Word yx("yx");
    double got = mzv_via_integral(yx);
    double want = std::numbers::pi * std::numbers::pi / 6.0;
    bool ok = std::abs(got - want) < 1e-4;
    s.check("integral_base_case", ok,
            "ordered integral of yx -> zeta(2), err " +
                format_double(std::abs(got - want)));
  }
  {
    const double p = 0.2, q = 0.8;
    QuadResult lhs = quad_fixed_endpoints(Word("yxxx"), p, q);
    double pair = quad_fixed_endpoints(Word("yx"), p, q).value;
    double interior = ordered_integral(Word("xx"), p, q, 48);
    bool ok = std::abs(lhs.value - pair * interior) < 1e-6 &&
              quad_fixed_endpoints(Word("x"), p, q).value == 0.0 &&
              quad_fixed_endpoints(Word("y"), p, q).value == 0.0;
    s.check("endpoint_integral_example", ok,
            "pinned integral factors through the interior at (0.2, 0.8)");
  }
  if (level == SelftestLevel::Full) {
    double got = mzv_via_integral(Word("yxx"));
    double want = eval_mzv_float(Index({3}), 200000);
    s.check("integral_weight3", std::abs(got - want) < 5e-3,
            "ordered integral of yxx vs series, err " +
                format_double(std::abs(got - want)));
  }
}

}  // namespace

std::vector<CheckResult> run_selftest(SelftestLevel level, const Config& cfg) {
  Suite s;
  std::mt19937_64 rng(cfg.seed);

  {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      NcPoly p = random_poly(rng, 5, 4);
      if (NcPoly::parse(p.to_string()) != p) ok = false;
    }
    for (int w = 1; w <= 8; ++w)
      for (const auto& c : compositions(w))
        if (word_to_index(index_to_word(Index(c))) != Index(c)) ok = false;
    s.check("canonical_roundtrip", ok, "text serialization and z-word dictionary");
  }
  {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      NcPoly a = random_poly(rng, 5, 4);
      ok = ok && (in_hC0(a) == (in_h0(a) && in_hC(a))) &&
           (in_hC1(a) == (in_h1(a) && in_hC(a)));
    }
    s.check("subspace_consistency", ok, "h_C^0 and h_C^1 as intersections");
  }

  suite_products(s, level, rng);
  suite_derivations(s, level);
  suite_cutoff(s, level);
  suite_regions(s, level, rng);
  suite_relations(s, level);
  suite_quadrature(s, level);
  return s.results;
}

int print_selftest_report(const std::vector<CheckResult>& results,
                          SelftestLevel level, const Config& cfg,
                          std::string& out) {
  std::ostringstream os;
  os << "selftest level=" << (level == SelftestLevel::Quick ? "quick" : "full")
     << " seed=" << cfg.seed << "\n";
  int failures = 0;
  for (const auto& r : results) {
    os << (r.pass ? "pass" : "FAIL") << "  ";
    os.width(28);
    os.setf(std::ios::left);
    os << r.key;
    os.unsetf(std::ios::left);
    os << " " << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  os << "result: " << (results.size() - failures) << "/" << results.size()
     << " suites passed\n";
  out = os.str();
  return failures;
}

}  // namespace cmzv
