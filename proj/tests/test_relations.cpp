#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cmzv/derivations.hpp"
#include "cmzv/enumerate.hpp"
#include "cmzv/relations.hpp"

using namespace cmzv;

namespace {

NcPoly z(std::initializer_list<int> parts) {
  return NcPoly(index_to_word(Index(parts)));
}

Rational coeff(const Relation& r, const Symbol& s) {
  auto it = r.terms().find(s);
  return it == r.terms().end() ? Rational(0) : it->second;
}

Relation corrupt(const Relation& r) {
  auto terms = r.terms();
  for (auto& [sym, c] : terms)
    if (c == 1) {
      c = 2;
      return Relation(r.family(), r.provenance(), std::move(terms));
    }
  terms.begin()->second *= 2;
  return Relation(r.family(), r.provenance(), std::move(terms));
}

// Independent rank oracle: eliminate processing rows in reverse order and
// columns right-to-left.
int rank_oracle(const std::vector<Relation>& rels) {
  std::vector<Symbol> cols;
  for (const auto& r : rels)
    for (const auto& [sym, c] : r.terms()) cols.push_back(sym);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::map<Symbol, size_t> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);
  std::vector<std::vector<Rational>> rows;
  for (auto it = rels.rbegin(); it != rels.rend(); ++it) {
    std::vector<Rational> row(cols.size(), Rational(0));
    for (const auto& [sym, c] : it->terms()) row[col_of.at(sym)] = c;
    rows.push_back(std::move(row));
  }
  std::map<size_t, std::vector<Rational>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    for (size_t ci = cols.size(); ci-- > 0;) {
      if (row[ci] == 0) continue;
      auto it = pivots.find(ci);
      if (it == pivots.end()) {
        pivots.emplace(ci, row);
        ++rank;
        break;
      }
      Rational f = row[ci] / it->second[ci];
      for (size_t j = 0; j < cols.size(); ++j) row[j] -= f * it->second[j];
    }
  }
  return rank;
}

}  // namespace

TEST_CASE("symbols order by serialized text") {
  Symbol a = Symbol::mzv(Index({1, 2}));
  Symbol b = Symbol::mzsv(Index({1, 2}));
  Symbol c = Symbol::cyc(CyclicIndex::parse("[(2),(1)]"));
  CHECK(a.to_text() == "zeta(1,2)");
  CHECK(b.to_text() == "zetastar(1,2)");
  CHECK(c.to_text() == "cyc[(2),(1)]");
  CHECK(c < a);  // 'c' < 'z'
  CHECK(a < b);
  CHECK(Symbol::from_json(a.to_json()) == a);
  CHECK(Symbol::from_json(b.to_json()) == b);
  CHECK(Symbol::from_json(c.to_json()) == c);
  CHECK(a.weight() == 3);
  CHECK(c.weight() == 3);
}

TEST_CASE("cyc1 generator") {
  Relation r = gen_cyc1({index_to_word(Index({2}))});
  CHECK(r.family() == "cyc1");
  CHECK(r.terms().size() == 2);
  CHECK(coeff(r, Symbol::cyc(CyclicIndex::parse("[(1,2)]"))) == 1);
  CHECK(coeff(r, Symbol::cyc(CyclicIndex::parse("[(2),(1)]"))) == -1);
  CHECK(r.weight() == 3);

  // y-components contribute nothing on the replacement side
  Relation r2 = gen_cyc1({index_to_word(Index({2})), Word("y")});
  CHECK(coeff(r2, Symbol::cyc(CyclicIndex::parse("[(1,2),(1)]"))) == 1);
  CHECK(coeff(r2, Symbol::cyc(CyclicIndex::parse("[(2),(1),(1)]"))) == -2);

  CHECK_THROWS_AS(gen_cyc1({Word("y"), Word("y")}), std::invalid_argument);
}

TEST_CASE("cyc2 generator") {
  Relation r = gen_cyc2({index_to_word(Index({2}))}, 1);
  CHECK(r.terms().size() == 2);
  CHECK(coeff(r, Symbol::cyc(CyclicIndex::parse("[(3)]"))) == 1);
  CHECK(coeff(r, Symbol::cyc(CyclicIndex::parse("[(2),(1)]"))) == -1);
  CHECK_THROWS_AS(gen_cyc2({index_to_word(Index({2}))}, 0), std::invalid_argument);
}

TEST_CASE("cyc2 relations hold exactly at any finite cutoff") {
  for (int wt = 2; wt <= 4; ++wt)
    for (int k = 1; k <= 2; ++k)
      for (const auto& t : tensor_words(wt, 3)) {
        Relation r = gen_cyc2(t, k);
        CHECK(r.exact_at_cutoff());
        for (long n : {3L, 11L}) {
          auto rep = verify_numeric(r, {n, Arith::Exact}, 0.0);
          CHECK(rep.pass);
          CHECK(rep.exact_residual == "0");
          CHECK(rep.guarantee == "exact-at-cutoff");
        }
      }
}

TEST_CASE("cyc1 relations converge with shrinking residual") {
  Relation r = gen_cyc1({index_to_word(Index({2}))});
  CHECK_FALSE(r.exact_at_cutoff());
  auto r500 = verify_numeric(r, {500, Arith::Float}, 0.05);
  auto r1000 = verify_numeric(r, {1000, Arith::Float}, 0.05);
  CHECK(r500.pass);
  CHECK(r500.guarantee == "limit-only");
  CHECK(r500.residual > 0);
  CHECK(r1000.residual < r500.residual);
}

TEST_CASE("cyclic sum generator") {
  Relation r = gen_cyclic_sum({2});
  CHECK(r.terms().size() == 2);
  CHECK(coeff(r, Symbol::mzsv(Index({1, 2}))) == 1);
  CHECK(coeff(r, Symbol::mzv(Index({3}))) == -2);

  // rotations give the same relation
  CHECK(gen_cyclic_sum({2, 1}) == gen_cyclic_sum({1, 2}));
  CHECK_THROWS_AS(gen_cyclic_sum({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cyclic_sum({}), std::invalid_argument);

  // the internal cyc1-pipeline assertion ran for every construction
  for (int w = 2; w <= 7; ++w)
    for (const auto& ks : compositions(w))
      if (*std::max_element(ks.begin(), ks.end()) >= 2)
        CHECK_NOTHROW(gen_cyclic_sum(ks));
}

TEST_CASE("derivation generator") {
  Relation r = gen_derivation(z({2}), 1);
  CHECK(r.terms().size() == 2);
  CHECK(coeff(r, Symbol::mzv(Index({1, 2}))) == 1);
  CHECK(coeff(r, Symbol::mzv(Index({3}))) == -1);
  CHECK_THROWS_AS(gen_derivation(NcPoly(Word("xy")), 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_derivation(z({2}), 0), std::invalid_argument);
}

TEST_CASE("derivation relation via the two independent routes") {
  for (int weight = 3; weight <= 6; ++weight)
    for (int m = 1; m <= weight - 2; ++m)
      for (const auto& k : admissible_indices(weight - m)) {
        NcPoly w(index_to_word(k));
        Relation a = gen_derivation(w, m);
        Relation b = gen_derivation_via_g(w, m);
        CHECK(a == b);
        CHECK(a.to_json().at("terms") == b.to_json().at("terms"));
      }
}

TEST_CASE("fwm generator") {
  Relation r = gen_fwm(z({2}), 0);
  CHECK(coeff(r, Symbol::mzv(Index({1, 2}))) == 1);
  CHECK(coeff(r, Symbol::mzv(Index({3}))) == -1);
  CHECK(r.family() == "fwm");
  CHECK_THROWS_AS(gen_fwm(z({2}), -1), std::invalid_argument);
}

TEST_CASE("sum formula generator") {
  Relation r32 = gen_sum_formula(3, 2);
  CHECK(coeff(r32, Symbol::mzv(Index({1, 2}))) == 1);
  CHECK(coeff(r32, Symbol::mzv(Index({3}))) == -1);
  Relation r42 = gen_sum_formula(4, 2);
  CHECK(coeff(r42, Symbol::mzv(Index({1, 3}))) == 1);
  CHECK(coeff(r42, Symbol::mzv(Index({2, 2}))) == 1);
  CHECK(coeff(r42, Symbol::mzv(Index({4}))) == -1);
  CHECK_THROWS_AS(gen_sum_formula(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_sum_formula(3, 1), std::invalid_argument);
}

TEST_CASE("verify_numeric outcomes") {
  Relation r = gen_sum_formula(3, 2);  // zeta(1,2) = zeta(3)
  auto rep = verify_numeric(r, {1000, Arith::Float}, 1e-2);
  CHECK(rep.pass);
  CHECK(rep.residual < 1e-2);

  auto bad = verify_numeric(corrupt(r), {1000, Arith::Float}, 1e-2);
  CHECK_FALSE(bad.pass);
  CHECK(bad.residual > 0.5);

  // exact mode reports the exact residual string
  auto ex = verify_numeric(r, {50, Arith::Exact}, 1.0);
  CHECK(!ex.exact_residual.empty());
  CHECK(ex.exact_residual != "0");
}

TEST_CASE("negative controls per family") {
  std::vector<Relation> rels = {
      gen_cyc1({index_to_word(Index({2}))}),
      gen_cyc2({index_to_word(Index({2}))}, 1),
      gen_cyclic_sum({2}),
      gen_derivation(z({2}), 1),
      gen_sum_formula(4, 2),
      gen_fwm(z({3}), 0),
  };
  for (const auto& r : rels) {
    auto good = verify_numeric(r, {2000, Arith::Float}, 0.1);
    auto bad = verify_numeric(corrupt(r), {2000, Arith::Float}, 0.1);
    CHECK(good.pass);
    CHECK_FALSE(bad.pass);
  }
}

TEST_CASE("relation weight homogeneity across families") {
  const std::vector<std::string> families{"cyc1",       "cyc2",
                                          "cyclic-sum", "derivation",
                                          "sum-formula", "fwm"};
  for (const std::string& family : families)
    for (int w = 3; w <= 5; ++w)
      for (const auto& r : generate_family(family, w, 3)) {
        CHECK(r.weight() == w);
        for (const auto& [sym, c] : r.terms()) {
          CHECK(sym.weight() == w);
          CHECK(c != 0);
        }
      }
  CHECK_THROWS_AS(generate_family("nope", 4, 3), std::invalid_argument);
}

TEST_CASE("family enumeration counts") {
  CHECK(generate_family("sum-formula", 4, 3).size() == 2);  // r = 2, 3
  auto der3 = generate_family("derivation", 3, 3);
  REQUIRE(der3.size() == 1);
  CHECK(coeff(der3[0], Symbol::mzv(Index({1, 2}))) == 1);
}

TEST_CASE("relation JSON round-trip") {
  for (const auto& r : generate_family("cyc2", 4, 3)) {
    Relation back = Relation::from_json(r.to_json());
    CHECK(back == r);
    CHECK(back.family() == r.family());
    CHECK(back.to_json() == r.to_json());
  }
  // schema shape: required keys with the right types
  auto j = gen_cyclic_sum({2}).to_json();
  CHECK(j.contains("family"));
  CHECK(j.contains("provenance"));
  CHECK(j.at("terms").is_array());
  for (const auto& t : j.at("terms")) {
    CHECK(t.at("coeff").is_string());
    CHECK(t.at("symbol").at("kind").is_string());
    CHECK(t.at("symbol").contains("index"));
  }
}

TEST_CASE("rank over Q") {
  CHECK(rank_over_q({}, 4) == 0);
  Relation r = gen_sum_formula(4, 2);
  auto doubled_terms = r.terms();
  for (auto& [sym, c] : doubled_terms) c *= 2;
  Relation r2(r.family(), r.provenance(), std::move(doubled_terms));
  CHECK(rank_over_q({r, r2}, 4) == 1);

  for (int w = 4; w <= 6; ++w) {
    auto rels = generate_family("derivation", w, 3);
    CHECK(rank_over_q(rels, w) == rank_oracle(rels));
    auto more = generate_family("sum-formula", w, 3);
    rels.insert(rels.end(), more.begin(), more.end());
    CHECK(rank_over_q(rels, w) == rank_oracle(rels));
  }
  Relation a = gen_sum_formula(4, 2), b = gen_sum_formula(5, 2);
  CHECK_THROWS_AS(rank_over_q({a, b}, 4), std::invalid_argument);
}

TEST_CASE("relation matrix CSV") {
  auto rels = generate_family("derivation", 4, 3);
  std::string csv = relation_matrix_csv(rels, 4);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == rels.size() + 1);
  CHECK(csv.substr(0, 8) == "relation");
}
