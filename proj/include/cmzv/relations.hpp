#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cmzv/eval.hpp"
#include "cmzv/ncpoly.hpp"
#include "cmzv/tensor.hpp"

namespace cmzv {

// A zeta symbol: plain, star, or cyclic.  Symbols order lexicographically
// on their serialized text, which fixes matrix column order and JSON term
// order.
class Symbol {
 public:
  enum class Kind { Mzv, Mzsv, Cyc };

  static Symbol mzv(Index k);
  static Symbol mzsv(Index k);
  static Symbol cyc(CyclicIndex k);

  Kind kind() const { return kind_; }
  const Index& index() const { return std::get<Index>(payload_); }
  const CyclicIndex& cyclic() const { return std::get<CyclicIndex>(payload_); }
  int weight() const;
  const std::string& to_text() const { return text_; }

  nlohmann::ordered_json to_json() const;
  static Symbol from_json(const nlohmann::ordered_json& j);

  bool operator==(const Symbol& o) const { return text_ == o.text_; }
  bool operator<(const Symbol& o) const { return text_ < o.text_; }

 private:
  Symbol(Kind k, std::variant<Index, CyclicIndex> payload);
  Kind kind_;
  std::variant<Index, CyclicIndex> payload_;
  std::string text_;
};

// A Q-linear combination of symbols asserted to vanish, with generator
// provenance.  Weight-homogeneous and nonempty by construction.
class Relation {
 public:
  Relation(std::string family, nlohmann::ordered_json provenance,
           std::map<Symbol, Rational> terms);

  const std::string& family() const { return family_; }
  const nlohmann::ordered_json& provenance() const { return provenance_; }
  const std::map<Symbol, Rational>& terms() const { return terms_; }
  int weight() const { return weight_; }

  // cyc2 relations hold exactly at every finite cutoff: the inserted
  // variable is confined between existing block boundaries, so the box
  // truncation commutes with the merge rearrangement.
  bool exact_at_cutoff() const { return family_ == "cyc2"; }

  nlohmann::ordered_json to_json() const;
  static Relation from_json(const nlohmann::ordered_json& j);

  bool operator==(const Relation& o) const { return terms_ == o.terms_; }

 private:
  std::string family_;
  nlohmann::ordered_json provenance_;
  std::map<Symbol, Rational> terms_;
  int weight_ = 0;
};

// Theorem-backed generators.
Relation gen_cyc1(const TensorWord& t);
Relation gen_cyc2(const TensorWord& t, int k);
Relation gen_cyclic_sum(const std::vector<int>& ks);
Relation gen_derivation(const NcPoly& w, int m);
Relation gen_sum_formula(int k, int r);

// The vanishing combination of f_combination(w, m) as plain zeta symbols.
Relation gen_fwm(const NcPoly& w, int m);

// Second construction of the derivation relation through g_combination;
// must serialize identically to gen_derivation (tested, not assumed).
Relation gen_derivation_via_g(const NcPoly& w, int m);

struct VerifyReport {
  bool pass = false;
  double residual = 0;              // |sum coeff * value|
  std::string exact_residual;       // exact mode only, "p/q"
  std::string guarantee;            // "exact-at-cutoff" or "limit-only"
  std::vector<std::string> symbol_errors;
  nlohmann::ordered_json to_json() const;
};

VerifyReport verify_numeric(const Relation& rel, const TruncationSpec& spec,
                            double tol);

// Exact Gaussian elimination over the symbols of the given weight; all
// relations must be homogeneous of that weight.
int rank_over_q(const std::vector<Relation>& rels, int weight);

// Matrix rows in deterministic order, entries as exact "p/q" strings.
std::string relation_matrix_csv(const std::vector<Relation>& rels, int weight);

// Enumerates all generator instances of a family at the given relation
// weight (families: cyc1, cyc2, cyclic-sum, derivation, sum-formula, fwm).
std::vector<Relation> generate_family(const std::string& family, int weight,
                                      int max_blocks);

// Evaluation of one symbol for reports: exact "p/q" or a fixed-format
// decimal; float mode carries the last-shell tail heuristic.
struct EvalOutcome {
  std::string value;
  std::string error_bound;  // empty = null
  double numeric = 0;
};
EvalOutcome evaluate_symbol(const Symbol& s, const TruncationSpec& spec);

std::string format_double(double v);

}  // namespace cmzv
