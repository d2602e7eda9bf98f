#include "cmzv/relations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cmzv/derivations.hpp"
#include "cmzv/enumerate.hpp"
#include "cmzv/products.hpp"

namespace cmzv {

Symbol::Symbol(Kind k, std::variant<Index, CyclicIndex> payload)
    : kind_(k), payload_(std::move(payload)) {
  switch (kind_) {
    case Kind::Mzv:
      text_ = "zeta" + std::get<Index>(payload_).to_text();
      break;
    case Kind::Mzsv:
      text_ = "zetastar" + std::get<Index>(payload_).to_text();
      break;
    case Kind::Cyc:
      text_ = "cyc" + std::get<CyclicIndex>(payload_).to_text();
      break;
  }
}

Symbol Symbol::mzv(Index k) { return Symbol(Kind::Mzv, std::move(k)); }
Symbol Symbol::mzsv(Index k) { return Symbol(Kind::Mzsv, std::move(k)); }
Symbol Symbol::cyc(CyclicIndex k) { return Symbol(Kind::Cyc, std::move(k)); }

int Symbol::weight() const {
  return kind_ == Kind::Cyc ? cyclic().weight() : index().weight();
}

nlohmann::ordered_json Symbol::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::Mzv:
      j["kind"] = "mzv";
      j["index"] = index().parts();
      break;
    case Kind::Mzsv:
      j["kind"] = "mzsv";
      j["index"] = index().parts();
      break;
    case Kind::Cyc: {
      j["kind"] = "cyc";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& b : cyclic().blocks()) arr.push_back(b.parts());
      j["index"] = arr;
      break;
    }
  }
  return j;
}

Symbol Symbol::from_json(const nlohmann::ordered_json& j) {
  const std::string kind = j.at("kind");
  if (kind == "mzv") return mzv(Index(j.at("index").get<std::vector<int>>()));
  if (kind == "mzsv") return mzsv(Index(j.at("index").get<std::vector<int>>()));
  if (kind == "cyc") {
    std::vector<Index> blocks;
    for (const auto& b : j.at("index")) blocks.push_back(Index(b.get<std::vector<int>>()));
    return cyc(CyclicIndex(std::move(blocks)));
  }
  throw std::invalid_argument("symbol: unknown kind '" + kind + "'");
}

Relation::Relation(std::string family, nlohmann::ordered_json provenance,
                   std::map<Symbol, Rational> terms)
    : family_(std::move(family)),
      provenance_(std::move(provenance)),
      terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("relation: combination is empty");
  weight_ = terms_.begin()->first.weight();
  for (const auto& [sym, c] : terms_) {
    if (c == 0) throw std::invalid_argument("relation: zero coefficient stored");
    if (sym.weight() != weight_)
      throw std::invalid_argument("relation: not weight-homogeneous");
  }
}

nlohmann::ordered_json Relation::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family_;
  j["provenance"] = provenance_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [sym, c] : terms_) {
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["symbol"] = sym.to_json();
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j;
}

Relation Relation::from_json(const nlohmann::ordered_json& j) {
  std::map<Symbol, Rational> terms;
  for (const auto& t : j.at("terms")) {
    Symbol sym = Symbol::from_json(t.at("symbol"));
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    auto [it, fresh] = terms.emplace(std::move(sym), c);
    if (!fresh) it->second += c;
  }
  nlohmann::ordered_json prov = j.value("provenance", nlohmann::ordered_json::object());
  return Relation(j.at("family").get<std::string>(), std::move(prov),
                  std::move(terms));
}

namespace {

void accumulate(std::map<Symbol, Rational>& terms, Symbol sym, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(std::move(sym), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

nlohmann::ordered_json tensor_provenance(const TensorWord& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : t) arr.push_back(word_to_index(w).parts());
  return arr;
}

}  // namespace

Relation gen_cyc1(const TensorWord& t) {
  validate_tensor_word(t);
  const int s = static_cast<int>(t.size());
  std::map<Symbol, Rational> terms;
  const NcPoly y(Word(Letter::Y));
  for (int i = 0; i < s; ++i) {
    NcPoly repl = inner_shuffle(y, NcPoly(t[i]));
    for (const auto& [w, c] : repl.terms()) {
      TensorWord tw = t;
      tw[i] = w;
      accumulate(terms, Symbol::cyc(tensor_to_cyclic_index(tw)), c);
    }
    TensorWord ins = t;
    ins.insert(ins.begin() + i + 1, Word(Letter::Y));
    accumulate(terms, Symbol::cyc(tensor_to_cyclic_index(ins)), Rational(-1));
  }
  nlohmann::ordered_json prov;
  prov["tensor"] = tensor_provenance(t);
  return Relation("cyc1", std::move(prov), std::move(terms));
}

Relation gen_cyc2(const TensorWord& t, int k) {
  validate_tensor_word(t);
  if (k < 1) throw std::invalid_argument("gen_cyc2: k must be >= 1");
  const int s = static_cast<int>(t.size());
  std::map<Symbol, Rational> terms;
  const NcPoly zk(word_z(k));
  for (int i = 0; i < s; ++i) {
    NcPoly repl = inner_harmonic(zk, NcPoly(t[i]));
    for (const auto& [w, c] : repl.terms()) {
      TensorWord tw = t;
      tw[i] = w;
      accumulate(terms, Symbol::cyc(tensor_to_cyclic_index(tw)), c);
    }
    TensorWord ins = t;
    ins.insert(ins.begin() + i + 1, word_z(k));
    accumulate(terms, Symbol::cyc(tensor_to_cyclic_index(ins)), Rational(-1));
  }
  nlohmann::ordered_json prov;
  prov["tensor"] = tensor_provenance(t);
  prov["k"] = k;
  return Relation("cyc2", std::move(prov), std::move(terms));
}

namespace {

// Rewrites one cyclic symbol through the single-block collapse rules:
// all blocks of depth 1 give zeta(total); exactly one block of depth 2
// gives zetastar(l, b_rev..., c) - zeta(total) after rotating that block
// to the front.
void rewrite_cyclic_symbol(std::map<Symbol, Rational>& out, const CyclicIndex& ci,
                           const Rational& c) {
  int pos2 = -1;
  for (int i = 0; i < ci.block_count(); ++i) {
    const int d = ci.blocks()[i].depth();
    if (d == 1) continue;
    if (d == 2 && pos2 < 0) {
      pos2 = i;
      continue;
    }
    throw std::logic_error("rewrite_cyclic_symbol: unsupported block shape");
  }
  const int total = ci.weight();
  if (pos2 < 0) {
    accumulate(out, Symbol::mzv(Index({total})), c);
    return;
  }
  CyclicIndex rot = rotate(ci, -pos2);  // depth-2 block to the front
  const auto& head = rot.blocks().front().parts();
  std::vector<int> star{head[0]};
  for (int i = rot.block_count() - 1; i >= 1; --i)
    star.push_back(rot.blocks()[i].parts()[0]);
  star.push_back(head[1]);
  accumulate(out, Symbol::mzsv(Index(std::move(star))), c);
  accumulate(out, Symbol::mzv(Index({total})), Rational(-c));
}

std::map<Symbol, Rational> cyclic_sum_terms_direct(const std::vector<int>& ks) {
  const int s = static_cast<int>(ks.size());
  const int k = std::accumulate(ks.begin(), ks.end(), 0);
  std::map<Symbol, Rational> terms;
  for (int i = 0; i < s; ++i)
    for (int j = 1; j <= ks[i] - 1; ++j) {
      std::vector<int> star{ks[i] - j};
      for (int t = 1; t < s; ++t) star.push_back(ks[(i + t) % s]);
      star.push_back(j + 1);
      accumulate(terms, Symbol::mzsv(Index(std::move(star))), Rational(1));
    }
  accumulate(terms, Symbol::mzv(Index({k + 1})), Rational(-k));
  return terms;
}

std::map<Symbol, Rational> cyclic_sum_terms_via_cyc1(const std::vector<int>& ks) {
  TensorWord t;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) t.push_back(word_z(*it));
  Relation base = gen_cyc1(t);
  std::map<Symbol, Rational> terms;
  for (const auto& [sym, c] : base.terms())
    rewrite_cyclic_symbol(terms, sym.cyclic(), c);
  return terms;
}

}  // namespace

Relation gen_cyclic_sum(const std::vector<int>& ks) {
  if (ks.empty()) throw std::invalid_argument("gen_cyclic_sum: empty tuple");
  for (int v : ks)
    if (v < 1) throw std::invalid_argument("gen_cyclic_sum: entries must be >= 1");
  const int k = std::accumulate(ks.begin(), ks.end(), 0);
  if (k <= static_cast<int>(ks.size()))
    throw std::invalid_argument("gen_cyclic_sum: needs sum k_i > s");

  auto direct = cyclic_sum_terms_direct(ks);
  auto derived = cyclic_sum_terms_via_cyc1(ks);
  if (direct != derived)
    throw std::logic_error("gen_cyclic_sum: pipeline and direct construction differ");

  nlohmann::ordered_json prov;
  prov["ks"] = ks;
  return Relation("cyclic-sum", std::move(prov), std::move(direct));
}

namespace {

Relation zeta_image_relation(const char* family, const NcPoly& img,
                             nlohmann::ordered_json prov) {
  if (!in_h0(img))
    throw std::logic_error(std::string(family) + ": image left h^0");
  std::map<Symbol, Rational> terms;
  for (const auto& [w, c] : img.terms())
    accumulate(terms, Symbol::mzv(word_to_index(w)), c);
  return Relation(family, std::move(prov), std::move(terms));
}

}  // namespace

Relation gen_derivation(const NcPoly& w, int m) {
  if (m < 1) throw std::invalid_argument("gen_derivation: m must be >= 1");
  if (!in_hC0(w))
    throw std::invalid_argument("gen_derivation: w must lie in h_C^0");
  nlohmann::ordered_json prov;
  prov["w"] = w.to_string();
  prov["m"] = m;
  return zeta_image_relation("derivation", partial(m, w), std::move(prov));
}

Relation gen_derivation_via_g(const NcPoly& w, int m) {
  if (m < 1) throw std::invalid_argument("gen_derivation_via_g: m must be >= 1");
  if (!in_hC0(w))
    throw std::invalid_argument("gen_derivation_via_g: w must lie in h_C^0");
  nlohmann::ordered_json prov;
  prov["w"] = w.to_string();
  prov["m"] = m;
  return zeta_image_relation("derivation", g_combination(m, w), std::move(prov));
}

Relation gen_fwm(const NcPoly& w, int m) {
  if (m < 0) throw std::invalid_argument("gen_fwm: m must be >= 0");
  if (!in_hC0(w)) throw std::invalid_argument("gen_fwm: w must lie in h_C^0");
  nlohmann::ordered_json prov;
  prov["w"] = w.to_string();
  prov["m"] = m;
  return zeta_image_relation("fwm", f_combination(w, m), std::move(prov));
}

Relation gen_sum_formula(int k, int r) {
  if (!(k > r && r >= 1))
    throw std::invalid_argument("gen_sum_formula: needs k > r >= 1");
  NcPoly lhs = inner_shuffle(NcPoly(ones_word(r - 1)), NcPoly(word_z(k - r + 1)));
  NcPoly expected;
  for (const auto& comp : compositions_fixed_depth(k, r))
    if (comp.back() >= 2) expected += NcPoly(index_to_word(Index(comp)));
  if (lhs != expected)
    throw std::logic_error("gen_sum_formula: word identity failed");
  if (r == 1)
    throw std::invalid_argument(
        "gen_sum_formula: r = 1 cancels to the empty relation");
  std::map<Symbol, Rational> terms;
  for (const auto& [w, c] : lhs.terms())
    accumulate(terms, Symbol::mzv(word_to_index(w)), c);
  accumulate(terms, Symbol::mzv(Index({k})), Rational(-1));
  nlohmann::ordered_json prov;
  prov["k"] = k;
  prov["r"] = r;
  return Relation("sum-formula", std::move(prov), std::move(terms));
}

namespace {

double eval_symbol_float_cached(const Symbol& s, long cutoff) {
  static std::mutex mu;
  static std::map<std::pair<std::string, long>, double> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find({s.to_text(), cutoff});
    if (it != cache.end()) return it->second;
  }
  double v = 0;
  switch (s.kind()) {
    case Symbol::Kind::Mzv:
      v = eval_mzv_float(s.index(), cutoff);
      break;
    case Symbol::Kind::Mzsv:
      v = eval_mzsv_float(s.index(), cutoff);
      break;
    case Symbol::Kind::Cyc:
      v = eval_cyc_float(s.cyclic(), cutoff);
      break;
  }
  std::scoped_lock lock(mu);
  cache.emplace(std::make_pair(s.to_text(), cutoff), v);
  return v;
}

Rational eval_symbol_exact(const Symbol& s, long cutoff) {
  switch (s.kind()) {
    case Symbol::Kind::Mzv:
      return eval_mzv_exact(s.index(), cutoff);
    case Symbol::Kind::Mzsv:
      return eval_mzsv_exact(s.index(), cutoff);
    case Symbol::Kind::Cyc:
      return eval_cyc_exact(s.cyclic(), cutoff);
  }
  throw std::logic_error("symbol: unknown kind");
}

}  // namespace

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["residual"] = format_double(residual);
  if (!exact_residual.empty()) j["exact_residual"] = exact_residual;
  j["guarantee"] = guarantee;
  if (!symbol_errors.empty()) j["symbol_errors"] = symbol_errors;
  return j;
}

VerifyReport verify_numeric(const Relation& rel, const TruncationSpec& spec,
                            double tol) {
  VerifyReport rep;
  rep.guarantee = rel.exact_at_cutoff() ? "exact-at-cutoff" : "limit-only";
  if (spec.mode == Arith::Exact) {
    Rational sum(0);
    for (const auto& [sym, c] : rel.terms()) {
      try {
        sum += c * eval_symbol_exact(sym, spec.cutoff);
      } catch (const std::domain_error& e) {
        rep.symbol_errors.push_back(sym.to_text() + ": " + e.what());
      }
    }
    rep.exact_residual = sum.get_str();
    rep.residual = std::abs(sum.get_d());
    rep.pass = rep.symbol_errors.empty() &&
               (rel.exact_at_cutoff() ? sum == 0 : rep.residual < tol);
  } else {
    double sum = 0;
    for (const auto& [sym, c] : rel.terms()) {
      try {
        sum += c.get_d() * eval_symbol_float_cached(sym, spec.cutoff);
      } catch (const std::domain_error& e) {
        rep.symbol_errors.push_back(sym.to_text() + ": " + e.what());
      }
    }
    rep.residual = std::abs(sum);
    rep.pass = rep.symbol_errors.empty() && rep.residual < tol;
  }
  return rep;
}

int rank_over_q(const std::vector<Relation>& rels, int weight) {
  if (rels.empty()) return 0;
  std::vector<Symbol> cols;
  for (const auto& r : rels) {
    if (r.weight() != weight)
      throw std::invalid_argument("rank_over_q: mixed weights");
    for (const auto& [sym, c] : r.terms()) cols.push_back(sym);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::map<Symbol, size_t> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

  std::vector<std::pair<std::string, const Relation*>> ordered;
  for (const auto& r : rels) ordered.emplace_back(r.to_json().dump(), &r);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<Rational>> rows;
  for (const auto& [text, r] : ordered) {
    std::vector<Rational> row(cols.size(), Rational(0));
    for (const auto& [sym, c] : r->terms()) row[col_of.at(sym)] = c;
    rows.push_back(std::move(row));
  }

  // Forward elimination, first-nonzero-column pivoting.
  std::map<size_t, std::vector<Rational>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    for (size_t c = 0; c < cols.size(); ++c) {
      if (row[c] == 0) continue;
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        pivots.emplace(c, row);
        ++rank;
        break;
      }
      Rational factor = row[c] / it->second[c];
      for (size_t j = c; j < cols.size(); ++j) row[j] -= factor * it->second[j];
    }
  }
  return rank;
}

std::string relation_matrix_csv(const std::vector<Relation>& rels, int weight) {
  std::vector<Symbol> cols;
  for (const auto& r : rels) {
    if (r.weight() != weight)
      throw std::invalid_argument("relation_matrix_csv: mixed weights");
    for (const auto& [sym, c] : r.terms()) cols.push_back(sym);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  std::vector<std::string> lines;
  std::ostringstream head;
  head << "relation";
  for (const auto& s : cols) head << ',' << s.to_text();
  lines.push_back(head.str());

  std::vector<std::pair<std::string, const Relation*>> ordered;
  for (const auto& r : rels)
    ordered.emplace_back(r.family() + " " + r.provenance().dump(), &r);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [label, r] : ordered) {
    std::ostringstream os;
    os << '"' << label << '"';
    for (const auto& s : cols) {
      auto it = r->terms().find(s);
      os << ',' << (it == r->terms().end() ? "0" : it->second.get_str());
    }
    lines.push_back(os.str());
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::vector<Relation> generate_family(const std::string& family, int weight,
                                      int max_blocks) {
  std::vector<Relation> out;
  if (family == "cyc1") {
    for (const auto& t : tensor_words(weight - 1, max_blocks))
      out.push_back(gen_cyc1(t));
  } else if (family == "cyc2") {
    for (int k = 1; k <= weight - 2; ++k)
      for (const auto& t : tensor_words(weight - k, max_blocks))
        out.push_back(gen_cyc2(t, k));
  } else if (family == "cyclic-sum") {
    for (const auto& ks : compositions(weight - 1)) {
      if (*std::max_element(ks.begin(), ks.end()) < 2) continue;
      if (ks != min_rotation(ks)) continue;  // one representative per cycle
      out.push_back(gen_cyclic_sum(ks));
    }
  } else if (family == "derivation") {
    for (int m = 1; m <= weight - 2; ++m)
      for (const auto& k : admissible_indices(weight - m))
        out.push_back(gen_derivation(NcPoly(index_to_word(k)), m));
  } else if (family == "sum-formula") {
    for (int r = 2; r <= weight - 1; ++r) out.push_back(gen_sum_formula(weight, r));
  } else if (family == "fwm") {
    for (int m = 0; m <= weight - 3; ++m)
      for (const auto& k : admissible_indices(weight - m - 1))
        out.push_back(gen_fwm(NcPoly(index_to_word(k)), m));
  } else {
    throw std::invalid_argument("generate_family: unknown family '" + family + "'");
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

EvalOutcome evaluate_symbol(const Symbol& s, const TruncationSpec& spec) {
  EvalOutcome out;
  if (spec.mode == Arith::Exact) {
    Rational v = eval_symbol_exact(s, spec.cutoff);
    out.value = v.get_str();
    out.numeric = v.get_d();
  } else {
    double v = eval_symbol_float_cached(s, spec.cutoff);
    out.value = format_double(v);
    out.numeric = v;
    // Heuristic tail gauge: the contribution of the last shell.
    if (spec.cutoff > 1) {
      double prev = eval_symbol_float_cached(s, spec.cutoff - 1);
      out.error_bound = format_double(v - prev);
    }
  }
  return out;
}

}  // namespace cmzv
