#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmzv/index.hpp"
#include "cmzv/ncpoly.hpp"

namespace cmzv {

// One basis tensor u_1 (x) ... (x) u_s.
using TensorWord = std::vector<Word>;

// Components must lie in h_C^0 ∪ {y} and at least one must differ from y.
bool valid_tensor_component(const Word& w);
void validate_tensor_word(const TensorWord& t);

// Q-linear combination of tensor words.
class TensorElem {
 public:
  TensorElem() = default;
  static TensorElem monomial(TensorWord t, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorWord, Rational>& terms() const { return terms_; }
  int weight() const;

  TensorElem& operator+=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator*(const Rational& c, const TensorElem& a);
  bool operator==(const TensorElem&) const = default;

  std::string to_string() const;  // "yx (x) y"

 private:
  void insert(const TensorWord& t, const Rational& c);
  std::map<TensorWord, Rational> terms_;
};

// Inserts u as a new block after position `after` (1-based; 0 prepends),
// linearly in u.  Every resulting tensor word must stay valid.
TensorElem insert_block(const TensorElem& t, int after, const NcPoly& u);

// Replaces block at 1-based position `pos`, linearly in u.
TensorElem replace_block(const TensorElem& t, int pos, const NcPoly& u);

// Blockwise z-word decomposition; the result is admissible-cyclic by
// construction of h^cyc.
CyclicIndex tensor_to_cyclic_index(const TensorWord& t);

}  // namespace cmzv
