#pragma once

#include <map>
#include <string>

#include "cmzv/rational.hpp"
#include "cmzv/word.hpp"

namespace cmzv {

// Finite Q-linear combination of words with exact coefficients.  Zero
// coefficients are never stored, so structural equality coincides with
// mathematical equality.
class NcPoly {
 public:
  NcPoly() = default;
  NcPoly(const Word& w) { terms_.emplace(w, 1); }  // NOLINT: implicit by design
  static NcPoly unit() { return NcPoly(Word()); }
  static NcPoly constant(const Rational& c);
  static NcPoly monomial(const Word& w, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  int max_weight() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly operator-() const;

  // Concatenation product, the bilinear extension of word concatenation.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Rational& c, const NcPoly& a);

  bool operator==(const NcPoly&) const = default;

  // Canonical text form: terms in degree-lex order, "coeff word" joined by
  // " + ", the unit word printed as "1"; the zero polynomial is "0".
  std::string to_string() const;
  static NcPoly parse(const std::string& text);

 private:
  void insert(const Word& w, const Rational& c);
  std::map<Word, Rational> terms_;
};

inline NcPoly poly_add(const NcPoly& a, const NcPoly& b) { return a + b; }
inline NcPoly poly_scale(const Rational& c, const NcPoly& a) { return c * a; }
inline NcPoly poly_concat(const NcPoly& a, const NcPoly& b) { return a * b; }

// x + y, used by derivation generator images.
NcPoly xy_sum();
// (x + y)^n
NcPoly xy_sum_pow(int n);

// Subspace membership: true iff every word with a nonzero coefficient lies
// in the subspace.  The constant term is admitted exactly where the Q
// summand is part of the definition (h^0 and h^1, not h_C).
bool in_h0(const NcPoly& a);   // Q + y h x
bool in_h1(const NcPoly& a);   // Q + y h
bool in_hC(const NcPoly& a);   // h x + h y  (words of length >= 1)
bool in_hC0(const NcPoly& a);  // h^0 ∩ h_C
bool in_hC1(const NcPoly& a);  // h^1 ∩ h_C

}  // namespace cmzv
