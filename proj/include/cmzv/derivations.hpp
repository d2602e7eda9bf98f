#pragma once

#include <memory>
#include <string>

#include "cmzv/ncpoly.hpp"

namespace cmzv {

// A derivation of h represented as data: the three generator derivations
// plus commutators, sums and scalar multiples.  Kept as a tree so operator
// identities can be reported structurally in tests.
class Derivation {
 public:
  static Derivation delta(int m);    // x -> 0,            y -> z_m (x+y)
  static Derivation partial(int m);  // x -> y(x+y)^{m-1}x, y -> -y(x+y)^{m-1}x
  static Derivation s();             // x -> x^2,           x+y -> (x+y)^2
  static Derivation commutator(const Derivation& a, const Derivation& b);
  static Derivation sum(const Derivation& a, const Derivation& b);
  static Derivation scaled(const Rational& c, const Derivation& a);

  NcPoly apply(const NcPoly& a) const;
  NcPoly operator()(const NcPoly& a) const { return apply(a); }

  bool operator==(const Derivation& o) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

NcPoly delta(int m, const NcPoly& a);
NcPoly partial(int m, const NcPoly& a);
NcPoly s_op(const NcPoly& a);
NcPoly commutator(const Derivation& d1, const Derivation& d2, const NcPoly& a);

// {1}^m = y^m
Word ones_word(int m);

// {1}_*^m = 1 for m = 0, y(x+y)^{m-1} for m > 0
NcPoly ones_star(int m);

// F(w,m) = {1}_*^m *̲ (y ⧢̲ w) - (m+1) {1}_*^{m+1} *̲ w  for w in h_C^0;
// the combination whose zeta-image vanishes.
NcPoly f_combination(const NcPoly& w, int m);

// G_m(w) = sum_{i=1}^m (-1)^{i-1} F(y^{i-1} *̲ w, m-i); equals partial(m,w),
// which is asserted by tests rather than assumed here.
NcPoly g_combination(int m, const NcPoly& w);

}  // namespace cmzv
