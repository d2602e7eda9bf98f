#include "cmzv/derivations.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cmzv/products.hpp"

namespace cmzv {

namespace {

enum class Kind { Delta, Partial, S, Commutator, Sum, Scaled };

struct GeneratorImages {
  NcPoly x, y;
};

// Images of the generator derivations, cached per (kind, m).
const GeneratorImages& generator_images(Kind kind, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GeneratorImages> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GeneratorImages img;
  switch (kind) {
    case Kind::Delta:
      img.x = NcPoly();
      img.y = NcPoly(word_z(m)) * xy_sum();
      break;
    case Kind::Partial: {
      NcPoly base = NcPoly(Word(Letter::Y)) * xy_sum_pow(m - 1) *
                    NcPoly(Word(Letter::X));
      img.x = base;
      img.y = -base;
      break;
    }
    case Kind::S: {
      NcPoly xx = NcPoly(Word(Letter::X)) * NcPoly(Word(Letter::X));
      img.x = xx;
      img.y = xy_sum() * xy_sum() - xx;
      break;
    }
    default:
      throw std::logic_error("generator_images: not a generator derivation");
  }
  return cache.emplace(key, std::move(img)).first->second;
}

NcPoly apply_leibniz(const GeneratorImages& img, const NcPoly& a) {
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    for (int i = 0; i < w.weight(); ++i) {
      const NcPoly& mid = (w.at(i) == Letter::X) ? img.x : img.y;
      if (mid.is_zero()) continue;
      NcPoly prefix(Word(std::string_view(w.letters()).substr(0, i)));
      NcPoly suffix(Word(std::string_view(w.letters()).substr(i + 1)));
      out += c * (prefix * mid * suffix);
    }
  }
  return out;
}

}  // namespace

struct Derivation::Node {
  Kind kind;
  int m = 0;
  Rational c;
  std::shared_ptr<const Node> a, b;
};

Derivation Derivation::delta(int m) {
  if (m < 1) throw std::invalid_argument("delta: m must be >= 1");
  return Derivation(std::make_shared<Node>(Node{Kind::Delta, m, {}, {}, {}}));
}

Derivation Derivation::partial(int m) {
  if (m < 1) throw std::invalid_argument("partial: m must be >= 1");
  return Derivation(std::make_shared<Node>(Node{Kind::Partial, m, {}, {}, {}}));
}

Derivation Derivation::s() {
  return Derivation(std::make_shared<Node>(Node{Kind::S, 0, {}, {}, {}}));
}

Derivation Derivation::commutator(const Derivation& a, const Derivation& b) {
  return Derivation(
      std::make_shared<Node>(Node{Kind::Commutator, 0, {}, a.node_, b.node_}));
}

Derivation Derivation::sum(const Derivation& a, const Derivation& b) {
  return Derivation(
      std::make_shared<Node>(Node{Kind::Sum, 0, {}, a.node_, b.node_}));
}

Derivation Derivation::scaled(const Rational& c, const Derivation& a) {
  return Derivation(
      std::make_shared<Node>(Node{Kind::Scaled, 0, c, a.node_, {}}));
}

NcPoly Derivation::apply(const NcPoly& a) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Delta:
    case Kind::Partial:
    case Kind::S:
      return apply_leibniz(generator_images(n.kind, n.m), a);
    case Kind::Commutator: {
      Derivation d1(n.a), d2(n.b);
      return d1.apply(d2.apply(a)) - d2.apply(d1.apply(a));
    }
    case Kind::Sum: {
      Derivation d1(n.a), d2(n.b);
      return d1.apply(a) + d2.apply(a);
    }
    case Kind::Scaled: {
      Derivation d1(n.a);
      return n.c * d1.apply(a);
    }
  }
  throw std::logic_error("derivation: unknown node");
}

bool Derivation::operator==(const Derivation& o) const {
  auto eq = [](auto&& self, const Node* a, const Node* b) -> bool {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->m != b->m || a->c != b->c) return false;
    return self(self, a->a.get(), b->a.get()) && self(self, a->b.get(), b->b.get());
  };
  return eq(eq, node_.get(), o.node_.get());
}

std::string Derivation::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Delta:
      return "delta_" + std::to_string(n.m);
    case Kind::Partial:
      return "partial_" + std::to_string(n.m);
    case Kind::S:
      return "s";
    case Kind::Commutator:
      return "[" + Derivation(n.a).to_string() + "," +
             Derivation(n.b).to_string() + "]";
    case Kind::Sum:
      return "(" + Derivation(n.a).to_string() + " + " +
             Derivation(n.b).to_string() + ")";
    case Kind::Scaled:
      return n.c.get_str() + "*" + Derivation(n.a).to_string();
  }
  return "?";
}

NcPoly delta(int m, const NcPoly& a) { return Derivation::delta(m).apply(a); }
NcPoly partial(int m, const NcPoly& a) { return Derivation::partial(m).apply(a); }
NcPoly s_op(const NcPoly& a) { return Derivation::s().apply(a); }

NcPoly commutator(const Derivation& d1, const Derivation& d2, const NcPoly& a) {
  return Derivation::commutator(d1, d2).apply(a);
}

Word ones_word(int m) {
  if (m < 0) throw std::invalid_argument("ones_word: m must be >= 0");
  return word_pow(Word(Letter::Y), m);
}

NcPoly ones_star(int m) {
  if (m < 0) throw std::invalid_argument("ones_star: m must be >= 0");
  if (m == 0) return NcPoly::unit();
  return NcPoly(Word(Letter::Y)) * xy_sum_pow(m - 1);
}

NcPoly f_combination(const NcPoly& w, int m) {
  if (m < 0) throw std::invalid_argument("f_combination: m must be >= 0");
  if (!in_hC0(w))
    throw std::invalid_argument("f_combination: argument must lie in h_C^0");
  if (w.is_zero()) return NcPoly();
  NcPoly lhs = inner_harmonic(ones_star(m), inner_shuffle(NcPoly(Word(Letter::Y)), w));
  NcPoly rhs = inner_harmonic(ones_star(m + 1), w);
  return lhs - Rational(m + 1) * rhs;
}

NcPoly g_combination(int m, const NcPoly& w) {
  if (m < 1) throw std::invalid_argument("g_combination: m must be >= 1");
  if (!in_hC0(w))
    throw std::invalid_argument("g_combination: argument must lie in h_C^0");
  NcPoly out;
  Rational sign(1);
  for (int i = 1; i <= m; ++i) {
    NcPoly arg = inner_harmonic(NcPoly(ones_word(i - 1)), w);
    out += sign * f_combination(arg, m - i);
    sign = -sign;
  }
  return out;
}

}  // namespace cmzv
