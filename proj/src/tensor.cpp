#include "cmzv/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace cmzv {

bool valid_tensor_component(const Word& w) {
  if (w == Word(Letter::Y)) return true;
  return w.weight() >= 2 && w.front() == Letter::Y && w.back() == Letter::X;
}

void validate_tensor_word(const TensorWord& t) {
  if (t.empty()) throw std::invalid_argument("tensor: needs >= 1 component");
  bool some_not_y = false;
  for (const auto& w : t) {
    if (!valid_tensor_component(w))
      throw std::invalid_argument("tensor: component '" + w.str() +
                                  "' not in h_C^0 or {y}");
    if (w != Word(Letter::Y)) some_not_y = true;
  }
  if (!some_not_y)
    throw std::invalid_argument("tensor: at least one component must differ from y");
}

TensorElem TensorElem::monomial(TensorWord t, const Rational& c) {
  validate_tensor_word(t);
  TensorElem e;
  e.insert(t, c);
  return e;
}

int TensorElem::weight() const {
  if (terms_.empty()) return 0;
  int w = 0;
  for (const auto& u : terms_.begin()->first) w += u.weight();
  return w;
}

void TensorElem::insert(const TensorWord& t, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  for (const auto& [t, c] : o.terms_) insert(t, c);
  return *this;
}

TensorElem operator*(const Rational& c, const TensorElem& a) {
  TensorElem r;
  if (c == 0) return r;
  for (const auto& [t, ct] : a.terms_) {
    Rational v = c * ct;
    r.terms_.emplace(t, v);
  }
  return r;
}

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [t, c] : terms_) {
    if (!first_term) os << " + ";
    os << c.get_str() << ' ';
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) os << " (x) ";
      os << t[i].str();
    }
    first_term = false;
  }
  return os.str();
}

namespace {

template <class Build>
TensorElem map_blocks(const TensorElem& t, const NcPoly& u, Build build) {
  TensorElem out;
  for (const auto& [tw, ct] : t.terms())
    for (const auto& [uw, cu] : u.terms()) {
      TensorWord next = build(tw, uw);
      validate_tensor_word(next);
      Rational c = ct * cu;
      out += TensorElem::monomial(std::move(next), c);
    }
  return out;
}

}  // namespace

TensorElem insert_block(const TensorElem& t, int after, const NcPoly& u) {
  return map_blocks(t, u, [after](const TensorWord& tw, const Word& uw) {
    if (after < 0 || after > static_cast<int>(tw.size()))
      throw std::invalid_argument("insert_block: position out of range");
    TensorWord next = tw;
    next.insert(next.begin() + after, uw);
    return next;
  });
}

TensorElem replace_block(const TensorElem& t, int pos, const NcPoly& u) {
  return map_blocks(t, u, [pos](const TensorWord& tw, const Word& uw) {
    if (pos < 1 || pos > static_cast<int>(tw.size()))
      throw std::invalid_argument("replace_block: position out of range");
    TensorWord next = tw;
    next[pos - 1] = uw;
    return next;
  });
}

CyclicIndex tensor_to_cyclic_index(const TensorWord& t) {
  validate_tensor_word(t);
  std::vector<Index> blocks;
  blocks.reserve(t.size());
  for (const auto& w : t) blocks.push_back(word_to_index(w));
  return CyclicIndex(std::move(blocks));
}

}  // namespace cmzv
