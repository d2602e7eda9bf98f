#include "cmzv/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cmzv {

NcPoly NcPoly::constant(const Rational& c) {
  NcPoly p;
  p.insert(Word(), c);
  return p;
}

NcPoly NcPoly::monomial(const Word& w, const Rational& c) {
  NcPoly p;
  p.insert(w, c);
  return p;
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NcPoly::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

void NcPoly::insert(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) insert(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) insert(w, Rational(-c));
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, Rational(-c));
  return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Rational c = ca * cb;
      r.insert(concat(wa, wb), c);
    }
  return r;
}

NcPoly operator*(const Rational& c, const NcPoly& a) {
  NcPoly r;
  if (c == 0) return r;
  for (const auto& [w, cw] : a.terms_) {
    Rational v = c * cw;
    r.terms_.emplace(w, v);
  }
  return r;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str() << ' ' << w.str();
    first = false;
  }
  return os.str();
}

NcPoly NcPoly::parse(const std::string& text) {
  if (text == "0") return NcPoly();
  NcPoly p;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(" + ", pos);
    std::string term =
        text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    size_t sp = term.find(' ');
    if (sp == std::string::npos)
      throw std::invalid_argument("ncpoly: bad term '" + term + "'");
    Rational c = parse_rational(term.substr(0, sp));
    std::string ws = term.substr(sp + 1);
    Word w = (ws == "1") ? Word() : Word(ws);
    p.insert(w, c);
    pos = (end == std::string::npos) ? text.size() : end + 3;
  }
  return p;
}

NcPoly xy_sum() { return NcPoly(Word(Letter::X)) + NcPoly(Word(Letter::Y)); }

NcPoly xy_sum_pow(int n) {
  NcPoly r = NcPoly::unit();
  for (int i = 0; i < n; ++i) r = r * xy_sum();
  return r;
}

namespace {

template <class Pred>
bool all_words(const NcPoly& a, Pred pred) {
  for (const auto& [w, c] : a.terms())
    if (!pred(w)) return false;
  return true;
}

}  // namespace

bool in_h0(const NcPoly& a) {
  return all_words(a, [](const Word& w) {
    return w.is_unit() ||
           (w.weight() >= 2 && w.front() == Letter::Y && w.back() == Letter::X);
  });
}

bool in_h1(const NcPoly& a) {
  return all_words(a, [](const Word& w) {
    return w.is_unit() || w.front() == Letter::Y;
  });
}

bool in_hC(const NcPoly& a) {
  return all_words(a, [](const Word& w) { return !w.is_unit(); });
}

bool in_hC0(const NcPoly& a) { return in_h0(a) && in_hC(a); }

bool in_hC1(const NcPoly& a) { return in_h1(a) && in_hC(a); }

}  // namespace cmzv
