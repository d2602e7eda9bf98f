#include "cmzv/word.hpp"

#include <stdexcept>

namespace cmzv {

Word::Word(std::string_view letters) : s_(letters) {
  for (char c : s_)
    if (c != 'x' && c != 'y')
      throw std::invalid_argument("word: letter must be 'x' or 'y'");
}

Word Word::interior() const {
  if (weight() < 2) throw std::logic_error("word: interior needs weight >= 2");
  Word w;
  w.s_ = s_.substr(1, s_.size() - 2);
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.s_ = a.s_ + b.s_;
  return w;
}

Word word_z(int k) {
  if (k < 1) throw std::invalid_argument("word_z: k must be >= 1");
  Word w;
  return concat(Word(Letter::Y), Word(std::string(k - 1, 'x')));
}

Word word_pow(const Word& w, int n) {
  if (n < 0) throw std::invalid_argument("word_pow: n must be >= 0");
  Word r;
  for (int i = 0; i < n; ++i) r = concat(r, w);
  return r;
}

bool is_z_word(const Word& w) {
  return w.is_unit() || w.front() == Letter::Y;
}

}  // namespace cmzv
