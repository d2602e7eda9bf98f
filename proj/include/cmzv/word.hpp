#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cmzv {

enum class Letter : char { X = 'x', Y = 'y' };

// A word over {x,y}; the empty word is the unit of the concatenation
// algebra.  Words compare in degree-lexicographic order with x < y, which
// is the canonical term order used everywhere (serialization, matrices).
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters);
  explicit Word(Letter l) : s_(1, static_cast<char>(l)) {}

  int weight() const { return static_cast<int>(s_.size()); }
  bool is_unit() const { return s_.empty(); }
  Letter front() const { return static_cast<Letter>(s_.front()); }
  Letter back() const { return static_cast<Letter>(s_.back()); }
  Letter at(int i) const { return static_cast<Letter>(s_[i]); }

  // Strips the first and last letter; requires weight >= 2.
  Word interior() const;

  const std::string& letters() const { return s_; }
  std::string str() const { return s_.empty() ? "1" : s_; }

  friend Word concat(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = s_.size() <=> o.s_.size(); c != 0) return c;
    return s_.compare(o.s_) <=> 0;
  }

 private:
  std::string s_;
};

// z_k = y x^{k-1}, k >= 1.
Word word_z(int k);

// w repeated n times (n >= 0).
Word word_pow(const Word& w, int n);

// True iff the word is the unit or starts with y, i.e. factors as a
// product of z-words.
bool is_z_word(const Word& w);

}  // namespace cmzv
