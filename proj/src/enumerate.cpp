#include "cmzv/enumerate.hpp"

#include <algorithm>

namespace cmzv {

std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

std::vector<std::vector<int>> compositions_fixed_depth(int total, int depth) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int slots) -> void {
    if (slots == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int first = 1; first + (slots - 1) <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, total, depth);
  return out;
}

std::vector<int> min_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<Index> admissible_indices(int weight) {
  std::vector<Index> out;
  for (const auto& c : compositions(weight))
    if (!c.empty() && c.back() >= 2) out.push_back(Index(c));
  return out;
}

std::vector<Index> cyclic_blocks(int weight) {
  std::vector<Index> out;
  if (weight == 1) out.push_back(Index({1}));
  for (auto& k : admissible_indices(weight)) out.push_back(std::move(k));
  return out;
}

std::vector<CyclicIndex> cyclic_indices(int weight, int max_blocks,
                                        bool first_not_one) {
  std::vector<CyclicIndex> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if (!cur.empty()) {
        CyclicIndex k(cur);
        if (k.admissible() &&
            (!first_not_one || cur.front().parts() != std::vector<int>{1}))
          out.push_back(std::move(k));
      }
      return;
    }
    if (static_cast<int>(cur.size()) == max_blocks) return;
    for (int w = 1; w <= rest; ++w)
      for (const auto& b : cyclic_blocks(w)) {
        cur.push_back(b);
        self(self, rest - w);
        cur.pop_back();
      }
  };
  rec(rec, weight);
  return out;
}

std::vector<TensorWord> tensor_words(int weight, int max_blocks) {
  std::vector<TensorWord> out;
  for (const auto& k : cyclic_indices(weight, max_blocks)) {
    TensorWord t;
    for (const auto& b : k.blocks()) t.push_back(index_to_word(b));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Word> words_of_weight(int weight) {
  std::vector<Word> out;
  const int count = 1 << weight;
  for (int bits = 0; bits < count; ++bits) {
    std::string s(weight, 'x');
    for (int i = 0; i < weight; ++i)
      if (bits & (1 << i)) s[i] = 'y';
    out.push_back(Word(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmzv
