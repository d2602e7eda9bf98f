#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmzv/word.hpp"

namespace cmzv {

// Composition (k_1,...,k_r) of positive integers; admissible iff k_r >= 2.
class Index {
 public:
  explicit Index(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  bool admissible() const { return parts_.back() >= 2; }

  std::string to_text() const;  // "(2,3)"
  static Index parse(std::string_view s);

  bool operator==(const Index&) const = default;
  auto operator<=>(const Index&) const = default;

 private:
  std::vector<int> parts_;
};

// Sequence of index blocks [k_1,...,k_s].  Admissible-cyclic iff every
// block is admissible or equal to (1) and at least one block is not (1).
class CyclicIndex {
 public:
  explicit CyclicIndex(std::vector<Index> blocks);

  const std::vector<Index>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int weight() const;
  int total_depth() const;
  bool admissible() const;

  std::string to_text() const;  // "[(2,3),(1)]"
  static CyclicIndex parse(std::string_view s);

  nlohmann::ordered_json to_json() const;  // {"blocks": [[2,3],[1]]}
  static CyclicIndex from_json(const nlohmann::json& j);

  bool operator==(const CyclicIndex&) const = default;
  auto operator<=>(const CyclicIndex&) const = default;

 private:
  std::vector<Index> blocks_;
};

inline bool is_admissible_cyclic(const CyclicIndex& k) { return k.admissible(); }

// Cyclic right-rotation: rotate(k, 1) moves the last block to the front's
// right, i.e. blocks_new[i] = blocks_old[(i - by) mod s].  Negative and
// out-of-range shifts reduce mod s.
CyclicIndex rotate(const CyclicIndex& k, int by);

// (k_{a,1},...,k_{a,r_a}, k_{b,1},...,k_{b,r_b})
Index concat_blocks(const Index& a, const Index& b);

// z-word dictionary.  word_to_index requires a nonempty z-word monomial;
// index_to_word(k) = z_{k_1}...z_{k_r}.
Index word_to_index(const Word& w);
Word index_to_word(const Index& k);

}  // namespace cmzv
