#pragma once

#include <vector>

#include "cmzv/index.hpp"
#include "cmzv/tensor.hpp"

namespace cmzv {

// All compositions of `total` into positive parts, lexicographic order.
std::vector<std::vector<int>> compositions(int total);

// Compositions of `total` into exactly `depth` parts, lexicographic order.
std::vector<std::vector<int>> compositions_fixed_depth(int total, int depth);

// Lexicographically smallest cyclic rotation.
std::vector<int> min_rotation(const std::vector<int>& v);

// Admissible indices of the given weight (last part >= 2).
std::vector<Index> admissible_indices(int weight);

// Blocks usable in an admissible cyclic index: admissible ones plus (1).
std::vector<Index> cyclic_blocks(int weight);

// All admissible cyclic indices of the given weight with at most
// max_blocks blocks; optionally only those whose first block is not (1).
std::vector<CyclicIndex> cyclic_indices(int weight, int max_blocks,
                                        bool first_not_one = false);

// The tensor-word basis of h^cyc at the given weight (components are
// z-words of admissible blocks or y, not all y).
std::vector<TensorWord> tensor_words(int weight, int max_blocks);

// All words over {x,y} of exactly the given weight, lexicographic order.
std::vector<Word> words_of_weight(int weight);

}  // namespace cmzv
