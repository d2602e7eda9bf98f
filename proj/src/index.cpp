#include "cmzv/index.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmzv {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("index: needs >= 1 part");
  for (int k : parts_)
    if (k < 1) throw std::invalid_argument("index: parts must be >= 1");
}

int Index::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Index::to_text() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string tok(s.substr(pos, end - pos));
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("index: bad part '" + tok + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Index Index::parse(std::string_view s) {
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("index: unbalanced parens");
    s = s.substr(1, s.size() - 2);
  }
  return Index(parse_int_list(s));
}

CyclicIndex::CyclicIndex(std::vector<Index> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty())
    throw std::invalid_argument("cyclic index: needs >= 1 block");
}

int CyclicIndex::weight() const {
  int w = 0;
  for (const auto& b : blocks_) w += b.weight();
  return w;
}

int CyclicIndex::total_depth() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.depth();
  return d;
}

bool CyclicIndex::admissible() const {
  bool some_nontrivial = false;
  for (const auto& b : blocks_) {
    bool is_one = b.parts() == std::vector<int>{1};
    if (!is_one && !b.admissible()) return false;
    if (!is_one) some_nontrivial = true;
  }
  return some_nontrivial;
}

std::string CyclicIndex::to_text() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ',';
    os << blocks_[i].to_text();
  }
  os << ']';
  return os.str();
}

CyclicIndex CyclicIndex::parse(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("cyclic index: expected [...]");
  s = s.substr(1, s.size() - 2);
  std::vector<Index> blocks;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',') ++pos;
    if (pos >= s.size() || s[pos] != '(')
      throw std::invalid_argument("cyclic index: expected '('");
    size_t end = s.find(')', pos);
    if (end == std::string_view::npos)
      throw std::invalid_argument("cyclic index: unbalanced parens");
    blocks.push_back(Index::parse(s.substr(pos, end - pos + 1)));
    pos = end + 1;
  }
  if (blocks.empty()) throw std::invalid_argument("cyclic index: empty");
  return CyclicIndex(std::move(blocks));
}

nlohmann::ordered_json CyclicIndex::to_json() const {
  nlohmann::ordered_json j;
  auto& arr = j["blocks"];
  arr = nlohmann::ordered_json::array();
  for (const auto& b : blocks_) arr.push_back(b.parts());
  return j;
}

CyclicIndex CyclicIndex::from_json(const nlohmann::json& j) {
  std::vector<Index> blocks;
  for (const auto& b : j.at("blocks"))
    blocks.push_back(Index(b.get<std::vector<int>>()));
  return CyclicIndex(std::move(blocks));
}

CyclicIndex rotate(const CyclicIndex& k, int by) {
  const int s = k.block_count();
  int shift = ((by % s) + s) % s;
  std::vector<Index> blocks;
  blocks.reserve(s);
  for (int i = 0; i < s; ++i)
    blocks.push_back(k.blocks()[((i - shift) % s + s) % s]);
  return CyclicIndex(std::move(blocks));
}

Index concat_blocks(const Index& a, const Index& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Index(std::move(parts));
}

Index word_to_index(const Word& w) {
  if (w.is_unit() || w.front() != Letter::Y)
    throw std::invalid_argument("word_to_index: '" + w.str() +
                                "' is not a nonempty z-word");
  std::vector<int> parts;
  for (int i = 0; i < w.weight(); ++i) {
    if (w.at(i) == Letter::Y)
      parts.push_back(1);
    else
      ++parts.back();
  }
  return Index(std::move(parts));
}

Word index_to_word(const Index& k) {
  Word w;
  for (int part : k.parts()) w = concat(w, word_z(part));
  return w;
}

}  // namespace cmzv
