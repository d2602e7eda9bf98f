#include "cmzv/products.hpp"

#include <functional>
#include <stdexcept>

namespace cmzv {

namespace {

enum : uint8_t { kLeft = 0, kRight = 1, kBoth = 2 };

// Enumerates all interleavings-with-collisions of r left and s right
// parts; each event sequence corresponds to exactly one merge pair.
void for_each_merge(int r, int s,
                    const std::function<void(const std::vector<uint8_t>&)>& fn) {
  std::vector<uint8_t> ev;
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == r && j == s) {
      fn(ev);
      return;
    }
    if (i < r) {
      ev.push_back(kLeft);
      self(self, i + 1, j);
      ev.pop_back();
    }
    if (j < s) {
      ev.push_back(kRight);
      self(self, i, j + 1);
      ev.pop_back();
    }
    if (i < r && j < s) {
      ev.push_back(kBoth);
      self(self, i + 1, j + 1);
      ev.pop_back();
    }
  };
  rec(rec, 0, 0);
}

bool confinement_holds(const std::vector<uint8_t>& ev) {
  int first_r = -1, last_r = -1;
  for (int i = 0; i < static_cast<int>(ev.size()); ++i)
    if (ev[i] != kLeft) {
      if (first_r < 0) first_r = i;
      last_r = i;
    }
  for (int i = 0; i < static_cast<int>(ev.size()); ++i)
    if (ev[i] == kLeft && (first_r < 0 || i < first_r || i > last_r))
      return false;
  return true;
}

Word tail(const Word& w) {
  return Word(std::string_view(w.letters()).substr(1));
}

NcPoly shuffle_words(const Word& a, const Word& b) {
  if (a.is_unit()) return NcPoly(b);
  if (b.is_unit()) return NcPoly(a);
  NcPoly left = NcPoly(Word(a.front())) * shuffle_words(tail(a), b);
  NcPoly right = NcPoly(Word(b.front())) * shuffle_words(a, tail(b));
  return left + right;
}

NcPoly harmonic_zwords(const std::vector<int>& ka, const std::vector<int>& kb,
                       bool confined) {
  NcPoly out;
  for_each_merge(
      static_cast<int>(ka.size()), static_cast<int>(kb.size()),
      [&](const std::vector<uint8_t>& ev) {
        if (confined && !confinement_holds(ev)) return;
        Word w;
        size_t ia = 0, ib = 0;
        for (uint8_t e : ev) {
          int part = 0;
          if (e == kLeft) part = ka[ia++];
          else if (e == kRight) part = kb[ib++];
          else part = ka[ia++] + kb[ib++];
          w = concat(w, word_z(part));
        }
        out += NcPoly(w);
      });
  return out;
}

std::vector<int> z_parts(const Word& w) {
  if (w.is_unit()) return {};
  return word_to_index(w).parts();
}

NcPoly harmonic_impl(const NcPoly& a, const NcPoly& b, bool confined) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      out += c * harmonic_zwords(z_parts(wa), z_parts(wb), confined);
    }
  return out;
}

}  // namespace

std::vector<MergePair> merge_pairs(int r, int s, bool confined) {
  if (r < 0 || s < 0) throw std::invalid_argument("merge_pairs: negative arity");
  std::vector<MergePair> out;
  for_each_merge(r, s, [&](const std::vector<uint8_t>& ev) {
    if (confined && !confinement_holds(ev)) return;
    MergePair mp;
    mp.d = static_cast<int>(ev.size());
    for (int i = 0; i < mp.d; ++i) {
      if (ev[i] != kRight) mp.f.push_back(i + 1);
      if (ev[i] != kLeft) mp.g.push_back(i + 1);
    }
    out.push_back(std::move(mp));
  });
  return out;
}

NcPoly shuffle(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      out += c * shuffle_words(wa, wb);
    }
  return out;
}

NcPoly harmonic(const NcPoly& a, const NcPoly& b) {
  if (!in_h1(a) || !in_h1(b))
    throw std::invalid_argument("harmonic: arguments must lie in h^1");
  return harmonic_impl(a, b, /*confined=*/false);
}

NcPoly inner_shuffle(const NcPoly& a, const NcPoly& b) {
  if (!in_hC(b))
    throw std::invalid_argument("inner_shuffle: right argument must lie in h_C");
  NcPoly out;
  for (const auto& [wb, cb] : b.terms()) {
    if (wb.weight() < 2) continue;  // single letters map to 0
    NcPoly head(Word(wb.front()));
    NcPoly foot(Word(wb.back()));
    for (const auto& [wa, ca] : a.terms()) {
      Rational c = ca * cb;
      out += c * (head * shuffle_words(wa, wb.interior()) * foot);
    }
  }
  return out;
}

NcPoly inner_harmonic(const NcPoly& a, const NcPoly& b) {
  if (!in_h1(a))
    throw std::invalid_argument("inner_harmonic: left argument must lie in h^1");
  if (!in_hC1(b))
    throw std::invalid_argument("inner_harmonic: right argument must lie in h_C^1");
  return harmonic_impl(a, b, /*confined=*/true);
}

Rational ordered_power_sum(std::span<const int> exponents, long lo, long hi) {
  if (exponents.empty()) return Rational(1);
  Rational total(0);
  auto rec = [&](auto&& self, size_t i, long min_n, Rational acc) -> void {
    if (i == exponents.size()) {
      total += acc;
      return;
    }
    long slots = static_cast<long>(exponents.size() - i);
    for (long n = min_n; n + slots - 1 <= hi; ++n) {
      Rational next = acc * inv_pow(n, exponents[i]);
      self(self, i + 1, n + 1, next);
    }
  };
  if (lo < 1) lo = 1;
  rec(rec, 0, lo, Rational(1));
  return total;
}

Rational endpoint_power_sum(const NcPoly& w, long p, long q) {
  if (p > q) throw std::invalid_argument("endpoint_power_sum: requires p <= q");
  if (p < 1) throw std::invalid_argument("endpoint_power_sum: requires p >= 1");
  if (!in_hC1(w))
    throw std::invalid_argument("endpoint_power_sum: argument must lie in h_C^1");
  Rational total(0);
  for (const auto& [word, c] : w.terms()) {
    const std::vector<int> ks = z_parts(word);
    const int r = static_cast<int>(ks.size());
    Rational val(0);
    if (r == 1) {
      if (p == q) val = inv_pow(p, ks[0]);
    } else if (q > p && q - p + 1 >= r) {
      // n_1 = p and n_r = q pinned; interior strictly between.
      std::span<const int> mid(ks.data() + 1, static_cast<size_t>(r - 2));
      val = inv_pow(p, ks.front()) * inv_pow(q, ks.back()) *
            ordered_power_sum(mid, p + 1, q - 1);
    }
    total += c * val;
  }
  return total;
}

}  // namespace cmzv
