#include "indom/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace indom {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
  b.trim();
  return b;
}

Bitset Bitset::of(std::size_t size, std::initializer_list<Vertex> members) {
  return of(size, std::span<const Vertex>(members.begin(), members.size()));
}

Bitset Bitset::of(std::size_t size, std::span<const Vertex> members) {
  Bitset b(size);
  for (Vertex v : members) b.insert(v);
  return b;
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

void Bitset::trim() {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  assert(size_ == other.size_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

Vertex Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return -1;
}

Vertex Bitset::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= size_) return -1;
  std::size_t w = pos / kWordBits;
  Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> Bitset::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Bitset Bitset::operator~() const {
  Bitset r(*this);
  for (Word& w : r.words_) w = ~w;
  r.trim();
  return r;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace indom
