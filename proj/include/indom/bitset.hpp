#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace indom {

using Vertex = int;

// Fixed-width bit vector over 0..size()-1. The width is set at construction
// and never changes; all binary operations require equal widths.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size);
  static Bitset of(std::size_t size, std::initializer_list<Vertex> members);
  static Bitset of(std::size_t size, std::span<const Vertex> members);

  std::size_t size() const { return size_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (static_cast<std::size_t>(v) % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (static_cast<std::size_t>(v) % kWordBits); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (static_cast<std::size_t>(v) % kWordBits)); }
  void set(Vertex v, bool on) { on ? insert(v) : erase(v); }
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool any() const { return !empty(); }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;

  // Smallest member, or -1.
  Vertex first() const;
  // Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

  // Complement within 0..size()-1.
  Bitset operator~() const;
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& operator^=(const Bitset& o);
  // Set difference.
  Bitset& operator-=(const Bitset& o);

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const = default;

  std::span<const Word> words() const { return words_; }

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// A set of vertices of one graph; the width equals the graph's order.
using VertexSet = Bitset;

// Lexicographic order on sorted member lists; used to canonicalize outputs.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace indom
