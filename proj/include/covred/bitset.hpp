#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace covred {

/// Dense membership set over a fixed-size index range [0, size).
///
/// The tag parameter keeps sets over different index spaces (objects,
/// coverings) from being mixed by accident. Binary operations require both
/// operands to have the same size and throw std::invalid_argument otherwise.
template <class Tag>
class BasicBitSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const BasicBitSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    std::size_t operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const BasicBitSet* set_ = nullptr;
    std::size_t pos_ = npos;
  };

  BasicBitSet() = default;
  explicit BasicBitSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}
  BasicBitSet(std::size_t size, std::initializer_list<std::size_t> members) : BasicBitSet(size) {
    for (auto i : members) set(i);
  }

  template <class Range>
  static BasicBitSet from_indices(std::size_t size, const Range& members) {
    BasicBitSet s(size);
    for (auto i : members) s.set(static_cast<std::size_t>(i));
    return s;
  }

  static BasicBitSet full(std::size_t size) {
    BasicBitSet s(size);
    for (auto& w : s.words_) w = ~word_type{0};
    s.trim();
    return s;
  }

  std::size_t size() const noexcept { return size_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool test(std::size_t i) const noexcept {
    assert(i < size_);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }

  BasicBitSet& set(std::size_t i) {
    check_index(i);
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
    return *this;
  }

  BasicBitSet& reset(std::size_t i) {
    check_index(i);
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    return *this;
  }

  BasicBitSet& operator|=(const BasicBitSet& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BasicBitSet& operator&=(const BasicBitSet& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BasicBitSet& operator-=(const BasicBitSet& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend BasicBitSet operator|(BasicBitSet a, const BasicBitSet& b) { return a |= b; }
  friend BasicBitSet operator&(BasicBitSet a, const BasicBitSet& b) { return a &= b; }
  friend BasicBitSet operator-(BasicBitSet a, const BasicBitSet& b) { return a -= b; }

  BasicBitSet complement() const {
    BasicBitSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  bool is_subset_of(const BasicBitSet& o) const {
    require_same_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const BasicBitSet& o) const { return is_subset_of(o) && *this != o; }

  bool intersects(const BasicBitSet& o) const {
    require_same_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  /// Smallest member, or npos.
  std::size_t first() const noexcept { return scan_from(0); }

  /// Smallest member strictly greater than i, or npos.
  std::size_t next(std::size_t i) const noexcept {
    if (i == npos || i + 1 >= size_) return npos;
    return scan_from(i + 1);
  }

  const_iterator begin() const { return const_iterator(this, first()); }
  const_iterator end() const { return const_iterator(this, npos); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto i : *this) out.push_back(i);
    return out;
  }

  /// Copy over a universe of a different size; members >= new_size are dropped.
  BasicBitSet resized(std::size_t new_size) const {
    BasicBitSet r(new_size);
    const auto n = std::min(words_.size(), r.words_.size());
    for (std::size_t k = 0; k < n; ++k) r.words_[k] = words_[k];
    r.trim();
    return r;
  }

  /// Removes index i from the universe; members above i shift down by one.
  BasicBitSet without_index(std::size_t i) const {
    check_index(i);
    BasicBitSet r(size_ - 1);
    const std::size_t wi = i / word_bits;
    const std::size_t bi = i % word_bits;
    for (std::size_t k = 0; k < wi; ++k) r.words_[k] = words_[k];
    if (wi < r.words_.size()) {
      // Word wi: keep bits below bi, shift bits above bi down by one.
      const word_type low_mask = bi == 0 ? 0 : (~word_type{0} >> (word_bits - bi));
      word_type w = (words_[wi] & low_mask) | ((words_[wi] >> 1) & ~low_mask);
      if (wi + 1 < words_.size()) w |= words_[wi + 1] << (word_bits - 1);
      r.words_[wi] = w;
    }
    for (std::size_t k = wi + 1; k < r.words_.size(); ++k) {
      word_type w = words_[k] >> 1;
      if (k + 1 < words_.size()) w |= words_[k + 1] << (word_bits - 1);
      r.words_[k] = w;
    }
    r.trim();
    return r;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const BasicBitSet& a, const BasicBitSet& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

  void check_index(std::size_t i) const {
    if (i >= size_)
      throw std::out_of_range("index " + std::to_string(i) + " outside universe of size " + std::to_string(size_));
  }

  void require_same_size(const BasicBitSet& o) const {
    if (o.size_ != size_)
      throw std::invalid_argument("set operation on universes of different size (" + std::to_string(size_) +
                                  " vs " + std::to_string(o.size_) + ")");
  }

  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
      words_.back() &= ~word_type{0} >> (word_bits - size_ % word_bits);
  }

  std::size_t scan_from(std::size_t i) const noexcept {
    if (i >= size_) return npos;
    std::size_t k = i / word_bits;
    word_type w = words_[k] & (~word_type{0} << (i % word_bits));
    while (true) {
      if (w) return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return npos;
      w = words_[k];
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Canonical order: by cardinality, then lexicographically by ascending members.
template <class Tag>
bool canonical_less(const BasicBitSet<Tag>& a, const BasicBitSet<Tag>& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the set owning the smallest element of the symmetric
  // difference comes first.
  const auto& wa = a.words();
  const auto& wb = b.words();
  const auto n = std::min(wa.size(), wb.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto diff = wa[k] ^ wb[k];
    if (diff) return (wa[k] & (diff & (~diff + 1))) != 0;
  }
  return wa.size() < wb.size();
}

template <class Tag>
struct BitSetHash {
  std::size_t operator()(const BasicBitSet<Tag>& s) const noexcept { return s.hash(); }
};

}  // namespace covred
