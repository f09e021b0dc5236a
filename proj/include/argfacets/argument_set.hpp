#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace argfacets {

using ArgumentIndex = std::uint32_t;

/// Set of argument indices over a fixed universe 0..universe()-1, stored as a
/// bit mask. Equality is extensional; sets over different universes never compare equal.
class ArgumentSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ArgumentIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const ArgumentIndex*;
    using reference = ArgumentIndex;

    const_iterator() = default;
    ArgumentIndex operator*() const { return static_cast<ArgumentIndex>(pos_); }
    const_iterator& operator++() {
      advance(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    friend class ArgumentSet;
    const_iterator(const ArgumentSet* set, std::size_t from) : set_(set) { advance(from); }

    void advance(std::size_t from) {
      const auto& w = set_->words_;
      std::size_t wi = from / kBits;
      if (wi >= w.size()) {
        pos_ = set_->universe_;
        return;
      }
      Word cur = w[wi] & (~Word{0} << (from % kBits));
      while (cur == 0) {
        if (++wi == w.size()) {
          pos_ = set_->universe_;
          return;
        }
        cur = w[wi];
      }
      pos_ = wi * kBits + static_cast<std::size_t>(std::countr_zero(cur));
    }

    const ArgumentSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ArgumentSet() = default;
  explicit ArgumentSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  ArgumentSet(std::size_t universe, std::initializer_list<ArgumentIndex> members)
      : ArgumentSet(universe) {
    for (auto m : members) insert(m);
  }

  static ArgumentSet full(std::size_t universe) {
    ArgumentSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <class Range>
  static ArgumentSet from_range(std::size_t universe, const Range& members) {
    ArgumentSet s(universe);
    for (auto m : members) s.insert(static_cast<ArgumentIndex>(m));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ArgumentIndex i) const noexcept {
    return i < universe_ && (words_[i / kBits] >> (i % kBits)) & 1U;
  }
  void insert(ArgumentIndex i) {
    assert(i < universe_);
    words_[i / kBits] |= Word{1} << (i % kBits);
  }
  void erase(ArgumentIndex i) {
    assert(i < universe_);
    words_[i / kBits] &= ~(Word{1} << (i % kBits));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  ArgumentSet& operator|=(const ArgumentSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ArgumentSet& operator&=(const ArgumentSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  ArgumentSet& operator-=(const ArgumentSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ArgumentSet operator|(ArgumentSet a, const ArgumentSet& b) { return a |= b; }
  friend ArgumentSet operator&(ArgumentSet a, const ArgumentSet& b) { return a &= b; }
  friend ArgumentSet operator-(ArgumentSet a, const ArgumentSet& b) { return a -= b; }

  ArgumentSet complement() const { return full(universe_) - *this; }

  bool is_subset_of(const ArgumentSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ArgumentSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    const_iterator it;
    it.set_ = this;
    it.pos_ = universe_;
    return it;
  }

  std::vector<ArgumentIndex> to_vector() const { return {begin(), end()}; }

  bool operator==(const ArgumentSet&) const = default;

  // Canonical total order: lexicographic on the ascending member lists.
  friend std::strong_ordering operator<=>(const ArgumentSet& a, const ArgumentSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    auto ia = a.begin(), ib = b.begin();
    const auto ea = a.end(), eb = b.end();
    for (; ia != ea && ib != eb; ++ia, ++ib)
      if (auto c = *ia <=> *ib; c != 0) return c;
    if (ia == ea && ib == eb) return std::strong_ordering::equal;
    return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace argfacets
