#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace ufspace {

/// Subset of {0, ..., 63} stored as a single word. The tag keeps sets of
/// semilattice elements and sets of ultrafilter points from mixing.
template <typename Tag>
class SmallSet {
 public:
  static constexpr std::size_t capacity = 64;

  class iterator {
   public:
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    value_type operator*() const {
      return static_cast<value_type>(std::countr_zero(rest_));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr SmallSet() = default;
  static constexpr SmallSet from_bits(std::uint64_t bits) {
    SmallSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr SmallSet singleton(std::uint32_t i) {
    return from_bits(std::uint64_t{1} << i);
  }
  /// {0, ..., n-1}
  static constexpr SmallSet first(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::uint32_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::uint32_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::uint32_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(SmallSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Complement relative to {0, ..., n-1}.
  constexpr SmallSet complement(std::size_t n) const {
    return from_bits(~bits_ & first(n).bits_);
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<std::uint32_t> to_vector() const { return {begin(), end()}; }

  constexpr SmallSet& operator|=(SmallSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr SmallSet& operator&=(SmallSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) { return a |= b; }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) { return a &= b; }
  friend constexpr bool operator==(SmallSet, SmallSet) = default;
  friend constexpr auto operator<=>(SmallSet a, SmallSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ufspace
