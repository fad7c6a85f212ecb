#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace roughlat {

inline constexpr std::size_t kMaxUniverse = 64;

/// A subset of a universe of at most 64 elements, stored as a bit mask (bit i = element i).
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint64_t{1} << i); }
  /// {0, ..., n-1}
  static constexpr Subset prefix(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Index of the smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr Subset operator|(Subset a, Subset b) { return a |= b; }
  friend constexpr Subset operator&(Subset a, Subset b) { return a &= b; }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return a -= b; }

  friend constexpr bool operator==(Subset, Subset) = default;
  /// Canonical order: numeric value of the mask.
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace roughlat
