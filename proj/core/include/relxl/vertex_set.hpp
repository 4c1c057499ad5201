#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace relxl {

inline constexpr int kMaxVertices = 64;

/// A subset of the vertices of a defining graph, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet pair(int u, int v) { return single(u) | single(v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest member; undefined for the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  constexpr friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  constexpr friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr friend bool operator==(VertexSet, VertexSet) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Orders by cardinality first, then by bit pattern. Used for every sorted
/// subset listing so that output is stable.
struct BySizeThenBits {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace relxl

template <>
struct std::hash<relxl::VertexSet> {
  std::size_t operator()(relxl::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
