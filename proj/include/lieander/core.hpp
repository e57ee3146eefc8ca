#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lieander {

/// An ordered sequence of positive integers; the sum n and length k are cached.
/// One side of a lieander: part c_j encodes a block of c_j nested arches.
class Composition {
public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }

  Composition reversed() const;

  bool operator==(const Composition&) const = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Fixed-point-free involution on {0,...,2n-1} pairing arch endpoints.
/// Invariants (checked on construction): map[map[i]] == i, map[i] != i,
/// and i and map[i] have opposite parity.
class ArchInvolution {
public:
  explicit ArchInvolution(std::vector<std::int32_t> map);

  std::span<const std::int32_t> map() const { return map_; }
  std::int32_t operator[](std::int32_t i) const { return map_[i]; }
  int points() const { return static_cast<int>(map_.size()); }

private:
  std::vector<std::int32_t> map_;
};

/// Top and bottom compositions of the same integer: a candidate lieander.
class CompositionPair {
public:
  CompositionPair(Composition top, Composition bottom);

  const Composition& top() const { return top_; }
  const Composition& bottom() const { return bottom_; }
  int n() const { return top_.n(); }

private:
  Composition top_;
  Composition bottom_;
};

/// The involution reversing the order inside each consecutive block of
/// length 2*c_j. Points are 0-based.
ArchInvolution build_arch_involution(const Composition& c);

/// Number of orbits of the group generated by the two arch involutions on
/// {0,...,2n-1}: the connected components of the multicurve.
int orbit_count(const CompositionPair& p);

/// True iff the multicurve is a single closed curve (orbit_count == 1).
bool is_lieander(const CompositionPair& p);

/// Cycle type (sorted ascending) of the permutation top ∘ bottom on all 2n
/// points. The pair is a lieander iff the type is {n, n}.
std::vector<int> product_cycle_type(const CompositionPair& p);

/// Text format: comma-separated parts, pairs as "top/bottom",
/// e.g. "4,2,2/2,1,5". Whitespace-insensitive.
/// Throws std::invalid_argument on malformed input or unequal sums.
Composition parse_composition(std::string_view text);
CompositionPair parse_pair(std::string_view text);
std::string to_string(const Composition& c);

namespace detail {

// Hot-path variants on reusable buffers; parts must be a valid composition.
void build_involution_into(std::span<const int> parts, std::vector<std::int32_t>& map);

// Follows the alternating top/bottom walk from point 0; true iff the walk
// visits all points, i.e. the pair is connected.
bool alternating_walk_connected(std::span<const std::int32_t> top,
                                std::span<const std::int32_t> bottom);

}  // namespace detail

}  // namespace lieander
