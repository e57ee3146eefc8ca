#include "lieander/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace lieander {

namespace {

// 2n must stay addressable by int32 point indices.
constexpr int kMaxSum = 1 << 29;

int checked_sum(const std::vector<int>& parts) {
  if (parts.empty())
    throw std::invalid_argument("composition must have at least one part");
  std::int64_t sum = 0;
  for (int p : parts) {
    if (p < 1)
      throw std::invalid_argument("composition parts must be positive");
    sum += p;
  }
  if (sum > kMaxSum)
    throw std::invalid_argument("composition sum too large");
  return static_cast<int>(sum);
}

}  // namespace

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts)), n_(checked_sum(parts_)) {}

Composition Composition::reversed() const {
  std::vector<int> rev(parts_.rbegin(), parts_.rend());
  return Composition(std::move(rev));
}

ArchInvolution::ArchInvolution(std::vector<std::int32_t> map) : map_(std::move(map)) {
  const auto size = static_cast<std::int32_t>(map_.size());
  if (size == 0 || size % 2 != 0)
    throw std::invalid_argument("involution needs a positive even number of points");
  for (std::int32_t i = 0; i < size; ++i) {
    const std::int32_t j = map_[i];
    if (j < 0 || j >= size || j == i || map_[j] != i || ((i ^ j) & 1) == 0)
      throw std::invalid_argument("not a parity-exchanging fixed-point-free involution");
  }
}

CompositionPair::CompositionPair(Composition top, Composition bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.n() != bottom_.n())
    throw std::invalid_argument("top and bottom compositions must have equal sums");
}

void detail::build_involution_into(std::span<const int> parts,
                                   std::vector<std::int32_t>& map) {
  std::int32_t total = 0;
  for (int p : parts) total += 2 * p;
  map.resize(total);
  std::int32_t off = 0;
  for (int p : parts) {
    const std::int32_t len = 2 * p;
    const std::int32_t last = off + len - 1;
    for (std::int32_t i = 0; i < len; ++i) map[off + i] = last - i;
    off += len;
  }
}

bool detail::alternating_walk_connected(std::span<const std::int32_t> top,
                                        std::span<const std::int32_t> bottom) {
  // Each point lies on one top arch and one bottom arch, so the component of
  // point 0 is the alternating cycle through it; the walk returns to 0 after
  // exactly |component| steps.
  const auto total = static_cast<std::int32_t>(top.size());
  std::int32_t x = 0;
  std::int32_t steps = 0;
  do {
    x = bottom[top[x]];
    steps += 2;
  } while (x != 0);
  return steps == total;
}

ArchInvolution build_arch_involution(const Composition& c) {
  std::vector<std::int32_t> map;
  detail::build_involution_into(c.parts(), map);
  return ArchInvolution(std::move(map));
}

int orbit_count(const CompositionPair& p) {
  const ArchInvolution top = build_arch_involution(p.top());
  const ArchInvolution bottom = build_arch_involution(p.bottom());
  const int total = top.points();

  // Union-find with path halving; arches are the union edges.
  std::vector<std::int32_t> parent(total);
  for (std::int32_t i = 0; i < total; ++i) parent[i] = i;
  auto find = [&parent](std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::int32_t i = 0; i < total; ++i) {
    unite(i, top[i]);
    unite(i, bottom[i]);
  }

  int orbits = 0;
  for (std::int32_t i = 0; i < total; ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

bool is_lieander(const CompositionPair& p) {
  std::vector<std::int32_t> top, bottom;
  detail::build_involution_into(p.top().parts(), top);
  detail::build_involution_into(p.bottom().parts(), bottom);
  return detail::alternating_walk_connected(top, bottom);
}

std::vector<int> product_cycle_type(const CompositionPair& p) {
  const ArchInvolution top = build_arch_involution(p.top());
  const ArchInvolution bottom = build_arch_involution(p.bottom());
  const int total = top.points();

  std::vector<bool> seen(total, false);
  std::vector<int> type;
  for (std::int32_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::int32_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = top[bottom[x]];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

namespace {

std::vector<int> parse_parts(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty())
    throw std::invalid_argument("empty composition");

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t comma = std::min(compact.find(',', pos), compact.size());
    const std::string_view token{compact.data() + pos, comma - pos};
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
      throw std::invalid_argument("composition parts must be positive integers: '" +
                                  std::string(token) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

Composition parse_composition(std::string_view text) {
  return Composition(parse_parts(text));
}

CompositionPair parse_pair(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("pair must be written as top/bottom");
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw std::invalid_argument("pair must contain exactly one '/'");
  return CompositionPair(parse_composition(text.substr(0, slash)),
                         parse_composition(text.substr(slash + 1)));
}

std::string to_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(c.parts()[i]);
  }
  return out;
}

}  // namespace lieander
