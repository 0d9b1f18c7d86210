#pragma once

// The equality pattern of a space: the partition of its unordered point
// pairs by distance equality. Two unordered pairs land in the same block iff
// their distances are equal. This partition is the complete invariant for
// combinatorial self similarity -- the actual distance values never matter,
// only which pairs share one.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combsim/error.hpp"
#include "combsim/space.hpp"

namespace combsim {

using PointPair = std::pair<int, int>;  // (i, j) with i < j

// All unordered pairs of {0..n-1} in lexicographic order.
inline std::vector<PointPair> unordered_pairs(int n) {
  std::vector<PointPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

struct EqualityPattern {
  int n = 0;
  // Canonical order: blocks sorted by (size descending, then lexicographically
  // smallest member pair); pairs inside a block sorted lexicographically.
  std::vector<std::vector<PointPair>> blocks;

  bool operator==(const EqualityPattern&) const = default;

  // Sizes in canonical block order (non-increasing).
  std::vector<int> block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
    return sizes;
  }
};

// Validates that `blocks` partitions the pair set of {0..n-1} exactly, then
// puts blocks and pairs into canonical order.
inline EqualityPattern make_pattern(int n,
                                    std::vector<std::vector<PointPair>> blocks) {
  std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<PointPair> seen;
  for (auto& block : blocks) {
    if (block.empty()) {
      throw ValidationError("pattern blocks must be nonempty");
    }
    std::sort(block.begin(), block.end());
    for (const auto& [i, j] : block) {
      if (i < 0 || j <= i || j >= n) {
        throw ValidationError("pattern pair out of range");
      }
      seen.emplace_back(i, j);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (seen.size() != expected ||
      std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ValidationError("pattern blocks must cover each pair exactly once");
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return EqualityPattern{n, std::move(blocks)};
}

inline EqualityPattern equality_pattern(const SemimetricSpace& space) {
  std::map<Rational, std::vector<PointPair>> by_value;
  for (const auto& [i, j] : unordered_pairs(space.size())) {
    by_value[space.dist(i, j)].emplace_back(i, j);
  }
  std::vector<std::vector<PointPair>> blocks;
  blocks.reserve(by_value.size());
  for (auto& [value, pairs] : by_value) blocks.push_back(std::move(pairs));
  return make_pattern(space.size(), std::move(blocks));
}

// Deterministic exact-pattern key: equal patterns yield equal strings and the
// block-size multiset is recoverable. Not canonical under vertex relabeling;
// use it for caching and for the block-size pruning check only.
inline std::string pattern_fingerprint(const EqualityPattern& pattern) {
  std::string out = "n=" + std::to_string(pattern.n) + ";sizes=";
  const auto sizes = pattern.block_sizes();
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (b > 0) out += ',';
    out += std::to_string(sizes[b]);
  }
  out += ";blocks=";
  for (std::size_t b = 0; b < pattern.blocks.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t p = 0; p < pattern.blocks[b].size(); ++p) {
      if (p > 0) out += ',';
      out += std::to_string(pattern.blocks[b][p].first);
      out += '-';
      out += std::to_string(pattern.blocks[b][p].second);
    }
  }
  return out;
}

}  // namespace combsim
