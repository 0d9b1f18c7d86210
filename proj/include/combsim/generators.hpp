#pragma once

// Named example spaces, seeded random spaces, and exhaustive enumeration of
// all distance-equality patterns for small point counts.
//
// Because semimetrics carry no triangle inequality, ANY assignment of
// distinct positive values to pattern blocks realizes that pattern, so
// enumerating set partitions of the pair set enumerates all spaces up to
// combinatorial similarity. Patterns are encoded as restricted growth
// strings (RGS) over the pair set in lexicographic pair order: rgs[0] = 0 and
// rgs[k] <= 1 + max(rgs[0..k-1]).

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "combsim/error.hpp"
#include "combsim/pattern.hpp"
#include "combsim/rational.hpp"
#include "combsim/space.hpp"

namespace combsim {

struct PatternId {
  int n = 0;
  std::string rgs;  // one digit per pair, lexicographic pair order

  bool operator==(const PatternId&) const = default;
};

inline bool is_valid_rgs(int n, std::string_view rgs) {
  if (n < 1) return false;
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (rgs.size() != pairs) return false;
  int max_seen = -1;
  for (char c : rgs) {
    if (c < '0' || c > '9') return false;
    int v = c - '0';
    if (v > max_seen + 1) return false;
    if (v > max_seen) max_seen = v;
  }
  return true;
}

namespace detail {

inline SemimetricSpace space_from_pair_values(
    int n, const std::vector<Rational>& pair_values) {
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(0));
  std::size_t e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      entries[static_cast<std::size_t>(i) * n + j] = pair_values[e];
      entries[static_cast<std::size_t>(j) * n + i] = pair_values[e];
      ++e;
    }
  }
  return SemimetricSpace(n, std::move(entries));
}

}  // namespace detail

// The 4-point rectangle with sides 3 and 4 and diagonals 5. Neither strongly
// rigid nor discrete, yet every permutation of it is a combinatorial self
// similarity.
inline SemimetricSpace rectangle_example() {
  // pair order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  return detail::space_from_pair_values(
      4, {Rational(3), Rational(5), Rational(4), Rational(4), Rational(5),
          Rational(3)});
}

// Four points with distances s, s, t, t, s+t, s+t arranged around a cycle:
// d(0,1) = d(2,3) = s, d(1,2) = d(3,0) = t, d(0,2) = d(1,3) = s + t.
inline SemimetricSpace pseudolinear(const Rational& s, const Rational& t) {
  if (s <= Rational(0) || t <= Rational(0)) {
    throw NonPositiveParameter("pseudolinear parameters must be positive");
  }
  return detail::space_from_pair_values(4, {s, s + t, t, t, s + t, s});
}

// All off-diagonal distances equal to k.
inline SemimetricSpace discrete_space(int n, const Rational& k) {
  if (n < 1) {
    throw NonPositiveParameter("point count must be at least 1");
  }
  if (k <= Rational(0)) {
    throw NonPositiveParameter("distance parameter must be positive");
  }
  std::vector<Rational> pair_values(static_cast<std::size_t>(n) * (n - 1) / 2,
                                    k);
  return detail::space_from_pair_values(n, pair_values);
}

// All n(n-1)/2 distances pairwise distinct. Plain mode uses 1, 2, ...;
// metric mode packs distinct rationals into [1, 2], where every triangle
// inequality holds automatically.
inline SemimetricSpace strongly_rigid_space(int n, bool metric_mode = false) {
  if (n < 1) {
    throw NonPositiveParameter("point count must be at least 1");
  }
  std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<Rational> pair_values;
  pair_values.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (metric_mode) {
      pair_values.push_back(Rational(1) +
                            Rational(static_cast<long long>(e),
                                     static_cast<long long>(m)));
    } else {
      pair_values.push_back(Rational(static_cast<long long>(e) + 1));
    }
  }
  return detail::space_from_pair_values(n, pair_values);
}

// Seeded random space: the pairs are assigned to `block_count` blocks
// uniformly among surjections (rejection sampling over i.i.d. uniform draws),
// and block b carries the distance value b + 1. Deterministic in the seed:
// the generator is std::mt19937_64 and block draws take the engine output
// modulo block_count.
inline SemimetricSpace random_space(int n, int block_count,
                                    std::uint64_t seed) {
  if (n < 1) {
    throw NonPositiveParameter("point count must be at least 1");
  }
  std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (n == 1) {
    // No pairs to assign; accept 0 or 1 as a block count.
    if (block_count < 0 || block_count > 1) {
      throw BadBlockCount("single-point space admits no pair blocks");
    }
    return detail::space_from_pair_values(1, {});
  }
  if (block_count < 1 || static_cast<std::size_t>(block_count) > m) {
    throw BadBlockCount("block count " + std::to_string(block_count) +
                        " outside [1, " + std::to_string(m) + "]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> assignment(m, 0);
  std::vector<char> hit(static_cast<std::size_t>(block_count), 0);
  while (true) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(block_count));
      assignment[e] = b;
      hit[static_cast<std::size_t>(b)] = 1;
    }
    if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) {
      break;
    }
  }
  std::vector<Rational> pair_values;
  pair_values.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    pair_values.push_back(Rational(assignment[e] + 1));
  }
  return detail::space_from_pair_values(n, pair_values);
}

// Single-digit RGS encoding caps enumeration at n = 5 (10 pairs; Bell(10) =
// 115975 patterns). Bell(15) is out of desk scale anyway.
inline constexpr int kMinEnumerationN = 2;
inline constexpr int kMaxEnumerationN = 5;

// Streams every set partition of the pair set exactly once, in lexicographic
// RGS order.
class PatternStream {
 public:
  explicit PatternStream(int n) : n_(n) {
    if (n < kMinEnumerationN || n > kMaxEnumerationN) {
      throw DegreeTooLarge("pattern enumeration supports " +
                           std::to_string(kMinEnumerationN) + " <= n <= " +
                           std::to_string(kMaxEnumerationN) + ", got " +
                           std::to_string(n));
    }
    rgs_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
    done_ = false;
  }

  std::optional<PatternId> next() {
    if (done_) return std::nullopt;
    PatternId current{n_, render()};
    advance();
    return current;
  }

 private:
  std::string render() const {
    std::string out(rgs_.size(), '0');
    for (std::size_t k = 0; k < rgs_.size(); ++k) {
      out[k] = static_cast<char>('0' + rgs_[k]);
    }
    return out;
  }

  void advance() {
    // Successor in lexicographic RGS order: find the rightmost position that
    // can grow (rgs[k] <= max of the prefix), bump it, zero the suffix.
    for (std::size_t k = rgs_.size(); k-- > 1;) {
      int max_prefix = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (rgs_[i] > max_prefix) max_prefix = rgs_[i];
      }
      if (rgs_[k] <= max_prefix) {
        ++rgs_[k];
        std::fill(rgs_.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                  rgs_.end(), 0);
        return;
      }
    }
    done_ = true;
  }

  int n_;
  std::vector<int> rgs_;
  bool done_ = false;
};

inline std::vector<PatternId> enumerate_patterns(int n) {
  PatternStream stream(n);
  std::vector<PatternId> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

// Realizes a pattern as a space: the pairs of block i get distance i + 1.
inline SemimetricSpace space_from_pattern(const PatternId& id) {
  if (!is_valid_rgs(id.n, id.rgs)) {
    throw InvalidRGS("'" + id.rgs + "' is not a restricted growth string for n = " +
                     std::to_string(id.n));
  }
  std::vector<Rational> pair_values;
  pair_values.reserve(id.rgs.size());
  for (char c : id.rgs) {
    pair_values.push_back(Rational(c - '0' + 1));
  }
  return detail::space_from_pair_values(id.n, pair_values);
}

}  // namespace combsim
