#pragma once

// Shared test helpers and the independent oracles the unit and acceptance
// suites check the library against. Everything here works from first
// principles (definitions quantified over quadruples, Bell triangle, direct
// matrix construction) and stays off the implementation paths it validates.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "combsim/pattern.hpp"
#include "combsim/permutation.hpp"
#include "combsim/rational.hpp"
#include "combsim/space.hpp"

namespace combsim::test {

// Builds a space from its n(n-1)/2 pair values in lexicographic pair order.
inline SemimetricSpace space_from_pairs(int n,
                                        const std::vector<Rational>& values) {
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(0));
  std::size_t e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      entries[static_cast<std::size_t>(i) * n + j] = values[e];
      entries[static_cast<std::size_t>(j) * n + i] = values[e];
      ++e;
    }
  }
  return SemimetricSpace(n, std::move(entries));
}

// Three points with d(0,1) = a, d(0,2) = b, d(1,2) = c.
inline SemimetricSpace space3(const Rational& a, const Rational& b,
                              const Rational& c) {
  return space_from_pairs(3, {a, b, c});
}

// New space with d'(sigma(x), sigma(y)) = d(x, y).
inline SemimetricSpace relabel(const SemimetricSpace& s,
                               const Permutation& sigma) {
  int n = s.size();
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[static_cast<std::size_t>(sigma(i)) * n + sigma(j)] = s.dist(i, j);
    }
  }
  return SemimetricSpace(n, std::move(entries));
}

// Replaces the value of pattern block i (canonical block order) with
// block_values[i]. With distinct positive values the pattern is unchanged.
inline SemimetricSpace revalue_blocks(const SemimetricSpace& s,
                                      const std::vector<Rational>& block_values) {
  EqualityPattern pattern = equality_pattern(s);
  int n = s.size();
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(0));
  for (std::size_t b = 0; b < pattern.blocks.size(); ++b) {
    for (const auto& [i, j] : pattern.blocks[b]) {
      entries[static_cast<std::size_t>(i) * n + j] = block_values[b];
      entries[static_cast<std::size_t>(j) * n + i] = block_values[b];
    }
  }
  return SemimetricSpace(n, std::move(entries));
}

// Bell numbers B(0)..B(upto) via the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(int upto) {
  std::vector<std::uint64_t> bell = {1};
  std::vector<std::uint64_t> row = {1};
  for (int k = 1; k <= upto; ++k) {
    std::vector<std::uint64_t> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (std::size_t i = 0; i < row.size(); ++i) {
      next.push_back(next.back() + row[i]);
    }
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

// Definition-level oracle for combinatorial similarity: distance equality is
// preserved in both directions, quantified over every ordered quadruple.
inline bool similarity_equality_oracle(const SemimetricSpace& s,
                                       const SemimetricSpace& t,
                                       const Permutation& psi) {
  int n = s.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          bool eq_s = s.dist(x, y) == s.dist(u, v);
          bool eq_t = t.dist(psi(x), psi(y)) == t.dist(psi(u), psi(v));
          if (eq_s != eq_t) return false;
        }
      }
    }
  }
  return true;
}

// Definition-level oracle for weak similarity: the order relation between
// distances is preserved, quantified over every ordered quadruple.
inline bool weak_similarity_quadruple_oracle(const SemimetricSpace& s,
                                             const SemimetricSpace& t,
                                             const Permutation& psi) {
  int n = s.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int w = 0; w < n; ++w) {
        for (int z = 0; z < n; ++z) {
          bool le_s = s.dist(x, y) <= s.dist(w, z);
          bool le_t = t.dist(psi(x), psi(y)) <= t.dist(psi(w), psi(z));
          if (le_s != le_t) return false;
        }
      }
    }
  }
  return true;
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

inline std::vector<Rational> distinct_positive_rationals(std::mt19937_64& rng,
                                                         int count) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational candidate(static_cast<long long>(1 + rng() % 1000),
                       static_cast<long long>(1 + rng() % 20));
    if (std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(candidate);
    }
  }
  return out;
}

// RGS encoding of a pattern: blocks numbered by first appearance along the
// lexicographic edge order.
inline std::string pattern_to_rgs(const EqualityPattern& pattern) {
  auto pairs = unordered_pairs(pattern.n);
  std::string rgs(pairs.size(), '?');
  int next_index = 0;
  std::vector<int> block_index(pattern.blocks.size(), -1);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    for (std::size_t b = 0; b < pattern.blocks.size(); ++b) {
      const auto& block = pattern.blocks[b];
      if (std::find(block.begin(), block.end(), pairs[e]) != block.end()) {
        if (block_index[b] == -1) block_index[b] = next_index++;
        rgs[e] = static_cast<char>('0' + block_index[b]);
        break;
      }
    }
  }
  return rgs;
}

}  // namespace combsim::test
