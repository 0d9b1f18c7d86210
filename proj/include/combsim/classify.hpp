#pragma once

// Structural predicates on semimetric spaces and the decision procedure for
// "every permutation is a combinatorial self similarity" (Cs = Sym). The
// structural route never searches permutations; theorem_crosscheck compares
// it against the brute-force group computation and the two must always agree.
//
// All five flags depend only on the equality pattern, never on the actual
// distance values.

#include <vector>

#include "combsim/error.hpp"
#include "combsim/pattern.hpp"
#include "combsim/similarity.hpp"
#include "combsim/space.hpp"

namespace combsim {

struct Classification {
  bool discrete = false;
  bool strongly_rigid = false;
  bool weakly_rigid = false;
  bool rectangle_type = false;
  bool cs_equals_sym = false;

  bool operator==(const Classification&) const = default;
};

// At most two distance values occur ({0} or {0, k}); equivalently every
// permutation is an isometry.
inline bool is_discrete(const SemimetricSpace& space) {
  return space.value_set().size() <= 2;
}

// No two distinct unordered pairs share a distance (every pattern block is a
// singleton). Vacuously true for n <= 2.
inline bool is_strongly_rigid(const SemimetricSpace& space) {
  std::vector<Rational> values;
  int n = space.size();
  values.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      values.push_back(space.dist(i, j));
    }
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

// Every three-point subspace is strongly rigid: all triangles scalene in the
// equality sense.
inline bool is_weakly_rigid(const SemimetricSpace& space) {
  int n = space.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Rational& a = space.dist(i, j);
        const Rational& b = space.dist(i, k);
        const Rational& c = space.dist(j, k);
        if (a == b || a == c || b == c) return false;
      }
    }
  }
  return true;
}

// True iff all three-point subspaces carry the same distance multiset.
inline bool three_point_subspaces_all_isometric(const SemimetricSpace& space) {
  int n = space.size();
  if (n < 3) {
    throw TooFewPoints("need at least 3 points, have " + std::to_string(n));
  }
  std::vector<Rational> reference;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rational> triple = {space.dist(i, j), space.dist(i, k),
                                        space.dist(j, k)};
        std::sort(triple.begin(), triple.end());
        if (reference.empty()) {
          reference = std::move(triple);
        } else if (triple != reference) {
          return false;
        }
      }
    }
  }
  return true;
}

// Some three points with all pairwise distances equal. False for n < 3.
inline bool has_equilateral_triangle(const SemimetricSpace& space) {
  int n = space.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (space.dist(i, j) == space.dist(i, k) &&
            space.dist(i, k) == space.dist(j, k)) {
          return true;
        }
      }
    }
  }
  return false;
}

namespace detail {

// Pattern formulation: 4 points whose equality pattern is the 1-factorization
// of K4 (three blocks of size 2, each a perfect matching).
inline bool rectangle_type_by_pattern(const SemimetricSpace& space) {
  if (space.size() != 4) return false;
  EqualityPattern pattern = equality_pattern(space);
  if (pattern.blocks.size() != 3) return false;
  for (const auto& block : pattern.blocks) {
    if (block.size() != 2) return false;
    const auto& [p, q] = block[0];
    const auto& [r, s] = block[1];
    if (p == r || p == s || q == r || q == s) return false;  // not a matching
  }
  return true;
}

// Subspace formulation: weakly rigid with all three-point subspaces
// isometric (nonvacuous only at exactly 4 points).
inline bool rectangle_type_by_subspaces(const SemimetricSpace& space) {
  return space.size() == 4 && is_weakly_rigid(space) &&
         three_point_subspaces_all_isometric(space);
}

}  // namespace detail

// The two formulations are provably equivalent; computing both keeps each
// honest.
inline bool is_rectangle_type(const SemimetricSpace& space) {
  bool by_pattern = detail::rectangle_type_by_pattern(space);
  bool by_subspaces = detail::rectangle_type_by_subspaces(space);
  if (by_pattern != by_subspaces) {
    throw InternalError("rectangle-type formulations disagree");
  }
  return by_pattern;
}

// Structural decision for Cs = Sym: discrete, strongly rigid, or (for n >= 3)
// weakly rigid with all three-point subspaces isometric -- the last disjunct
// is nonvacuous only at n = 4, where it reduces to rectangle type. No
// permutation search happens here.
inline bool cs_equals_sym_structural(const SemimetricSpace& space) {
  return is_discrete(space) || is_strongly_rigid(space) ||
         is_rectangle_type(space);
}

inline Classification classify(const SemimetricSpace& space) {
  Classification c;
  c.discrete = is_discrete(space);
  c.strongly_rigid = is_strongly_rigid(space);
  c.weakly_rigid = is_weakly_rigid(space);
  c.rectangle_type = is_rectangle_type(space);
  c.cs_equals_sym = c.discrete || c.strongly_rigid || c.rectangle_type;
  return c;
}

struct CrosscheckReport {
  bool structural = false;
  bool brute_force = false;
  bool agree = false;
};

// Runs both routes. `agree` must be true for every valid space; false means a
// bug (or a counterexample to the classification theorem).
inline CrosscheckReport theorem_crosscheck(const SemimetricSpace& space,
                                           const EngineOptions& opts = {}) {
  CrosscheckReport report;
  report.structural = cs_equals_sym_structural(space);
  report.brute_force = is_symmetric_group(self_similarity_group(space, opts));
  report.agree = report.structural == report.brute_force;
  return report;
}

}  // namespace combsim
