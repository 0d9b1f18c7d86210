#pragma once

// Exhaustive census over every distance-equality pattern at a given point
// count: structural classification counts, brute-force Cs = Sym counts, and
// the number of structural/brute-force disagreements (always 0 unless the
// library is broken).

#include <cstdint>
#include <string>
#include <vector>

#include "combsim/classify.hpp"
#include "combsim/generators.hpp"
#include "combsim/similarity.hpp"

namespace combsim {

struct CensusResult {
  int n = 0;
  std::uint64_t total_patterns = 0;
  std::uint64_t full_sym = 0;  // brute-force Cs = Sym
  std::uint64_t discrete = 0;
  std::uint64_t strongly_rigid = 0;
  std::uint64_t weakly_rigid = 0;
  std::uint64_t rectangle_type = 0;
  std::uint64_t cs_equals_sym_structural = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::string> full_sym_ids;  // RGS strings, enumeration order
};

// Runs the census; optionally visits every pattern with its space,
// classification, and brute-force verdict.
template <typename PerPattern>
CensusResult run_census_with(int n, PerPattern&& per_pattern,
                             const EngineOptions& opts = {}) {
  CensusResult result;
  result.n = n;
  PatternStream stream(n);
  while (auto id = stream.next()) {
    SemimetricSpace space = space_from_pattern(*id);
    Classification c = classify(space);
    bool brute = is_symmetric_group(self_similarity_group(space, opts));

    ++result.total_patterns;
    if (brute) {
      ++result.full_sym;
      result.full_sym_ids.push_back(id->rgs);
    }
    if (c.discrete) ++result.discrete;
    if (c.strongly_rigid) ++result.strongly_rigid;
    if (c.weakly_rigid) ++result.weakly_rigid;
    if (c.rectangle_type) ++result.rectangle_type;
    if (c.cs_equals_sym) ++result.cs_equals_sym_structural;
    if (c.cs_equals_sym != brute) ++result.disagreements;

    per_pattern(*id, space, c, brute);
  }
  return result;
}

inline CensusResult run_census(int n, const EngineOptions& opts = {}) {
  return run_census_with(
      n,
      [](const PatternId&, const SemimetricSpace&, const Classification&,
         bool) {},
      opts);
}

}  // namespace combsim
