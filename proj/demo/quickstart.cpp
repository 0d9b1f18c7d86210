// Quick tour of the library: build a space, look at its equality pattern,
// classify it, and compute its similarity and isometry groups.

#include <iostream>

#include "combsim/classify.hpp"
#include "combsim/generators.hpp"
#include "combsim/pattern.hpp"
#include "combsim/similarity.hpp"

int main() {
  using namespace combsim;

  // The 3-4-5 rectangle: four points, sides 3 and 4, diagonals 5.
  SemimetricSpace rect = rectangle_example();
  std::cout << "rectangle matrix:\n" << serialize(rect);

  EqualityPattern pattern = equality_pattern(rect);
  std::cout << "pattern: " << pattern_fingerprint(pattern) << "\n";

  Classification c = classify(rect);
  std::cout << "discrete=" << c.discrete
            << " strongly_rigid=" << c.strongly_rigid
            << " weakly_rigid=" << c.weakly_rigid
            << " rectangle_type=" << c.rectangle_type
            << " cs_equals_sym=" << c.cs_equals_sym << "\n";

  PermGroup cs = self_similarity_group(rect);
  PermGroup iso = self_isometry_group(rect);
  std::cout << "|Cs| = " << cs.order() << " (full symmetric group: "
            << (is_symmetric_group(cs) ? "yes" : "no") << ")\n";
  std::cout << "|Iso| = " << iso.order() << "\n";

  // A pseudolinear quadruple with distinct side lengths is combinatorially
  // similar to the rectangle even though no isometry exists.
  SemimetricSpace quad = pseudolinear(Rational(1), Rational(2));
  if (auto witness = are_combinatorially_similar(quad, rect)) {
    std::cout << "pseudolinear(1,2) ~ rectangle via psi = "
              << witness->psi.to_string() << ", f = "
              << witness->value_map.to_string() << "\n";
  }
  return 0;
}
