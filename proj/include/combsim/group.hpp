#pragma once

// Explicit small permutation groups. Groups are stored as full element sets
// rather than generators: at desk scale (degree <= 8 by default) enumeration
// is cheap and explicit sets make closure and containment tests direct.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "combsim/error.hpp"
#include "combsim/permutation.hpp"

namespace combsim {

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw DegreeTooLarge("factorial(" + std::to_string(n) +
                         ") out of uint64 range");
  }
  std::uint64_t acc = 1;
  for (int i = 2; i <= n; ++i) acc *= static_cast<std::uint64_t>(i);
  return acc;
}

namespace detail {

// Packs an image array into one 64-bit word (4 bits per point, degree <= 16).
inline std::uint64_t pack_images(const std::vector<int>& images) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    code |= static_cast<std::uint64_t>(images[i]) << (4 * i);
  }
  return code;
}

}  // namespace detail

class PermGroup {
 public:
  // Validates the group axioms on the element set: identity membership,
  // inverses, and closure under composition (with a witness pair on failure).
  // The input is expected to already be closed; this constructor checks it.
  static PermGroup from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) {
      throw MissingIdentity("a group needs at least the identity element");
    }
    int degree = elements.front().degree();
    for (const Permutation& p : elements) {
      if (p.degree() != degree) {
        throw DegreeMismatch("group elements must share one degree");
      }
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());

    if (!std::binary_search(elements.begin(), elements.end(),
                            Permutation::identity(degree))) {
      throw MissingIdentity("element set lacks the identity permutation");
    }

    // A set of n! distinct permutations of degree n is all of Sym(n); the
    // axiom checks hold automatically and the quadratic closure scan would be
    // the only expensive case, so skip it.
    bool is_full_sym =
        degree <= 20 && elements.size() == factorial(degree);
    if (!is_full_sym) {
      for (const Permutation& p : elements) {
        if (!std::binary_search(elements.begin(), elements.end(),
                                inverse(p))) {
          throw NotClosed("inverse of " + p.to_string() +
                          " missing from element set");
        }
      }
      verify_closure(elements, degree);
    }
    return PermGroup(degree, std::move(elements));
  }

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }

  // Sorted lexicographically by image array.
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool operator==(const PermGroup&) const = default;

 private:
  PermGroup(int degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {}

  static void verify_closure(const std::vector<Permutation>& elements,
                             int degree) {
    if (degree <= 16) {
      std::vector<std::uint64_t> codes;
      codes.reserve(elements.size());
      for (const Permutation& p : elements) {
        codes.push_back(detail::pack_images(p.images()));
      }
      std::sort(codes.begin(), codes.end());
      std::vector<int> composed(static_cast<std::size_t>(degree));
      for (const Permutation& p : elements) {
        for (const Permutation& q : elements) {
          for (int i = 0; i < degree; ++i) {
            composed[static_cast<std::size_t>(i)] = p(q(i));
          }
          if (!std::binary_search(codes.begin(), codes.end(),
                                  detail::pack_images(composed))) {
            throw NotClosed("composition " + p.to_string() + " * " +
                            q.to_string() + " missing from element set");
          }
        }
      }
    } else {
      std::set<std::vector<int>> member;
      for (const Permutation& p : elements) member.insert(p.images());
      for (const Permutation& p : elements) {
        for (const Permutation& q : elements) {
          if (!member.count(compose(p, q).images())) {
            throw NotClosed("composition " + p.to_string() + " * " +
                            q.to_string() + " missing from element set");
          }
        }
      }
    }
  }

  int degree_;
  std::vector<Permutation> elements_;
};

inline PermGroup group_from_elements(std::vector<Permutation> elements) {
  return PermGroup::from_elements(std::move(elements));
}

// True iff the group is the full symmetric group on its degree.
inline bool is_symmetric_group(const PermGroup& g) {
  if (g.degree() > 20) return false;  // explicit sets cannot reach 21! anyway
  return g.order() == factorial(g.degree());
}

}  // namespace combsim
