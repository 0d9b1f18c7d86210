#pragma once

// Permutations of {0..n-1} as explicit image arrays.
//
// Composition convention, fixed here and pinned by a unit test:
//   compose(p, q) maps i to p(q(i)).

#include <algorithm>
#include <cassert>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "combsim/error.hpp"

namespace combsim {

class Permutation {
 public:
  // images[i] is the image of point i; must be a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) {
      throw ValidationError("permutation degree must be at least 1");
    }
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
        throw ValidationError("image array is not a bijection on {0..n-1}");
      }
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    assert(i >= 0 && i < degree());
    return images_[static_cast<std::size_t>(i)];
  }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i) {
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
  }

  bool operator==(const Permutation&) const = default;
  // Lexicographic order on image arrays.
  auto operator<=>(const Permutation&) const = default;

  // One-line serialization, e.g. "[2, 0, 1]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(images_[i]);
    }
    out += "]";
    return out;
  }

 private:
  std::vector<int> images_;
};

// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) {
    images[static_cast<std::size_t>(i)] = p(q(i));
  }
  return Permutation(std::move(images));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) {
    images[static_cast<std::size_t>(p(i))] = i;
  }
  return Permutation(std::move(images));
}

// Default cap on exhaustive permutation enumeration (8! = 40320). A config
// knob, not a hard constant.
inline constexpr int kDefaultCap = 8;

// All n! permutations in lexicographic order of image arrays.
inline std::vector<Permutation> all_permutations(int n, int cap = kDefaultCap) {
  if (n < 1) {
    throw ValidationError("permutation degree must be at least 1");
  }
  if (n > cap) {
    throw DegreeTooLarge("exhaustive enumeration of degree " +
                         std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace detail {

// Streaming form used by the exhaustive search; visits image arrays in
// lexicographic order without allocating per candidate.
template <typename Fn>
void for_each_image_array(int n, Fn&& fn) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    fn(const_cast<const std::vector<int>&>(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace detail

}  // namespace combsim
