#pragma once

// Combinatorial similarity engine.
//
// A bijection psi between spaces (A, d_A) and (B, d_B) is a combinatorial
// similarity when there is a value bijection f with
//
//     d_A(x, y) = f(d_B(psi(x), psi(y)))   for all x, y
//
// equivalently, when distance equality is preserved in both directions.
// Witnesses are stored source -> target, with f mapping target-side values to
// source-side values.
//
// Two search modes compute groups and witnesses:
//   exhaustive -- filter every permutation through the witness check; this is
//                 the oracle and the default for degree <= cap.
//   pruned     -- backtracking over partial vertex maps that maintains the
//                 partial value bijection and rejects on the first
//                 single-valuedness or injectivity conflict.
// Both visit candidates in ascending index order, so both produce the same
// elements in the same lexicographic order.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combsim/error.hpp"
#include "combsim/group.hpp"
#include "combsim/permutation.hpp"
#include "combsim/rational.hpp"
#include "combsim/space.hpp"

namespace combsim {

// Finite bijection between two value sets, sorted by domain value. For a
// witness the domain is the target space's value set and the codomain the
// source space's. Always maps 0 to 0.
struct ValueBijection {
  std::vector<std::pair<Rational, Rational>> pairs;

  bool operator==(const ValueBijection&) const = default;

  bool is_identity() const {
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const auto& p) { return p.first == p.second; });
  }

  // Strictly increasing codomain over the (already increasing) domain; this
  // is exactly the order-isomorphism condition of a weak similarity.
  bool is_monotone_increasing() const {
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (!(pairs[k - 1].second < pairs[k].second)) return false;
    }
    return true;
  }

  const Rational& apply(const Rational& v) const {
    auto it = std::lower_bound(
        pairs.begin(), pairs.end(), v,
        [](const auto& p, const Rational& x) { return p.first < x; });
    if (it == pairs.end() || it->first != v) {
      throw Error("value " + combsim::to_string(v) + " not in bijection domain");
    }
    return it->second;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k > 0) out += ", ";
      out += combsim::to_string(pairs[k].first);
      out += " -> ";
      out += combsim::to_string(pairs[k].second);
    }
    out += "}";
    return out;
  }
};

struct SimilarityWitness {
  Permutation psi;           // source index -> target index
  ValueBijection value_map;  // target-side value -> source-side value

  // Checks the defining equation over every ordered pair, diagonal included.
  bool verify(const SemimetricSpace& source,
              const SemimetricSpace& target) const {
    if (source.size() != target.size() || psi.degree() != source.size()) {
      return false;
    }
    for (int x = 0; x < source.size(); ++x) {
      for (int y = 0; y < source.size(); ++y) {
        if (source.dist(x, y) != value_map.apply(target.dist(psi(x), psi(y)))) {
          return false;
        }
      }
    }
    return true;
  }
};

enum class SearchMode { exhaustive, pruned };

struct EngineOptions {
  SearchMode mode = SearchMode::exhaustive;
  int cap = kDefaultCap;  // bounds exhaustive enumeration only
};

namespace detail {

// Distances recoded as ranks into the sorted value set. Rank 0 is always the
// value 0, so ranks of off-diagonal pairs start at 1.
struct SpaceCodes {
  int n = 0;
  int value_count = 0;
  std::vector<Rational> values;  // sorted ascending, values[0] == 0
  std::vector<int> code;         // n*n, row-major

  int code_at(int i, int j) const {
    return code[static_cast<std::size_t>(i) * n + j];
  }
};

inline SpaceCodes make_codes(const SemimetricSpace& space) {
  SpaceCodes codes;
  codes.n = space.size();
  codes.values = space.value_set();
  codes.value_count = static_cast<int>(codes.values.size());
  codes.code.resize(static_cast<std::size_t>(codes.n) * codes.n);
  for (int i = 0; i < codes.n; ++i) {
    for (int j = 0; j < codes.n; ++j) {
      auto it = std::lower_bound(codes.values.begin(), codes.values.end(),
                                 space.dist(i, j));
      codes.code[static_cast<std::size_t>(i) * codes.n + j] =
          static_cast<int>(it - codes.values.begin());
    }
  }
  return codes;
}

// Multiset of pattern block sizes (pair counts per distance value).
inline std::vector<int> block_size_multiset(const SpaceCodes& codes) {
  std::vector<int> counts(static_cast<std::size_t>(codes.value_count), 0);
  for (int i = 0; i < codes.n; ++i) {
    for (int j = i + 1; j < codes.n; ++j) {
      ++counts[static_cast<std::size_t>(codes.code_at(i, j))];
    }
  }
  counts.erase(counts.begin());  // drop the diagonal value 0
  std::sort(counts.begin(), counts.end());
  return counts;
}

// Full-permutation witness check. fwd maps target value codes to source value
// codes, rev is its inverse; both are caller-provided scratch buffers.
inline bool check_similarity(const SpaceCodes& s, const SpaceCodes& t,
                             const std::vector<int>& psi,
                             std::vector<int>& fwd, std::vector<int>& rev) {
  fwd.assign(static_cast<std::size_t>(t.value_count), -1);
  rev.assign(static_cast<std::size_t>(s.value_count), -1);
  fwd[0] = 0;
  rev[0] = 0;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      int cs = s.code_at(i, j);
      int ct = t.code_at(psi[static_cast<std::size_t>(i)],
                         psi[static_cast<std::size_t>(j)]);
      if (fwd[static_cast<std::size_t>(ct)] == -1 &&
          rev[static_cast<std::size_t>(cs)] == -1) {
        fwd[static_cast<std::size_t>(ct)] = cs;
        rev[static_cast<std::size_t>(cs)] = ct;
      } else if (fwd[static_cast<std::size_t>(ct)] != cs) {
        return false;
      }
    }
  }
  return true;
}

inline ValueBijection value_bijection_from_codes(const SpaceCodes& s,
                                                 const SpaceCodes& t,
                                                 const std::vector<int>& fwd) {
  ValueBijection f;
  f.pairs.reserve(static_cast<std::size_t>(t.value_count));
  for (int ct = 0; ct < t.value_count; ++ct) {
    f.pairs.emplace_back(t.values[static_cast<std::size_t>(ct)],
                         s.values[static_cast<std::size_t>(
                             fwd[static_cast<std::size_t>(ct)])]);
  }
  return f;
}

// Backtracking search over partial vertex maps, source index order, candidate
// images in ascending order. on_found(psi, fwd) returns true to keep
// searching, false to stop.
template <typename OnFound>
class SimilaritySearch {
 public:
  SimilaritySearch(const SpaceCodes& s, const SpaceCodes& t, OnFound on_found)
      : s_(s),
        t_(t),
        on_found_(std::move(on_found)),
        psi_(static_cast<std::size_t>(s.n), -1),
        used_(static_cast<std::size_t>(s.n), 0),
        fwd_(static_cast<std::size_t>(t.value_count), -1),
        rev_(static_cast<std::size_t>(s.value_count), -1) {
    fwd_[0] = 0;
    rev_[0] = 0;
  }

  void run() {
    if (s_.n != t_.n || s_.value_count != t_.value_count) return;
    if (block_size_multiset(s_) != block_size_multiset(t_)) return;
    dfs(0);
  }

 private:
  // Returns false when the search should stop entirely.
  bool dfs(int v) {
    if (v == s_.n) {
      return on_found_(psi_, fwd_);
    }
    for (int w = 0; w < s_.n; ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      std::size_t undo_base = undo_.size();
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        int cs = s_.code_at(u, v);
        int ct = t_.code_at(psi_[static_cast<std::size_t>(u)], w);
        if (fwd_[static_cast<std::size_t>(ct)] == -1 &&
            rev_[static_cast<std::size_t>(cs)] == -1) {
          fwd_[static_cast<std::size_t>(ct)] = cs;
          rev_[static_cast<std::size_t>(cs)] = ct;
          undo_.push_back(ct);
        } else if (fwd_[static_cast<std::size_t>(ct)] != cs) {
          ok = false;
          break;
        }
      }
      if (ok) {
        psi_[static_cast<std::size_t>(v)] = w;
        used_[static_cast<std::size_t>(w)] = 1;
        bool keep_going = dfs(v + 1);
        used_[static_cast<std::size_t>(w)] = 0;
        psi_[static_cast<std::size_t>(v)] = -1;
        if (!keep_going) {
          unwind(undo_base);
          return false;
        }
      }
      unwind(undo_base);
    }
    return true;
  }

  void unwind(std::size_t base) {
    while (undo_.size() > base) {
      int ct = undo_.back();
      undo_.pop_back();
      rev_[static_cast<std::size_t>(fwd_[static_cast<std::size_t>(ct)])] = -1;
      fwd_[static_cast<std::size_t>(ct)] = -1;
    }
  }

  const SpaceCodes& s_;
  const SpaceCodes& t_;
  OnFound on_found_;
  std::vector<int> psi_;
  std::vector<char> used_;
  std::vector<int> fwd_;
  std::vector<int> rev_;
  std::vector<int> undo_;
};

}  // namespace detail

// Reads the value bijection induced by psi: assigns
// f(d_target(psi x, psi y)) := d_source(x, y) over all pairs and returns it
// when the assignment is single-valued and injective, absent otherwise.
inline std::optional<ValueBijection> induced_value_map(
    const SemimetricSpace& source, const SemimetricSpace& target,
    const Permutation& psi) {
  if (source.size() != target.size()) {
    throw SizeMismatch("spaces have sizes " + std::to_string(source.size()) +
                       " and " + std::to_string(target.size()));
  }
  if (psi.degree() != source.size()) {
    throw SizeMismatch("bijection degree " + std::to_string(psi.degree()) +
                       " does not match space size " +
                       std::to_string(source.size()));
  }
  detail::SpaceCodes s = detail::make_codes(source);
  detail::SpaceCodes t = detail::make_codes(target);
  std::vector<int> fwd, rev;
  if (!detail::check_similarity(s, t, psi.images(), fwd, rev)) {
    return std::nullopt;
  }
  if (s.value_count != t.value_count) return std::nullopt;
  return detail::value_bijection_from_codes(s, t, fwd);
}

// Distance-preserving bijection; a combinatorial similarity whose value
// bijection is the identity.
inline bool is_isometry(const SemimetricSpace& source,
                        const SemimetricSpace& target, const Permutation& psi) {
  if (source.size() != target.size()) {
    throw SizeMismatch("spaces have sizes " + std::to_string(source.size()) +
                       " and " + std::to_string(target.size()));
  }
  if (psi.degree() != source.size()) {
    throw SizeMismatch("bijection degree " + std::to_string(psi.degree()) +
                       " does not match space size " +
                       std::to_string(source.size()));
  }
  for (int i = 0; i < source.size(); ++i) {
    for (int j = i + 1; j < source.size(); ++j) {
      if (source.dist(i, j) != target.dist(psi(i), psi(j))) return false;
    }
  }
  return true;
}

// Order-equivalence of distances: d_s(x,y) <= d_s(w,z) iff
// d_t(psi x, psi y) <= d_t(psi w, psi z) for all quadruples. Equivalent to
// the induced value map existing and being monotone increasing.
inline bool is_weak_similarity(const SemimetricSpace& source,
                               const SemimetricSpace& target,
                               const Permutation& psi) {
  auto f = induced_value_map(source, target, psi);
  return f.has_value() && f->is_monotone_increasing();
}

// The group Cs of combinatorial self similarities: exactly the permutations
// whose induced value map exists.
inline PermGroup self_similarity_group(const SemimetricSpace& space,
                                       const EngineOptions& opts = {}) {
  detail::SpaceCodes codes = detail::make_codes(space);
  std::vector<Permutation> elements;
  if (opts.mode == SearchMode::exhaustive) {
    if (space.size() > opts.cap) {
      throw DegreeTooLarge("exhaustive search at degree " +
                           std::to_string(space.size()) + " exceeds cap " +
                           std::to_string(opts.cap) +
                           " (use pruned mode or raise the cap)");
    }
    std::vector<int> fwd, rev;
    detail::for_each_image_array(space.size(), [&](const std::vector<int>& psi) {
      if (detail::check_similarity(codes, codes, psi, fwd, rev)) {
        elements.push_back(Permutation(psi));
      }
    });
  } else {
    detail::SimilaritySearch search(
        codes, codes,
        [&](const std::vector<int>& psi, const std::vector<int>&) {
          elements.push_back(Permutation(psi));
          return true;
        });
    search.run();
  }
  return PermGroup::from_elements(std::move(elements));
}

// The group Iso of self isometries; always a subgroup of the self similarity
// group.
inline PermGroup self_isometry_group(const SemimetricSpace& space,
                                     const EngineOptions& opts = {}) {
  detail::SpaceCodes codes = detail::make_codes(space);
  int n = space.size();
  std::vector<Permutation> elements;
  if (opts.mode == SearchMode::exhaustive) {
    if (n > opts.cap) {
      throw DegreeTooLarge("exhaustive search at degree " + std::to_string(n) +
                           " exceeds cap " + std::to_string(opts.cap) +
                           " (use pruned mode or raise the cap)");
    }
    detail::for_each_image_array(n, [&](const std::vector<int>& psi) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (codes.code_at(i, j) !=
              codes.code_at(psi[static_cast<std::size_t>(i)],
                            psi[static_cast<std::size_t>(j)])) {
            return;
          }
        }
      }
      elements.push_back(Permutation(psi));
    });
  } else {
    // Backtracker with the exact-preservation constraint: prune unless the
    // partial map keeps every distance code fixed.
    std::vector<int> psi(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int v) -> void {
      if (v == n) {
        elements.push_back(Permutation(psi));
        return;
      }
      for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
          if (codes.code_at(u, v) !=
              codes.code_at(psi[static_cast<std::size_t>(u)], w)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        psi[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = 1;
        self(self, v + 1);
        used[static_cast<std::size_t>(w)] = 0;
        psi[static_cast<std::size_t>(v)] = -1;
      }
    };
    dfs(dfs, 0);
  }
  return PermGroup::from_elements(std::move(elements));
}

// Decides combinatorial similarity of two spaces and returns the first
// witness in lexicographic psi order, or absent when none exists. Rejects
// without search when the sizes or the pattern block-size multisets differ.
// Defaults to the pruned search, which needs no cap; exhaustive mode is the
// cross-check oracle.
inline std::optional<SimilarityWitness> are_combinatorially_similar(
    const SemimetricSpace& a, const SemimetricSpace& b,
    const EngineOptions& opts = {SearchMode::pruned, kDefaultCap}) {
  if (a.size() != b.size()) return std::nullopt;
  detail::SpaceCodes s = detail::make_codes(a);
  detail::SpaceCodes t = detail::make_codes(b);
  if (s.value_count != t.value_count) return std::nullopt;
  if (detail::block_size_multiset(s) != detail::block_size_multiset(t)) {
    return std::nullopt;
  }

  std::optional<SimilarityWitness> witness;
  if (opts.mode == SearchMode::exhaustive) {
    if (a.size() > opts.cap) {
      throw DegreeTooLarge("exhaustive search at degree " +
                           std::to_string(a.size()) + " exceeds cap " +
                           std::to_string(opts.cap) +
                           " (use pruned mode or raise the cap)");
    }
    std::vector<int> fwd, rev;
    detail::for_each_image_array(a.size(), [&](const std::vector<int>& psi) {
      if (!witness && detail::check_similarity(s, t, psi, fwd, rev)) {
        witness = SimilarityWitness{
            Permutation(psi), detail::value_bijection_from_codes(s, t, fwd)};
      }
    });
  } else {
    detail::SimilaritySearch search(
        s, t, [&](const std::vector<int>& psi, const std::vector<int>& fwd) {
          witness = SimilarityWitness{
              Permutation(psi), detail::value_bijection_from_codes(s, t, fwd)};
          return false;  // first witness only
        });
    search.run();
  }
  return witness;
}

}  // namespace combsim
