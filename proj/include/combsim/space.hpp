#pragma once

// Finite semimetric spaces: n points with an exact symmetric distance table.
// A semimetric requires positivity (d(x,y) >= 0 with equality iff x == y) and
// symmetry, but no triangle inequality. Values are immutable after
// construction; every operation here is a pure function.

#include <algorithm>
#include <cassert>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combsim/error.hpp"
#include "combsim/rational.hpp"

namespace combsim {

class SemimetricSpace {
 public:
  // `entries` is the full n x n table in row-major order. Throws
  // ValidationError naming the violated axiom and its location.
  SemimetricSpace(int n, std::vector<Rational> entries)
      : n_(n), dist_(std::move(entries)) {
    validate();
  }

  int size() const { return n_; }

  const Rational& dist(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return dist_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool operator==(const SemimetricSpace&) const = default;

  // All distinct distance values, sorted ascending. Always contains 0.
  std::vector<Rational> value_set() const {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n_) * n_);
    for (const Rational& v : dist_) values.push_back(v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  // Restriction to the given points: dist'(i, j) = dist(points[i], points[j]).
  SemimetricSpace subspace(std::span<const int> points) const {
    if (points.empty()) {
      throw EmptySubset("subspace requires a nonempty point set");
    }
    for (int p : points) {
      if (p < 0 || p >= n_) {
        throw IndexOutOfRange("subspace point " + std::to_string(p) +
                              " out of range [0, " + std::to_string(n_) + ")");
      }
    }
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = a + 1; b < points.size(); ++b) {
        if (points[a] == points[b]) {
          throw ValidationError("subspace points must be distinct (point " +
                                std::to_string(points[a]) + " repeated)");
        }
      }
    }
    int m = static_cast<int>(points.size());
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        entries.push_back(dist(points[i], points[j]));
      }
    }
    return SemimetricSpace(m, std::move(entries));
  }

 private:
  void validate() const {
    if (n_ < 1) {
      throw ValidationError("space must be nonempty (n >= 1)");
    }
    if (dist_.size() != static_cast<std::size_t>(n_) * n_) {
      throw ValidationError("distance table must have n*n entries");
    }
    const Rational zero(0);
    for (int i = 0; i < n_; ++i) {
      if (dist(i, i) != zero) {
        throw ValidationError("positivity violated: nonzero diagonal at point " +
                              std::to_string(i));
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (dist(i, j) < zero) {
          throw ValidationError("positivity violated: negative entry at (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (dist(i, j) != dist(j, i)) {
          throw ValidationError("symmetry violated: asymmetry at (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (dist(i, j) == zero) {
          throw ValidationError("positivity violated: zero off-diagonal at (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
        }
      }
    }
  }

  int n_;
  std::vector<Rational> dist_;
};

// Matrix file format: the first content line holds the integer n, the next n
// content lines hold n whitespace-separated rational literals each. Lines
// whose first non-blank character is '#' and blank lines are ignored.
inline SemimetricSpace parse_space(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    rows.push_back(std::move(tokens));
  }

  if (rows.empty()) {
    throw ParseError("empty input: expected a point count line");
  }
  if (rows[0].size() != 1) {
    throw ParseError("first content line must hold exactly the point count");
  }
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(rows[0][0], &pos);
    if (pos != rows[0][0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("malformed point count '" + rows[0][0] + "'");
  }
  if (n < 1) {
    throw ValidationError("space must be nonempty (n >= 1)");
  }

  if (rows.size() - 1 != static_cast<std::size_t>(n)) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i) + 1];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("row " + std::to_string(i) + ": expected " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(row.size()));
    }
    for (int j = 0; j < n; ++j) {
      try {
        entries.push_back(parse_rational(row[static_cast<std::size_t>(j)]));
      } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(i) + ", column " +
                         std::to_string(j) + ": " + e.what());
      }
    }
  }
  return SemimetricSpace(n, std::move(entries));
}

inline SemimetricSpace parse_space(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_space(in);
}

inline std::string serialize(const SemimetricSpace& space) {
  std::string out = std::to_string(space.size());
  out += '\n';
  for (int i = 0; i < space.size(); ++i) {
    for (int j = 0; j < space.size(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(space.dist(i, j));
    }
    out += '\n';
  }
  return out;
}

// Optional metric-mode check. A semimetric needs no triangle inequality; this
// validates it separately when the user claims a metric.
struct TriangleViolation {
  int i, j, k;  // dist(i, j) > dist(i, k) + dist(k, j)
};

inline std::optional<TriangleViolation> find_triangle_violation(
    const SemimetricSpace& space) {
  int n = space.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (space.dist(i, j) > space.dist(i, k) + space.dist(k, j)) {
          return TriangleViolation{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool satisfies_triangle_inequality(const SemimetricSpace& space) {
  return !find_triangle_violation(space).has_value();
}

}  // namespace combsim
