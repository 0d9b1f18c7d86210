#pragma once

// Command implementations behind the CLI, as pure path/parameter -> Report
// functions so they can be tested directly. Expected failures are folded into
// error reports carrying the exit code the tool should use:
//   0 ok, 1 usage, 2 parse/validation/io, 3 cap exceeded, 4 internal
//   invariant violation (loud by design).

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "combsim/census.hpp"
#include "combsim/classify.hpp"
#include "combsim/error.hpp"
#include "combsim/generators.hpp"
#include "combsim/group.hpp"
#include "combsim/pattern.hpp"
#include "combsim/report.hpp"
#include "combsim/similarity.hpp"
#include "combsim/space.hpp"

namespace combsim {

struct CommandOptions {
  int cap = kDefaultCap;
  // Unset means each command's default: exhaustive for group computations,
  // pruned for the two-space similarity search.
  std::optional<SearchMode> mode;
  int list_limit = 1000;  // suppress group element lists above this size
  bool metric_check = false;
};

inline int exit_code_for_error(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr ||
      dynamic_cast<const ValidationError*>(&e) != nullptr ||
      dynamic_cast<const IoError*>(&e) != nullptr) {
    return 2;
  }
  if (dynamic_cast<const DegreeTooLarge*>(&e) != nullptr) return 3;
  if (dynamic_cast<const InternalError*>(&e) != nullptr ||
      dynamic_cast<const NotClosed*>(&e) != nullptr ||
      dynamic_cast<const MissingIdentity*>(&e) != nullptr) {
    return 4;
  }
  return 1;
}

namespace detail {

inline SemimetricSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path);
  }
  return parse_space(in);
}

template <typename Fn>
Report guarded(Report base, Fn&& fn) {
  try {
    fn(base);
  } catch (const Error& e) {
    base.results = nlohmann::ordered_json::object();
    base.payload.clear();
    base.status = "error";
    base.message = e.what();
    base.exit_code = exit_code_for_error(e);
  }
  return base;
}

inline EngineOptions engine_options(const CommandOptions& opts,
                                    SearchMode default_mode) {
  return EngineOptions{opts.mode.value_or(default_mode), opts.cap};
}

}  // namespace detail

inline Report cmd_validate(const std::string& path,
                           const CommandOptions& opts = {}) {
  Report report;
  report.command = "validate";
  report.inputs.emplace_back("path", path);
  return detail::guarded(std::move(report), [&](Report& r) {
    SemimetricSpace space = detail::load_space(path);
    r.add("n", space.size());
    r.add("values", space.value_set().size());
    if (opts.metric_check) {
      auto violation = find_triangle_violation(space);
      r.add("metric", !violation.has_value());
      if (violation) {
        r.add("triangle_violation",
              "d(" + std::to_string(violation->i) + ", " +
                  std::to_string(violation->j) + ") > d(" +
                  std::to_string(violation->i) + ", " +
                  std::to_string(violation->k) + ") + d(" +
                  std::to_string(violation->k) + ", " +
                  std::to_string(violation->j) + ")");
      }
    }
  });
}

inline Report cmd_classify(const std::string& path,
                           const CommandOptions& opts = {}) {
  Report report;
  report.command = "classify";
  report.inputs.emplace_back("path", path);
  return detail::guarded(std::move(report), [&](Report& r) {
    SemimetricSpace space = detail::load_space(path);
    Classification c = classify(space);
    r.add("n", space.size());
    r.add("discrete", c.discrete);
    r.add("strongly_rigid", c.strongly_rigid);
    r.add("weakly_rigid", c.weakly_rigid);
    r.add("rectangle_type", c.rectangle_type);
    r.add("cs_equals_sym", c.cs_equals_sym);
    try {
      PermGroup cs = self_similarity_group(
          space, detail::engine_options(opts, SearchMode::exhaustive));
      bool brute = is_symmetric_group(cs);
      r.add("cs_order", cs.order());
      r.add("structural", c.cs_equals_sym);
      r.add("brute_force", brute);
      r.add("agree", c.cs_equals_sym == brute);
      if (c.cs_equals_sym != brute) {
        throw InternalError(
            "crosscheck disagreement: structural and brute-force verdicts "
            "differ on a valid space");
      }
    } catch (const DegreeTooLarge&) {
      r.add("notice",
            "brute-force cross-check skipped: degree " +
                std::to_string(space.size()) + " exceeds cap " +
                std::to_string(opts.cap) +
                " (rerun with --mode pruned or a higher --cap)");
    }
  });
}

enum class GroupKind { cs, iso };

inline Report cmd_group(const std::string& path, GroupKind which,
                        const CommandOptions& opts = {}) {
  Report report;
  report.command = "group";
  report.inputs.emplace_back("path", path);
  report.inputs.emplace_back("which", which == GroupKind::cs ? "cs" : "iso");
  return detail::guarded(std::move(report), [&](Report& r) {
    SemimetricSpace space = detail::load_space(path);
    EngineOptions engine = detail::engine_options(opts, SearchMode::exhaustive);
    PermGroup group = which == GroupKind::cs
                          ? self_similarity_group(space, engine)
                          : self_isometry_group(space, engine);
    r.add("n", space.size());
    r.add("order", group.order());
    r.add("full", is_symmetric_group(group));
    if (group.order() <= static_cast<std::uint64_t>(opts.list_limit)) {
      nlohmann::ordered_json elements = nlohmann::ordered_json::array();
      for (const Permutation& p : group.elements()) {
        elements.push_back(p.to_string());
      }
      r.add("element", std::move(elements));
    } else {
      r.add("elements_suppressed", group.order());
    }
  });
}

inline Report cmd_similar(const std::string& path_a, const std::string& path_b,
                          const CommandOptions& opts = {}) {
  Report report;
  report.command = "similar";
  report.inputs.emplace_back("path_a", path_a);
  report.inputs.emplace_back("path_b", path_b);
  return detail::guarded(std::move(report), [&](Report& r) {
    SemimetricSpace a = detail::load_space(path_a);
    SemimetricSpace b = detail::load_space(path_b);
    auto witness = are_combinatorially_similar(
        a, b, detail::engine_options(opts, SearchMode::pruned));
    r.add("similar", witness.has_value());
    if (witness) {
      if (!witness->verify(a, b)) {
        throw InternalError("similarity witness failed verification");
      }
      r.add("psi", witness->psi.to_string());
      r.add("f", witness->value_map.to_string());
    }
  });
}

inline Report cmd_enumerate(int n, const CommandOptions& opts = {}) {
  Report report;
  report.command = "enumerate";
  report.inputs.emplace_back("n", std::to_string(n));
  return detail::guarded(std::move(report), [&](Report& r) {
    if (n < 3 || n > kMaxEnumerationN) {
      throw DegreeTooLarge("enumerate supports 3 <= n <= " +
                           std::to_string(kMaxEnumerationN) + ", got " +
                           std::to_string(n));
    }
    CensusResult census = run_census(
        n, detail::engine_options(opts, SearchMode::exhaustive));
    r.add("total_patterns", census.total_patterns);
    r.add("full_sym", census.full_sym);
    r.add("discrete", census.discrete);
    r.add("strongly_rigid", census.strongly_rigid);
    r.add("weakly_rigid", census.weakly_rigid);
    r.add("rectangle_type", census.rectangle_type);
    r.add("cs_equals_sym_structural", census.cs_equals_sym_structural);
    r.add("disagreements", census.disagreements);
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const std::string& id : census.full_sym_ids) ids.push_back(id);
    r.add("full_sym_pattern", std::move(ids));
    if (census.disagreements != 0) {
      throw InternalError("census found " +
                          std::to_string(census.disagreements) +
                          " structural/brute-force disagreements");
    }
  });
}

namespace detail {

inline int parse_int_param(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + text + "': expected an integer");
  }
}

inline Rational parse_rational_param(const std::string& text,
                                     const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("bad " + what + ": " + e.what());
  }
}

}  // namespace detail

// Builds a named example space and emits its matrix file as the payload.
// Names: rectangle | pseudolinear s t | discrete n k | rigid n.
inline Report cmd_example(const std::string& name,
                          const std::vector<std::string>& params,
                          const CommandOptions& opts = {}) {
  Report report;
  report.command = "example";
  report.inputs.emplace_back("name", name);
  for (std::size_t i = 0; i < params.size(); ++i) {
    report.inputs.emplace_back("param" + std::to_string(i), params[i]);
  }
  return detail::guarded(std::move(report), [&](Report& r) {
    std::optional<SemimetricSpace> space;
    if (name == "rectangle") {
      if (!params.empty()) {
        throw UsageError("example 'rectangle' takes no parameters");
      }
      space = rectangle_example();
    } else if (name == "pseudolinear") {
      if (params.size() != 2) {
        throw UsageError("example 'pseudolinear' takes parameters: s t");
      }
      space = pseudolinear(detail::parse_rational_param(params[0], "s"),
                           detail::parse_rational_param(params[1], "t"));
    } else if (name == "discrete") {
      if (params.size() != 2) {
        throw UsageError("example 'discrete' takes parameters: n k");
      }
      space = discrete_space(detail::parse_int_param(params[0], "n"),
                             detail::parse_rational_param(params[1], "k"));
    } else if (name == "rigid") {
      if (params.size() != 1) {
        throw UsageError("example 'rigid' takes parameters: n");
      }
      space = strongly_rigid_space(detail::parse_int_param(params[0], "n"),
                                   opts.metric_check);
    } else {
      throw UsageError("unknown example name '" + name +
                       "' (expected rectangle, pseudolinear, discrete, or "
                       "rigid)");
    }
    r.add("n", space->size());
    r.add("values", space->value_set().size());
    r.payload = serialize(*space);
  });
}

}  // namespace combsim
