#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anacont/common.hpp"
#include "anacont/continuation.hpp"
#include "anacont/expr.hpp"

namespace anacont {

// Serializable description of a power series: an explicit coefficient head
// a_0..a_{len-1} and a symbolic interpolant with a_n = phi(n) for n >= n0.
// The head must cover [0, n0), and phi must agree with the head on the
// overlap [n0, len).
struct SeriesSpec {
  std::string label;
  std::vector<Cx> head;
  FunctionExpr phi;
  int n0 = 0;
};

// Validates the spec (head coverage and head/phi agreement on the overlap)
// and converts it to an evaluable Series. Throws ParameterError.
Series to_series(const SeriesSpec& spec);

// A built-in example: the series, its closed form on C \ [1, inf), and an
// optional entire boundary function whose Taylor coefficients the series
// lists (used by interpolant demos).
struct ExampleEntry {
  std::string label;
  SeriesSpec spec;
  FunctionExpr closed_form;
  std::string notes;
  std::optional<FunctionExpr> boundary_g;
};

// Built-in examples, self-checked on first use (head/phi agreement and
// closed form vs. the convergent series at interior points).
const std::vector<ExampleEntry>& builtin_registry();

// Entry lookup by label; throws ParameterError for unknown labels.
const ExampleEntry& find_builtin(const std::string& label);

// "builtin:<label>" fetches from the registry; anything else is read as a
// JSON file. The loaded spec is validated like to_series does.
SeriesSpec load_series_spec(const std::string& path_or_builtin);

// Deterministic JSON round trip for series specs.
std::string series_spec_to_json(const SeriesSpec& spec);
SeriesSpec series_spec_from_json(const std::string& text);

}  // namespace anacont
