#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fcube/digit_set.hpp"
#include "fcube/intersection_graph.hpp"

namespace fcube::io {

// A problem file holds either one digit set (self-intersection mode) or a
// pair {"d1": ..., "d2": ...}.
struct ProblemFile {
  bool self_mode = false;
  DigitSet first;
  DigitSet second;  // equals first in self mode
  IntersectionProblem problem() const { return {first, second}; }
};

// Accepts the JSON format {"k":..,"n":..,"digits":[[..],..]} (or a pair of
// those under "d1"/"d2"), or the plain-text format: a "k n" line followed by
// one digit per line, '#' lines ignored.
ProblemFile parse_problem(std::string_view text);
DigitSet parse_digit_set(std::string_view text);

// Canonical single-line JSON with lexicographically sorted digits.
std::string digit_set_to_json(const DigitSet& d);
std::string digit_set_to_text(const DigitSet& d);
std::string problem_to_json(const ProblemFile& p);

std::string export_dot(const StructureGraph& graph);

inline constexpr std::int64_t kDefaultMaxImage = 4096;

// ASCII PPM of the depth-p cover; row 0 is the top (largest y).
std::string render_raster(const DigitSet& d, int depth, std::int64_t max_image = kDefaultMaxImage);
// Red: only D1, blue: only D2, purple: both, white: neither.
std::string render_overlay(const IntersectionProblem& problem, int depth,
                           std::int64_t max_image = kDefaultMaxImage);

std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

}  // namespace fcube::io
