#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcube/digit_set.hpp"
#include "fcube/exact_point.hpp"
#include "fcube/face_lattice.hpp"
#include "fcube/parallel.hpp"

namespace fcube {

// Two fractal cubes of the same dimension and order. The sets studied are
// F_alpha = K1 ∩ (K2 + alpha) for alpha in {-1,0,1}^k.
class IntersectionProblem {
 public:
  IntersectionProblem(DigitSet first, DigitSet second);

  const DigitSet& first() const { return first_; }
  const DigitSet& second() const { return second_; }
  int dimension() const { return first_.dimension(); }
  Coord order() const { return first_.order(); }

 private:
  DigitSet first_;
  DigitSet second_;
};

// G_alpha = D1 ∩ (D2 + (n-1) alpha)
std::vector<Digit> g_set(const IntersectionProblem& problem, const FaceVector& alpha);
// G_alpha,beta = D1 ∩ (D2 + n alpha - beta), defined for alpha ⊑ beta.
std::vector<Digit> g_edge_set(const IntersectionProblem& problem, const FaceVector& alpha,
                              const FaceVector& beta);

struct StructureEdge {
  FaceVector from;
  FaceVector to;
  std::vector<Digit> label;
};

struct GraphSummary {
  std::size_t vertices = 0;  // alive faces
  std::size_t edges = 0;     // non-loop edges between alive faces
  std::size_t loops = 0;     // alive faces with nonempty G_alpha
};

// The pruned structure graph: vertices are the nonempty F_alpha, edges
// alpha -> beta (alpha ⊑ beta, alpha != beta) carry G_alpha,beta and exist
// only when the label is nonempty and F_beta is nonempty. Loops are kept
// separately as the sets G_alpha.
class StructureGraph {
 public:
  static StructureGraph build(const IntersectionProblem& problem, Execution exec = Execution::parallel);

  int dimension() const { return k_; }
  Coord order() const { return n_; }

  bool alive(const FaceVector& alpha) const;
  // G_alpha, reported for every face including dead ones.
  const std::vector<Digit>& loop_set(const FaceVector& alpha) const;
  // Outgoing non-loop edges of an alive face, sorted by target.
  const std::vector<StructureEdge>& out_edges(const FaceVector& alpha) const;
  // All non-loop edges, sorted by (from, to).
  std::vector<StructureEdge> edges() const;
  // Alive faces with nonempty G_alpha, sorted.
  std::vector<FaceVector> loops() const;
  std::vector<FaceVector> alive_faces() const;
  GraphSummary summary() const;

 private:
  struct Node {
    std::vector<Digit> loop;
    std::vector<StructureEdge> out;
    bool alive = false;
  };
  const Node& node(const FaceVector& alpha) const;

  int k_ = 0;
  Coord n_ = 0;
  std::vector<FaceVector> faces_;
  std::vector<Node> nodes_;
};

// { beta : beta ≽ alpha } including alpha itself, sorted.
std::vector<FaceVector> reachable(const StructureGraph& graph, const FaceVector& alpha);

struct DimensionValue {
  std::uint64_t nu = 0;
  Coord n = 0;
  double value() const;
};

// nu(alpha) = max #G_beta over beta ≽ alpha; s = log_n nu.
DimensionValue dimension(const StructureGraph& graph, const FaceVector& alpha);

// True iff the s(alpha)-dimensional Hausdorff measure of F_alpha is finite,
// i.e. no two distinct maximizers of #G_beta are joined by a directed path.
bool measure_finite(const StructureGraph& graph, const FaceVector& alpha);

struct CardinalityClass {
  enum class Kind { empty, finite, countably_infinite, uncountable };
  Kind kind = Kind::empty;
  std::uint64_t count = 0;  // set only for finite

  static CardinalityClass empty() { return {Kind::empty, 0}; }
  static CardinalityClass finite(std::uint64_t c) { return {Kind::finite, c}; }
  static CardinalityClass countably_infinite() { return {Kind::countably_infinite, 0}; }
  static CardinalityClass uncountable() { return {Kind::uncountable, 0}; }

  std::string name() const;         // "empty", "finite", ...
  std::string to_string() const;    // "finite(24)", "uncountable", ...
  friend bool operator==(const CardinalityClass&, const CardinalityClass&) = default;
};

// A finite count is the number of distinct points; GuardError if the chain
// sum exceeds max_points.
CardinalityClass classify_cardinality(const StructureGraph& graph, const FaceVector& alpha,
                                      std::uint64_t max_points = kDefaultMaxCells);

// Sum over chains alpha -> ... -> maximal beta of the products of edge label
// sizes. Only meaningful when nu(alpha) == 1. Counts addresses, so it bounds
// the number of points from above; points with two addresses make it strict.
std::uint64_t chain_sum_count(const StructureGraph& graph, const FaceVector& alpha);

// Exact points of a finite F_alpha, sorted and deduplicated. Throws
// InputError if F_alpha is not finite.
std::vector<ExactPoint> enumerate_finite_points(const StructureGraph& graph, const FaceVector& alpha,
                                                std::uint64_t max_points = kDefaultMaxCells);

// Which sufficient condition for the cardinality class holds literally on
// the graph Γ_alpha, checked from the most specific down.
enum class CardinalityCondition { none, singleton, finite, countable, uncountable };
std::string to_string(CardinalityCondition c);
CardinalityCondition cardinality_condition(const StructureGraph& graph, const FaceVector& alpha);

struct FaceAnalysis {
  FaceVector alpha;
  bool alive = false;
  std::uint64_t nu = 0;
  std::optional<double> dimension;
  std::optional<bool> measure_finite;
  CardinalityClass cardinality;
  CardinalityCondition condition = CardinalityCondition::none;
  std::optional<std::vector<ExactPoint>> points;
};

FaceAnalysis analyze_face(const StructureGraph& graph, const FaceVector& alpha);

struct SelfIntersectionSummary {
  bool one_point = false;         // every nonzero alive F_alpha is a single point
  bool finite = false;            // every nonzero alive F_alpha is finite
  bool graph_one_point = false;   // chain-shape criterion on the graph
  bool graph_finite = false;      // maximal #G = 1, other nonzero G empty
};

struct AnalysisReport {
  DigitSet first;
  DigitSet second;
  bool self_mode = false;
  GraphSummary graph;
  std::vector<FaceAnalysis> faces;  // canonical order; self mode omits alpha = 0
  std::optional<SelfIntersectionSummary> self;
};

// Builds the graph and analyzes every face.
AnalysisReport analyze(const IntersectionProblem& problem, Execution exec = Execution::parallel);

// Self-intersection of a single cube: the problem D1 = D2 = D restricted to
// nonzero alpha, plus the one-point / finite intersection properties. Checks
// that F_alpha and F_-alpha agree and throws std::logic_error otherwise.
AnalysisReport self_intersection_report(const DigitSet& d, Execution exec = Execution::parallel);

}  // namespace fcube
