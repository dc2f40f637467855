#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcube/digit_set.hpp"
#include "fcube/exact_point.hpp"
#include "fcube/intersection_graph.hpp"
#include "fcube/parallel.hpp"

// Brute-force checks on the level-p cell covers of the cubes. Nothing here
// consults the structure graph.
namespace fcube::oracle {

// Depth-p cover of K: cells (c + [0,1]^k) / n^p for c in the refined digit set.
struct CellCover {
  int depth = 0;
  DigitSet cells;  // order n^p
  Coord order() const { return cells.order(); }
};

CellCover make_cell_cover(const DigitSet& d, int depth, std::uint64_t max_cells = kDefaultMaxCells);

struct OracleOptions {
  std::uint64_t max_cells = kDefaultMaxCells;  // live cells per level
  Execution exec = Execution::parallel;
};

// N_1..N_depth: N_p counts level-p cells of K1 whose closed cell meets some
// closed level-p cell of K2 + alpha. Cells whose parents are apart are
// never generated.
std::vector<std::uint64_t> adjacent_cell_counts(const IntersectionProblem& problem, const FaceVector& alpha,
                                                int depth, const OracleOptions& options = {});

std::uint64_t adjacent_cell_count(const IntersectionProblem& problem, const FaceVector& alpha, int depth,
                                  const OracleOptions& options = {});

// Serial reference: materializes both full covers at depth p and checks
// every cell of the first against the second.
std::uint64_t adjacent_cell_count_reference(const IntersectionProblem& problem, const FaceVector& alpha, int depth,
                                            std::uint64_t max_cells = kDefaultMaxCells);

// depth is the least p with N_p == 0, which proves F_alpha empty. Found by
// searching for one touching pair per depth rather than counting cells.
struct EmptinessCertificate {
  std::optional<int> depth;
  bool certified() const { return depth.has_value(); }
};

EmptinessCertificate certify_empty(const IntersectionProblem& problem, const FaceVector& alpha, int max_depth,
                                   const OracleOptions& options = {});

struct BoxCountFit {
  std::vector<std::uint64_t> counts;  // N_p for p in [lo, hi]
  int lo = 0;
  int hi = 0;
  double slope = 0.0;
};

// Least-squares slope of ln N_p against p ln n over [lo, hi].
BoxCountFit box_count_fit(const IntersectionProblem& problem, const FaceVector& alpha, int lo, int hi,
                          const OracleOptions& options = {});

double estimate_dimension(const IntersectionProblem& problem, const FaceVector& alpha, int lo, int hi,
                          const OracleOptions& options = {});

// Decides x ∈ K exactly by exploring x -> n x - d over the finite set of
// points sharing x's denominator. Points outside [0,1]^k are not members.
bool exact_member(const DigitSet& d, const ExactPoint& x);

// x ∈ F_alpha: x ∈ K1 and x - alpha ∈ K2.
bool verify_point(const IntersectionProblem& problem, const FaceVector& alpha, const ExactPoint& x);

}  // namespace fcube::oracle
