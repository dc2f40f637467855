#include "fcube/intersection_graph.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>

#include "fcube/errors.hpp"

namespace fcube {

IntersectionProblem::IntersectionProblem(DigitSet first, DigitSet second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.dimension() != second_.dimension()) {
    throw InputError("digit sets differ in dimension: k=" + std::to_string(first_.dimension()) + " vs k=" +
                     std::to_string(second_.dimension()));
  }
  if (first_.order() != second_.order()) {
    throw InputError("digit sets differ in order: n=" + std::to_string(first_.order()) + " vs n=" +
                     std::to_string(second_.order()));
  }
  if (first_.empty() || second_.empty()) throw InputError("intersection problem needs nonempty digit sets");
}

namespace {

void require_dimension(const IntersectionProblem& problem, const FaceVector& alpha) {
  if (alpha.dimension() != problem.dimension()) {
    throw InputError("face vector " + alpha.to_string() + " does not match problem dimension " +
                     std::to_string(problem.dimension()));
  }
}

// D1 ∩ (D2 + shift). Translation preserves lexicographic order, so a merge
// over the two sorted lists suffices.
std::vector<Digit> intersect_shifted(const DigitSet& d1, const DigitSet& d2, const std::vector<Coord>& shift) {
  std::vector<Digit> out;
  const auto& a = d1.digits();
  const auto& b = d2.digits();
  std::size_t i = 0, j = 0;
  Digit moved(shift.size());
  while (i < a.size() && j < b.size()) {
    for (std::size_t c = 0; c < shift.size(); ++c) moved[c] = b[j][c] + shift[c];
    if (a[i] < moved) {
      ++i;
    } else if (moved < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<Digit> g_set(const IntersectionProblem& problem, const FaceVector& alpha) {
  require_dimension(problem, alpha);
  std::vector<Coord> shift(static_cast<std::size_t>(alpha.dimension()));
  for (int i = 0; i < alpha.dimension(); ++i) shift[static_cast<std::size_t>(i)] = (problem.order() - 1) * alpha[i];
  return intersect_shifted(problem.first(), problem.second(), shift);
}

std::vector<Digit> g_edge_set(const IntersectionProblem& problem, const FaceVector& alpha, const FaceVector& beta) {
  require_dimension(problem, alpha);
  require_dimension(problem, beta);
  if (!is_subface(alpha, beta)) {
    throw InputError("edge " + alpha.to_string() + " -> " + beta.to_string() + " requires alpha ⊑ beta");
  }
  std::vector<Coord> shift(static_cast<std::size_t>(alpha.dimension()));
  for (int i = 0; i < alpha.dimension(); ++i)
    shift[static_cast<std::size_t>(i)] = problem.order() * alpha[i] - beta[i];
  return intersect_shifted(problem.first(), problem.second(), shift);
}

StructureGraph StructureGraph::build(const IntersectionProblem& problem, Execution exec) {
  StructureGraph g;
  g.k_ = problem.dimension();
  g.n_ = problem.order();
  g.faces_ = enumerate_face_vectors(g.k_);
  const auto count = static_cast<std::ptrdiff_t>(g.faces_.size());
  g.nodes_.resize(g.faces_.size());

  // Label computation is independent per face.
  std::vector<std::exception_ptr> failures(g.faces_.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const auto& alpha = g.faces_[static_cast<std::size_t>(i)];
      Node& node = g.nodes_[static_cast<std::size_t>(i)];
      node.loop = g_set(problem, alpha);
      for (const auto& beta : boundary_face_vectors(alpha)) {
        auto label = g_edge_set(problem, alpha, beta);
        if (!label.empty()) node.out.push_back({alpha, beta, std::move(label)});
      }
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  // Targets of edges have strictly larger support, so visiting faces by
  // decreasing weight settles every target before its sources.
  std::vector<std::size_t> order(g.faces_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.faces_[a].weight() > g.faces_[b].weight();
  });
  for (std::size_t idx : order) {
    Node& node = g.nodes_[idx];
    std::erase_if(node.out, [&](const StructureEdge& e) { return !g.nodes_[e.to.index()].alive; });
    node.alive = !node.loop.empty() || !node.out.empty();
  }
  return g;
}

const StructureGraph::Node& StructureGraph::node(const FaceVector& alpha) const {
  if (alpha.dimension() != k_) {
    throw InputError("face vector " + alpha.to_string() + " does not match graph dimension " + std::to_string(k_));
  }
  return nodes_[alpha.index()];
}

bool StructureGraph::alive(const FaceVector& alpha) const { return node(alpha).alive; }

const std::vector<Digit>& StructureGraph::loop_set(const FaceVector& alpha) const { return node(alpha).loop; }

const std::vector<StructureEdge>& StructureGraph::out_edges(const FaceVector& alpha) const {
  return node(alpha).out;
}

std::vector<StructureEdge> StructureGraph::edges() const {
  std::vector<StructureEdge> out;
  for (const auto& node : nodes_)
    if (node.alive) out.insert(out.end(), node.out.begin(), node.out.end());
  return out;
}

std::vector<FaceVector> StructureGraph::loops() const {
  std::vector<FaceVector> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive && !nodes_[i].loop.empty()) out.push_back(faces_[i]);
  return out;
}

std::vector<FaceVector> StructureGraph::alive_faces() const {
  std::vector<FaceVector> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive) out.push_back(faces_[i]);
  return out;
}

GraphSummary StructureGraph::summary() const {
  GraphSummary s;
  for (const auto& node : nodes_) {
    if (!node.alive) continue;
    ++s.vertices;
    s.edges += node.out.size();
    if (!node.loop.empty()) ++s.loops;
  }
  return s;
}

namespace {

void require_alive(const StructureGraph& graph, const FaceVector& alpha) {
  if (!graph.alive(alpha)) throw InputError("F_" + alpha.to_string() + " is empty");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw GuardError("point count overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw GuardError("point count overflows 64 bits");
  return r;
}

}  // namespace

std::vector<FaceVector> reachable(const StructureGraph& graph, const FaceVector& alpha) {
  require_alive(graph, alpha);
  std::set<FaceVector> seen{alpha};
  std::vector<FaceVector> stack{alpha};
  while (!stack.empty()) {
    const FaceVector current = stack.back();
    stack.pop_back();
    for (const auto& e : graph.out_edges(current)) {
      if (seen.insert(e.to).second) stack.push_back(e.to);
    }
  }
  return {seen.begin(), seen.end()};
}

double DimensionValue::value() const {
  return std::log(static_cast<double>(nu)) / std::log(static_cast<double>(n));
}

DimensionValue dimension(const StructureGraph& graph, const FaceVector& alpha) {
  DimensionValue out{0, graph.order()};
  for (const auto& beta : reachable(graph, alpha))
    out.nu = std::max<std::uint64_t>(out.nu, graph.loop_set(beta).size());
  return out;
}

bool measure_finite(const StructureGraph& graph, const FaceVector& alpha) {
  const std::uint64_t nu = dimension(graph, alpha).nu;
  std::vector<FaceVector> maximizers;
  for (const auto& beta : reachable(graph, alpha))
    if (graph.loop_set(beta).size() == nu) maximizers.push_back(beta);
  for (const auto& beta : maximizers) {
    for (const auto& gamma : reachable(graph, beta)) {
      if (gamma != beta && std::binary_search(maximizers.begin(), maximizers.end(), gamma)) return false;
    }
  }
  return true;
}

std::string CardinalityClass::name() const {
  switch (kind) {
    case Kind::empty: return "empty";
    case Kind::finite: return "finite";
    case Kind::countably_infinite: return "countably_infinite";
    case Kind::uncountable: return "uncountable";
  }
  return "?";
}

std::string CardinalityClass::to_string() const {
  if (kind == Kind::finite) return "finite(" + std::to_string(count) + ")";
  return name();
}

std::uint64_t chain_sum_count(const StructureGraph& graph, const FaceVector& alpha) {
  std::map<FaceVector, std::uint64_t> memo;
  // Reachable set sorted; process by decreasing weight so targets come first.
  auto verts = reachable(graph, alpha);
  std::stable_sort(verts.begin(), verts.end(),
                   [](const FaceVector& a, const FaceVector& b) { return a.weight() > b.weight(); });
  for (const auto& beta : verts) {
    const auto& out = graph.out_edges(beta);
    std::uint64_t c = 0;
    if (out.empty()) {
      c = graph.loop_set(beta).size();
    } else {
      for (const auto& e : out) c = checked_add(c, checked_mul(e.label.size(), memo.at(e.to)));
    }
    memo[beta] = c;
  }
  return memo.at(alpha);
}

namespace {

// Points of F_alpha when every vertex of Gamma_alpha with a loop is maximal.
// Distinct chains can land on the same point (e.g. 1/2 = .0111... = .1000...
// in base 2), so the lists are deduplicated at every vertex.
std::vector<ExactPoint> finite_points(const StructureGraph& graph, const FaceVector& alpha) {
  const Coord n = graph.order();
  std::map<FaceVector, std::vector<ExactPoint>> memo;
  auto verts = reachable(graph, alpha);
  std::stable_sort(verts.begin(), verts.end(),
                   [](const FaceVector& a, const FaceVector& b) { return a.weight() > b.weight(); });
  for (const auto& beta : verts) {
    const auto& out = graph.out_edges(beta);
    std::vector<ExactPoint> points;
    if (out.empty()) {
      for (const auto& g : graph.loop_set(beta)) points.push_back(fixed_point(g, n));
    } else {
      for (const auto& e : out) {
        for (const auto& x : memo.at(e.to)) {
          for (const auto& g : e.label) points.push_back(apply_map(x, g, n));
        }
      }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    memo[beta] = std::move(points);
  }
  return memo.at(alpha);
}

}  // namespace

CardinalityClass classify_cardinality(const StructureGraph& graph, const FaceVector& alpha,
                                      std::uint64_t max_points) {
  if (!graph.alive(alpha)) return CardinalityClass::empty();
  const auto dim = dimension(graph, alpha);
  if (dim.nu >= 2) return CardinalityClass::uncountable();
  // nu == 1: H^0 is the counting measure.
  if (!measure_finite(graph, alpha)) return CardinalityClass::countably_infinite();
  const auto bound = chain_sum_count(graph, alpha);
  if (bound > max_points) throw GuardError("F_" + alpha.to_string() + " has too many points to list");
  return CardinalityClass::finite(finite_points(graph, alpha).size());
}

std::vector<ExactPoint> enumerate_finite_points(const StructureGraph& graph, const FaceVector& alpha,
                                                std::uint64_t max_points) {
  const auto cls = classify_cardinality(graph, alpha, max_points);
  if (cls.kind != CardinalityClass::Kind::finite) {
    throw InputError("F_" + alpha.to_string() + " is " + cls.to_string() + ", not finite");
  }
  return finite_points(graph, alpha);
}

std::string to_string(CardinalityCondition c) {
  switch (c) {
    case CardinalityCondition::none: return "none";
    case CardinalityCondition::singleton: return "singleton";
    case CardinalityCondition::finite: return "finite";
    case CardinalityCondition::countable: return "countable";
    case CardinalityCondition::uncountable: return "uncountable";
  }
  return "?";
}

CardinalityCondition cardinality_condition(const StructureGraph& graph, const FaceVector& alpha) {
  if (!graph.alive(alpha)) return CardinalityCondition::none;
  const auto verts = reachable(graph, alpha);
  std::size_t max_loop = 0;
  for (const auto& beta : verts) max_loop = std::max(max_loop, graph.loop_set(beta).size());
  if (max_loop > 1) return CardinalityCondition::uncountable;

  // Chain: each vertex has one successor, unit labels, empty loops except the last.
  bool chain = true;
  FaceVector current = alpha;
  while (chain) {
    const auto& out = graph.out_edges(current);
    if (out.empty()) {
      chain = graph.loop_set(current).size() == 1;
      break;
    }
    chain = out.size() == 1 && out.front().label.size() == 1 && graph.loop_set(current).empty();
    current = out.front().to;
  }
  if (chain) return CardinalityCondition::singleton;

  bool finite = true;
  for (const auto& beta : verts) {
    const bool maximal = graph.out_edges(beta).empty();
    const std::size_t loop = graph.loop_set(beta).size();
    if ((maximal && loop != 1) || (!maximal && loop != 0)) finite = false;
  }
  if (finite) return CardinalityCondition::finite;
  return CardinalityCondition::countable;
}

FaceAnalysis analyze_face(const StructureGraph& graph, const FaceVector& alpha) {
  FaceAnalysis a;
  a.alpha = alpha;
  a.alive = graph.alive(alpha);
  a.cardinality = classify_cardinality(graph, alpha);
  if (!a.alive) return a;
  const auto dim = dimension(graph, alpha);
  a.nu = dim.nu;
  a.dimension = dim.value();
  a.measure_finite = measure_finite(graph, alpha);
  a.condition = cardinality_condition(graph, alpha);
  if (a.cardinality.kind == CardinalityClass::Kind::finite) a.points = enumerate_finite_points(graph, alpha);
  return a;
}

namespace {

std::vector<FaceAnalysis> analyze_faces(const StructureGraph& graph, const std::vector<FaceVector>& faces,
                                        Execution exec) {
  std::vector<FaceAnalysis> out(faces.size());
  std::vector<std::exception_ptr> failures(faces.size());
  const auto count = static_cast<std::ptrdiff_t>(faces.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = analyze_face(graph, faces[static_cast<std::size_t>(i)]);
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

// F_-alpha = F_alpha - alpha when both cubes coincide.
FaceAnalysis mirror(const FaceAnalysis& a) {
  FaceAnalysis m = a;
  m.alpha = -a.alpha;
  if (m.points) {
    for (auto& x : *m.points)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a.alpha[static_cast<int>(i)];
    std::sort(m.points->begin(), m.points->end());
  }
  return m;
}

void check_self_symmetry(const StructureGraph& graph, const FaceVector& alpha) {
  const FaceVector opposite = -alpha;
  const Coord top = graph.order() - 1;
  std::vector<Digit> expected;
  for (auto g : graph.loop_set(alpha)) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= top * alpha[static_cast<int>(i)];
    expected.push_back(std::move(g));
  }
  if (expected != graph.loop_set(opposite) || graph.alive(alpha) != graph.alive(opposite) ||
      (graph.alive(alpha) && dimension(graph, alpha).nu != dimension(graph, opposite).nu)) {
    throw std::logic_error("self-intersection symmetry violated between " + alpha.to_string() + " and " +
                           opposite.to_string());
  }
}

bool first_nonzero_positive(const FaceVector& alpha) {
  for (int e : alpha.entries())
    if (e != 0) return e > 0;
  return false;
}

}  // namespace

AnalysisReport analyze(const IntersectionProblem& problem, Execution exec) {
  const auto graph = StructureGraph::build(problem, exec);
  AnalysisReport report{problem.first(), problem.second(), false, graph.summary(), {}, std::nullopt};
  report.faces = analyze_faces(graph, enumerate_face_vectors(problem.dimension()), exec);
  return report;
}

AnalysisReport self_intersection_report(const DigitSet& d, Execution exec) {
  const IntersectionProblem problem(d, d);
  const auto graph = StructureGraph::build(problem, exec);
  const auto all = enumerate_face_vectors(d.dimension());

  std::vector<FaceVector> representatives;
  for (const auto& alpha : all) {
    if (!first_nonzero_positive(alpha)) continue;
    check_self_symmetry(graph, alpha);
    representatives.push_back(alpha);
  }
  const auto analyzed = analyze_faces(graph, representatives, exec);
  std::map<FaceVector, FaceAnalysis> by_face;
  for (const auto& a : analyzed) {
    by_face.emplace(a.alpha, a);
    by_face.emplace(-a.alpha, mirror(a));
  }

  AnalysisReport report{d, d, true, graph.summary(), {}, SelfIntersectionSummary{}};
  SelfIntersectionSummary& s = *report.self;
  s.one_point = s.finite = s.graph_one_point = s.graph_finite = true;
  std::map<FaceVector, int> nonzero_in_degree;
  for (auto& [alpha, a] : by_face) {
    if (a.alive) {
      const bool finite = a.cardinality.kind == CardinalityClass::Kind::finite;
      s.finite = s.finite && finite;
      s.one_point = s.one_point && finite && a.cardinality.count == 1;
      s.graph_one_point = s.graph_one_point && a.condition == CardinalityCondition::singleton;
      const bool maximal = graph.out_edges(alpha).empty();
      const std::size_t loop = graph.loop_set(alpha).size();
      if ((maximal && loop != 1) || (!maximal && loop != 0)) s.graph_finite = false;
      for (const auto& e : graph.out_edges(alpha)) ++nonzero_in_degree[e.to];
    }
    report.faces.push_back(std::move(a));
  }
  // Chains through nonzero faces must not share vertices.
  for (const auto& [beta, degree] : nonzero_in_degree)
    if (degree > 1) s.graph_one_point = false;
  return report;
}

}  // namespace fcube
