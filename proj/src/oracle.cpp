#include "fcube/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "fcube/errors.hpp"

namespace fcube::oracle {

CellCover make_cell_cover(const DigitSet& d, int depth, std::uint64_t max_cells) {
  return CellCover{depth, refine(d, depth, max_cells)};
}

namespace {

void require_dimension(const IntersectionProblem& problem, const FaceVector& alpha) {
  if (alpha.dimension() != problem.dimension()) {
    throw InputError("face vector " + alpha.to_string() + " does not match problem dimension " +
                     std::to_string(problem.dimension()));
  }
}

// Packs level-q cell coordinates (and their +-1 neighbours) into one
// integer. Coordinates of both covers lie in [-side, 2 side - 1].
class CellKeys {
 public:
  CellKeys(int k, Coord side) : k_(k), offset_(side + 1) {
    const auto base = static_cast<unsigned __int128>(3 * side + 3);
    unsigned __int128 w = 1;
    weights_.assign(static_cast<std::size_t>(k), 0);
    for (int i = k - 1; i >= 0; --i) {
      weights_[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(w);
      w *= base;
      if (w > static_cast<unsigned __int128>(INT64_MAX)) {
        throw GuardError("cell coordinates at side " + std::to_string(side) + " do not fit a 64-bit key");
      }
    }
    // 3^k neighbour offsets in {-1,0,1}^k.
    deltas_ = {0};
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> next;
      for (auto d : deltas_)
        for (int s = -1; s <= 1; ++s) next.push_back(d + s * weights_[static_cast<std::size_t>(i)]);
      deltas_ = std::move(next);
    }
  }

  std::int64_t key(const Coord* cell) const {
    std::int64_t key = 0;
    for (int i = 0; i < k_; ++i) key += (cell[i] + offset_) * weights_[static_cast<std::size_t>(i)];
    return key;
  }

  bool touches(std::int64_t key, const std::vector<std::int64_t>& sorted_keys) const {
    for (auto d : deltas_)
      if (std::binary_search(sorted_keys.begin(), sorted_keys.end(), key + d)) return true;
    return false;
  }

 private:
  int k_;
  Coord offset_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> deltas_;
};

// Flat row-major list of cells.
struct CellList {
  int k = 0;
  std::vector<Coord> coords;
  std::size_t size() const { return coords.size() / static_cast<std::size_t>(k); }
  const Coord* cell(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(k); }
};

CellList children(const CellList& parents, const DigitSet& d, std::uint64_t max_cells) {
  const std::size_t k = static_cast<std::size_t>(parents.k);
  if (static_cast<double>(parents.size()) * static_cast<double>(d.size()) > static_cast<double>(max_cells)) {
    throw GuardError("oracle cover needs " + std::to_string(parents.size() * d.size()) +
                     " cells, over the guard " + std::to_string(max_cells));
  }
  CellList out{parents.k, {}};
  out.coords.reserve(parents.size() * d.size() * k);
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const Coord* p = parents.cell(i);
    for (const auto& digit : d.digits())
      for (std::size_t c = 0; c < k; ++c) out.coords.push_back(p[c] * d.order() + digit[c]);
  }
  return out;
}

std::vector<std::int64_t> sorted_keys(const CellList& cells, const CellKeys& keys, Execution exec) {
  std::vector<std::int64_t> out(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = keys.key(cells.cell(static_cast<std::size_t>(i)));
  std::sort(out.begin(), out.end());
  return out;
}

// Cells of `cells` that touch some cell listed in `other`.
CellList keep_touching(const CellList& cells, const std::vector<std::int64_t>& other, const CellKeys& keys,
                       Execution exec) {
  std::vector<char> keep(cells.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    keep[idx] = keys.touches(keys.key(cells.cell(idx)), other) ? 1 : 0;
  }
  CellList out{cells.k, {}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (keep[i]) out.coords.insert(out.coords.end(), cells.cell(i), cells.cell(i) + cells.k);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> adjacent_cell_counts(const IntersectionProblem& problem, const FaceVector& alpha,
                                                int depth, const OracleOptions& options) {
  require_dimension(problem, alpha);
  if (depth < 1) throw InputError("cover depth must be at least 1");
  const int k = problem.dimension();
  const Coord n = problem.order();

  // Level 0: the unit cube and its translate by alpha always touch.
  CellList first{k, std::vector<Coord>(static_cast<std::size_t>(k), 0)};
  CellList second{k, {}};
  for (int e : alpha.entries()) second.coords.push_back(e);

  std::vector<std::uint64_t> counts;
  Coord side = 1;
  for (int level = 1; level <= depth; ++level) {
    side = checked_power(n, level);
    const CellKeys keys(k, side);
    CellList a = children(first, problem.first(), options.max_cells);
    CellList b = children(second, problem.second(), options.max_cells);
    const auto b_keys = sorted_keys(b, keys, options.exec);
    a = keep_touching(a, b_keys, keys, options.exec);
    const auto a_keys = sorted_keys(a, keys, options.exec);
    b = keep_touching(b, a_keys, keys, options.exec);
    counts.push_back(a.size());
    first = std::move(a);
    second = std::move(b);
    if (first.size() == 0) {
      // Descendants of separated cells stay separated.
      counts.resize(static_cast<std::size_t>(depth), 0);
      break;
    }
  }
  return counts;
}

std::uint64_t adjacent_cell_count(const IntersectionProblem& problem, const FaceVector& alpha, int depth,
                                  const OracleOptions& options) {
  return adjacent_cell_counts(problem, alpha, depth, options).back();
}

std::uint64_t adjacent_cell_count_reference(const IntersectionProblem& problem, const FaceVector& alpha, int depth,
                                            std::uint64_t max_cells) {
  require_dimension(problem, alpha);
  const auto c1 = make_cell_cover(problem.first(), depth, max_cells);
  const auto c2 = make_cell_cover(problem.second(), depth, max_cells);
  const Coord side = c1.order();
  const int k = problem.dimension();
  const CellKeys keys(k, side);
  std::vector<std::int64_t> shifted;
  shifted.reserve(c2.cells.size());
  Digit moved(static_cast<std::size_t>(k));
  for (const auto& cell : c2.cells.digits()) {
    for (int i = 0; i < k; ++i) moved[static_cast<std::size_t>(i)] = cell[static_cast<std::size_t>(i)] + side * alpha[i];
    shifted.push_back(keys.key(moved.data()));
  }
  std::sort(shifted.begin(), shifted.end());
  std::uint64_t count = 0;
  for (const auto& cell : c1.cells.digits())
    if (keys.touches(keys.key(cell.data()), shifted)) ++count;
  return count;
}

namespace {

// Depth-first search for a pair of touching closed cells at the given depth,
// one from each cover. Stops at the first witness, so nonempty faces cost
// one root-to-leaf descent plus backtracking instead of a full level sweep.
bool touching_pair_exists(const IntersectionProblem& problem, const FaceVector& alpha, int depth,
                          std::uint64_t budget) {
  const int k = problem.dimension();
  const Coord n = problem.order();
  const auto& d1 = problem.first().digits();
  const auto& d2 = problem.second().digits();
  struct Frame {
    Digit c1, c2;
    int level;
    std::size_t i = 0, j = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({Digit(static_cast<std::size_t>(k), 0), Digit(alpha.entries().begin(), alpha.entries().end()), 0});
  std::uint64_t visited = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.level == depth) return true;
    if (f.i == d1.size()) {
      stack.pop_back();
      continue;
    }
    const auto& g1 = d1[f.i];
    const auto& g2 = d2[f.j];
    if (++f.j == d2.size()) f.j = 0, ++f.i;
    Digit c1(static_cast<std::size_t>(k)), c2(static_cast<std::size_t>(k));
    bool touch = true;
    for (std::size_t t = 0; t < c1.size() && touch; ++t) {
      c1[t] = f.c1[t] * n + g1[t];
      c2[t] = f.c2[t] * n + g2[t];
      touch = c1[t] - c2[t] <= 1 && c2[t] - c1[t] <= 1;
    }
    if (!touch) continue;
    if (++visited > budget) {
      throw GuardError("emptiness search visited more than " + std::to_string(budget) + " cell pairs");
    }
    const int level = f.level + 1;
    stack.push_back({std::move(c1), std::move(c2), level});
  }
  return false;
}

}  // namespace

EmptinessCertificate certify_empty(const IntersectionProblem& problem, const FaceVector& alpha, int max_depth,
                                   const OracleOptions& options) {
  require_dimension(problem, alpha);
  if (max_depth < 1) throw InputError("pmax must be at least 1");
  checked_power(problem.order(), max_depth);
  // N_p == 0 iff no touching pair exists at depth p, and it stays 0 below.
  for (int p = 1; p <= max_depth; ++p)
    if (!touching_pair_exists(problem, alpha, p, options.max_cells)) return {p};
  return {};
}

BoxCountFit box_count_fit(const IntersectionProblem& problem, const FaceVector& alpha, int lo, int hi,
                          const OracleOptions& options) {
  if (lo < 1 || hi <= lo) throw InputError("box counting needs 1 <= plo < phi");
  const auto all = adjacent_cell_counts(problem, alpha, hi, options);
  BoxCountFit fit;
  fit.lo = lo;
  fit.hi = hi;
  fit.counts.assign(all.begin() + (lo - 1), all.end());
  const double log_n = std::log(static_cast<double>(problem.order()));
  std::vector<double> xs, ys;
  for (int p = lo; p <= hi; ++p) {
    const auto np = fit.counts[static_cast<std::size_t>(p - lo)];
    if (np == 0) {
      throw InputError("F_" + alpha.to_string() + " is empty (N_" + std::to_string(p) + " = 0); nothing to estimate");
    }
    xs.push_back(p * log_n);
    ys.push_back(std::log(static_cast<double>(np)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = sxy / sxx;
  return fit;
}

double estimate_dimension(const IntersectionProblem& problem, const FaceVector& alpha, int lo, int hi,
                          const OracleOptions& options) {
  return box_count_fit(problem, alpha, lo, hi, options).slope;
}

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

bool exact_member(const DigitSet& d, const ExactPoint& x) {
  if (static_cast<int>(x.size()) != d.dimension()) {
    throw InputError("point " + point_to_string(x) + " does not match digit set dimension " +
                     std::to_string(d.dimension()));
  }
  // Common denominator q; states are numerator vectors a with x = a / q.
  std::int64_t q = 1;
  for (const auto& r : x) q = std::lcm(q, r.denominator());
  const Coord n = d.order();
  if (q > INT64_MAX / n / 2) throw GuardError("denominator of " + point_to_string(x) + " too large");
  std::vector<std::int64_t> start;
  for (const auto& r : x) {
    const std::int64_t a = r.numerator() * (q / r.denominator());
    if (a < 0 || a > q) return false;
    start.push_back(a);
  }

  const std::size_t k = start.size();
  // Digits d with 0 <= n a - d q <= q: per coordinate d_i in
  // [ceil((n a_i - q) / q), floor(n a_i / q)], at most two values.
  auto successors = [&](const std::vector<std::int64_t>& a) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::pair<Coord, Coord>> range(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t hi = (n * a[i]) / q;
      const std::int64_t below = n * a[i] - q;
      const std::int64_t lo = below <= 0 ? 0 : (below + q - 1) / q;
      range[i] = {lo, std::min<Coord>(hi, n - 1)};
      if (range[i].first > range[i].second) return out;
    }
    Digit digit(k);
    for (std::size_t i = 0; i < k; ++i) digit[i] = range[i].first;
    while (true) {
      if (d.contains(digit)) {
        std::vector<std::int64_t> next(k);
        for (std::size_t i = 0; i < k; ++i) next[i] = n * a[i] - digit[i] * q;
        out.push_back(std::move(next));
      }
      std::size_t i = 0;
      while (i < k && digit[i] == range[i].second) {
        digit[i] = range[i].first;
        ++i;
      }
      if (i == k) break;
      ++digit[i];
    }
    return out;
  };

  // Membership holds iff an infinite valid digit path exists, i.e. a cycle
  // is reachable. Iterative DFS with grey/black marking.
  enum class Mark : char { grey, black };
  std::unordered_map<std::vector<std::int64_t>, Mark, StateHash> marks;
  struct Frame {
    std::vector<std::int64_t> state;
    std::vector<std::vector<std::int64_t>> next;
    std::size_t cursor = 0;
  };
  std::vector<Frame> stack;
  marks[start] = Mark::grey;
  stack.push_back({start, successors(start), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.cursor == top.next.size()) {
      marks[top.state] = Mark::black;
      stack.pop_back();
      continue;
    }
    auto child = top.next[top.cursor++];
    auto it = marks.find(child);
    if (it != marks.end()) {
      if (it->second == Mark::grey) return true;
      continue;
    }
    marks.emplace(child, Mark::grey);
    auto next = successors(child);
    stack.push_back({std::move(child), std::move(next), 0});
  }
  return false;
}

bool verify_point(const IntersectionProblem& problem, const FaceVector& alpha, const ExactPoint& x) {
  require_dimension(problem, alpha);
  if (static_cast<int>(x.size()) != problem.dimension()) {
    throw InputError("point " + point_to_string(x) + " does not match problem dimension");
  }
  ExactPoint shifted = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    shifted[i] -= alpha[static_cast<int>(i)];
    if (x[i] < 0 || x[i] > 1 || shifted[i] < 0 || shifted[i] > 1) return false;
  }
  return exact_member(problem.first(), x) && exact_member(problem.second(), shifted);
}

}  // namespace fcube::oracle
