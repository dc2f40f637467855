#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fcube/digit_set.hpp"
#include "fcube/intersection_graph.hpp"
#include "fcube/reports.hpp"

namespace fcube::testing {

inline std::string data_path(const std::string& name) { return std::string(FCUBE_TEST_DATA) + "/" + name; }

inline DigitSet carpet() {
  std::vector<Digit> d;
  for (Coord x = 0; x < 3; ++x)
    for (Coord y = 0; y < 3; ++y)
      if (x != 1 || y != 1) d.push_back({x, y});
  return DigitSet::make(2, 3, d);
}

// The two order-6 fractal squares whose intersection has 24 points; digits
// are (x, y) cell positions with (0,0) at the bottom left.
inline DigitSet squares6_first() {
  return DigitSet::make(2, 6, {{0, 0}, {2, 0}, {4, 0}, {2, 1}, {4, 1}, {0, 2}, {1, 2},
                               {3, 2}, {2, 3}, {4, 3}, {0, 4}, {1, 4}, {3, 4}});
}
inline DigitSet squares6_second() {
  return DigitSet::make(2, 6, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {3, 1}, {5, 1},
                               {4, 2}, {1, 3}, {5, 3}, {2, 4}, {1, 5}, {3, 5}});
}
inline IntersectionProblem squares6() { return {squares6_first(), squares6_second()}; }

inline IntersectionProblem countable_pair() {
  return {DigitSet::make(1, 3, {{1}, {2}}), DigitSet::make(1, 3, {{0}, {2}})};
}

// Every digit of {0..n-1}^k, in lexicographic order.
inline std::vector<Digit> ambient_digits(int k, Coord n) {
  std::vector<Digit> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<Digit> next;
    for (const auto& prefix : out)
      for (Coord c = 0; c < n; ++c) {
        auto d = prefix;
        d.push_back(c);
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

// Random nonempty digit set; each digit kept with probability `density`.
inline DigitSet random_digit_set(std::mt19937& rng, int k, Coord n, double density) {
  std::bernoulli_distribution keep(density);
  const auto all = ambient_digits(k, n);
  std::vector<Digit> chosen;
  for (const auto& d : all)
    if (keep(rng)) chosen.push_back(d);
  if (chosen.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    chosen.push_back(all[pick(rng)]);
  }
  return DigitSet::make(k, n, chosen);
}

// Linear-scan membership, independent of DigitSet::contains.
inline bool scan_contains(const DigitSet& d, const Digit& x) {
  return std::any_of(d.digits().begin(), d.digits().end(), [&](const Digit& y) { return y == x; });
}

// Brute-force D1 ∩ (D2 + t) by scanning the ambient digit cube.
inline std::vector<Digit> brute_shift_intersection(const DigitSet& d1, const DigitSet& d2, const std::vector<Coord>& t) {
  std::vector<Digit> out;
  for (const auto& x : ambient_digits(d1.dimension(), d1.order())) {
    Digit back = x;
    for (std::size_t i = 0; i < back.size(); ++i) back[i] -= t[i];
    if (scan_contains(d1, x) && scan_contains(d2, back)) out.push_back(x);
  }
  return out;
}

}  // namespace fcube::testing
