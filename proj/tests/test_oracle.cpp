#include <doctest.h>

#include <algorithm>
#include <random>

#include "fcube/errors.hpp"
#include "fcube/oracle.hpp"
#include "test_support.hpp"

using namespace fcube;
using namespace fcube::oracle;

namespace {

Rational r(std::int64_t p, std::int64_t q) { return Rational(p, q); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

// x lies in some closed cell (c + [0,1]^k) / n^p of the depth-p cover.
bool in_cover(const DigitSet& d, const ExactPoint& x, int p) {
  const auto cells = refine(d, p);
  const Coord side = cells.order();
  for (const auto& c : cells.digits()) {
    bool inside = true;
    for (std::size_t i = 0; i < x.size() && inside; ++i) {
      const Rational lo(c[i], side), hi(c[i] + 1, side);
      inside = lo <= x[i] && x[i] <= hi;
    }
    if (inside) return true;
  }
  return false;
}

// Point with address prefix followed by a repeated cycle of digits.
ExactPoint periodic_point(const std::vector<Digit>& prefix, const std::vector<Digit>& cycle, Coord n) {
  const std::size_t k = cycle.front().size();
  Coord period = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) period *= n;
  ExactPoint y(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t num = 0;
    for (const auto& c : cycle) num = num * n + c[i];
    y[i] = Rational(num, period - 1);
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) y = apply_map(y, *it, n);
  return y;
}

}  // namespace

TEST_CASE("cell counts: examples") {
  const IntersectionProblem carpet(testing::carpet(), testing::carpet());
  const auto counts = adjacent_cell_counts(carpet, FaceVector({1, 0}), 6);
  for (int p = 1; p <= 6; ++p) CHECK(counts[static_cast<std::size_t>(p - 1)] == ipow(3, p));

  for (int k = 1; k <= 3; ++k) {
    const IntersectionProblem full(DigitSet::full(k, 2), DigitSet::full(k, 2));
    for (int p = 1; p <= 4; ++p) CHECK(adjacent_cell_count(full, FaceVector::zero(k), p) == ipow(2, p * k));
  }
  const IntersectionProblem full2(DigitSet::full(2, 3), DigitSet::full(2, 3));
  CHECK(adjacent_cell_count(full2, FaceVector({1, 0}), 3) == 27);
  CHECK(adjacent_cell_count(full2, FaceVector({1, 1}), 3) == 1);
  CHECK_THROWS_AS(adjacent_cell_count(full2, FaceVector({1, 0}), 0), InputError);
  CHECK_THROWS_AS(adjacent_cell_count(full2, FaceVector({1, 0, 0}), 1), InputError);
}

TEST_CASE("cell counts: reference, serial and parallel agree") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const Coord n = 2 + static_cast<Coord>(rng() % 3);
    const IntersectionProblem P(testing::random_digit_set(rng, k, n, 0.5), testing::random_digit_set(rng, k, n, 0.5));
    const auto faces = enumerate_face_vectors(k);
    const auto& a = faces[rng() % faces.size()];
    const int depth = k == 3 ? 2 : 3;
    const auto serial = adjacent_cell_counts(P, a, depth, {kDefaultMaxCells, Execution::serial});
    const auto parallel = adjacent_cell_counts(P, a, depth, {kDefaultMaxCells, Execution::parallel});
    CHECK(serial == parallel);
    for (int p = 1; p <= depth; ++p) {
      CHECK(serial[static_cast<std::size_t>(p - 1)] == adjacent_cell_count_reference(P, a, p));
      if (p > 1 && serial[static_cast<std::size_t>(p - 2)] == 0) CHECK(serial[static_cast<std::size_t>(p - 1)] == 0);
    }
    const auto first_zero = std::find(serial.begin(), serial.end(), 0U);
    const auto cert = certify_empty(P, a, depth);
    if (first_zero == serial.end()) {
      CHECK_FALSE(cert.certified());
    } else {
      REQUIRE(cert.certified());
      CHECK(*cert.depth == static_cast<int>(first_zero - serial.begin()) + 1);
    }
  }
}

TEST_CASE("cell count guard") {
  const IntersectionProblem full(DigitSet::full(2, 4), DigitSet::full(2, 4));
  CHECK_THROWS_AS(adjacent_cell_counts(full, FaceVector({0, 0}), 6, {1000, Execution::serial}), GuardError);
}

TEST_CASE("emptiness certificates") {
  const auto ex = testing::squares6();
  const auto c = certify_empty(ex, FaceVector({1, 0}), 6);
  CHECK(c.certified());
  CHECK_FALSE(certify_empty(ex, FaceVector({0, 0}), 6).certified());
  CHECK_FALSE(certify_empty(ex, FaceVector({-1, -1}), 6).certified());

  const IntersectionProblem single(DigitSet::make(2, 3, {{0, 0}}), DigitSet::make(2, 3, {{0, 0}}));
  const auto s = certify_empty(single, FaceVector({1, 1}), 4);
  REQUIRE(s.certified());
  CHECK(*s.depth == 1);
}

TEST_CASE("oracle and graph agree on emptiness") {
  std::mt19937 rng(777);
  int problems = 0, disagreements = 0;
  for (int trial = 0; trial < 110; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const Coord n = 2 + static_cast<Coord>(rng() % 3);
    const double density = k == 3 ? 0.3 : 0.5;
    const IntersectionProblem P(testing::random_digit_set(rng, k, n, density),
                                testing::random_digit_set(rng, k, n, density));
    const auto G = StructureGraph::build(P);
    for (const auto& a : enumerate_face_vectors(k)) {
      const bool certified = certify_empty(P, a, 6).certified();
      if (certified == G.alive(a)) {
        ++disagreements;
        MESSAGE("disagreement at " << a.to_string() << " k=" << k << " n=" << n);
      }
    }
    ++problems;
  }
  CHECK(problems >= 100);
  CHECK(disagreements == 0);
}

TEST_CASE("box-counting dimension") {
  const IntersectionProblem carpet(testing::carpet(), testing::carpet());
  CHECK(estimate_dimension(carpet, FaceVector({1, 0}), 3, 6) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(estimate_dimension(testing::squares6(), FaceVector({0, 0}), 4, 8)) < 0.15);
  CHECK(adjacent_cell_counts(testing::squares6(), FaceVector({0, 0}), 8).back() == 24);
  const IntersectionProblem full(DigitSet::full(2, 2), DigitSet::full(2, 2));
  CHECK(estimate_dimension(full, FaceVector({0, 0}), 2, 6) == doctest::Approx(2.0).epsilon(1e-9));

  const auto fit = box_count_fit(carpet, FaceVector({1, 0}), 2, 4);
  CHECK(fit.counts == std::vector<std::uint64_t>{9, 27, 81});
  CHECK_THROWS_AS(box_count_fit(testing::squares6(), FaceVector({1, 0}), 2, 6), InputError);
  CHECK_THROWS_AS(box_count_fit(carpet, FaceVector({1, 0}), 4, 4), InputError);
}

TEST_CASE("exact membership: examples") {
  const auto cantor = DigitSet::make(1, 3, {{0}, {2}});
  CHECK(exact_member(cantor, {r(1, 4)}));
  CHECK(exact_member(cantor, {r(3, 4)}));
  CHECK(exact_member(cantor, {r(0, 1)}));
  CHECK(exact_member(cantor, {r(1, 1)}));
  CHECK(exact_member(cantor, {r(1, 3)}));
  CHECK(exact_member(cantor, {r(26, 27)}));
  CHECK_FALSE(exact_member(cantor, {r(1, 2)}));
  CHECK_FALSE(exact_member(cantor, {r(4, 9)}));
  CHECK_FALSE(exact_member(cantor, {r(-1, 3)}));
  CHECK_FALSE(exact_member(cantor, {r(4, 3)}));

  const auto carpet = testing::carpet();
  CHECK(exact_member(carpet, {r(1, 3), r(1, 2)}));
  CHECK_FALSE(exact_member(carpet, {r(1, 2), r(1, 2)}));
  CHECK_THROWS_AS(exact_member(carpet, {r(1, 2)}), InputError);
}

TEST_CASE("exact membership: fixed points of every digit map") {
  std::uint64_t checked = 0;
  for (int k = 1; k <= 2; ++k) {
    for (Coord n = 2; n <= 4; ++n) {
      const auto ambient = testing::ambient_digits(k, n);
      const std::uint64_t subsets = std::uint64_t{1} << ambient.size();
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::vector<Digit> digits;
        for (std::size_t i = 0; i < ambient.size(); ++i)
          if (mask >> i & 1U) digits.push_back(ambient[i]);
        const auto d = DigitSet::make(k, n, digits);
        for (const auto& g : d.digits()) {
          if (!exact_member(d, fixed_point(g, n))) {
            FAIL("fixed point of " << digit_to_string(g) << " rejected");
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 500000);
}

TEST_CASE("exact membership: random points") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const Coord n = 2 + static_cast<Coord>(rng() % 3);
    const auto d = testing::random_digit_set(rng, k, n, 0.5);
    const auto& ds = d.digits();

    // Eventually periodic addresses are always members.
    std::vector<Digit> prefix, cycle;
    for (std::uint32_t i = 0, m = rng() % 3; i < m; ++i) prefix.push_back(ds[rng() % ds.size()]);
    for (std::uint32_t i = 0, m = 1 + rng() % 3; i < m; ++i) cycle.push_back(ds[rng() % ds.size()]);
    const auto x = periodic_point(prefix, cycle, n);
    CHECK(exact_member(d, x));

    // Arbitrary rationals: membership implies lying in every cover.
    ExactPoint y(static_cast<std::size_t>(k));
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 30);
    for (auto& c : y) c = Rational(static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(q + 1)), q);
    const bool member = exact_member(d, y);
    for (int p = 1; p <= 4; ++p) {
      if (member) CHECK(in_cover(d, y, p));
    }
    if (!in_cover(d, y, 4)) CHECK_FALSE(member);
  }
}

TEST_CASE("point verification") {
  const auto ex = testing::squares6();
  CHECK(verify_point(ex, FaceVector({-1, -1}), {r(0, 1), r(0, 1)}));
  CHECK(verify_point(ex, FaceVector({-1, 0}), {r(0, 1), r(1, 3)}));
  CHECK(verify_point(ex, FaceVector({-1, 0}), {r(0, 1), r(2, 3)}));
  CHECK_FALSE(verify_point(ex, FaceVector({-1, 0}), {r(0, 1), r(1, 2)}));
  CHECK_FALSE(verify_point(ex, FaceVector({1, 0}), {r(1, 1), r(0, 1)}));

  const auto countable = testing::countable_pair();
  for (std::int64_t m = 1; m <= 3; ++m) {
    std::int64_t p3 = 1;
    for (std::int64_t i = 0; i < m; ++i) p3 *= 3;
    CHECK(verify_point(countable, FaceVector({0}), {r(p3 - 1, p3)}));
  }
  CHECK(verify_point(countable, FaceVector({0}), {r(1, 1)}));
  CHECK_FALSE(verify_point(countable, FaceVector({0}), {r(1, 2)}));
}

TEST_CASE("enumerated finite points pass verification") {
  const auto ex = testing::squares6();
  const auto G = StructureGraph::build(ex);
  for (const auto& a : G.alive_faces()) {
    for (const auto& x : enumerate_finite_points(G, a)) CHECK(verify_point(ex, a, x));
  }

  std::mt19937 rng(12);
  int finite_faces = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const Coord n = 2 + static_cast<Coord>(rng() % 3);
    const IntersectionProblem P(testing::random_digit_set(rng, k, n, 0.4), testing::random_digit_set(rng, k, n, 0.4));
    const auto H = StructureGraph::build(P);
    for (const auto& a : H.alive_faces()) {
      if (classify_cardinality(H, a).kind != CardinalityClass::Kind::finite) continue;
      ++finite_faces;
      for (const auto& x : enumerate_finite_points(H, a)) CHECK(verify_point(P, a, x));
    }
  }
  CHECK(finite_faces > 50);
}
