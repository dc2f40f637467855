#include <doctest.h>

#include <random>
#include <set>

#include "fcube/errors.hpp"
#include "fcube/face_lattice.hpp"

using fcube::FaceVector;

TEST_CASE("face vectors enumerate in lexicographic order") {
  const auto one = fcube::enumerate_face_vectors(1);
  REQUIRE(one.size() == 3);
  CHECK(one[0] == FaceVector({-1}));
  CHECK(one[1] == FaceVector({0}));
  CHECK(one[2] == FaceVector({1}));

  const auto two = fcube::enumerate_face_vectors(2);
  REQUIRE(two.size() == 9);
  CHECK(two.front() == FaceVector({-1, -1}));
  CHECK(two.back() == FaceVector({1, 1}));
  CHECK(std::is_sorted(two.begin(), two.end()));

  CHECK(fcube::enumerate_face_vectors(3).size() == 27);
  for (int k = 1; k <= 4; ++k) {
    const auto all = fcube::enumerate_face_vectors(k);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].index() == i);
  }
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(fcube::enumerate_face_vectors(0), fcube::InputError);
  CHECK_THROWS_AS(fcube::enumerate_face_vectors(9), fcube::InputError);
  CHECK_THROWS_AS(FaceVector({2, 0}), fcube::InputError);
}

TEST_CASE("parse and print") {
  const auto a = FaceVector::parse("( -1, 0,1 )");
  CHECK(a == FaceVector({-1, 0, 1}));
  CHECK(a.to_string() == "(-1,0,1)");
  CHECK_THROWS_AS(FaceVector::parse("(1,,0)"), fcube::InputError);
  CHECK_THROWS_AS(FaceVector::parse("1,0"), fcube::InputError);
}

TEST_CASE("subface relation") {
  CHECK(fcube::is_subface(FaceVector({1, 0}), FaceVector({1, 1})));
  CHECK_FALSE(fcube::is_subface(FaceVector({1, 0}), FaceVector({-1, 1})));
  for (const auto& b : fcube::enumerate_face_vectors(2)) CHECK(fcube::is_subface(FaceVector({0, 0}), b));
  CHECK_THROWS_AS(fcube::is_subface(FaceVector({1}), FaceVector({1, 0})), fcube::InputError);
}

TEST_CASE("complementarity") {
  CHECK(fcube::is_complementary(FaceVector({1, 0}), FaceVector({0, -1})));
  CHECK_FALSE(fcube::is_complementary(FaceVector({1, 0}), FaceVector({1, 0})));
  for (const auto& b : fcube::enumerate_face_vectors(2)) CHECK(fcube::is_complementary(FaceVector({0, 0}), b));

  const auto c = fcube::complementary_set(FaceVector({1, 0}));
  CHECK(c == std::vector<FaceVector>{FaceVector({0, -1}), FaceVector({0, 0}), FaceVector({0, 1})});
  CHECK(fcube::complementary_set(FaceVector({1, 1})) == std::vector<FaceVector>{FaceVector({0, 0})});
  CHECK(fcube::complementary_set(FaceVector({0, 0})).size() == 9);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& a : fcube::enumerate_face_vectors(k)) {
      std::size_t expected = 1;
      for (int i = 0; i < k - a.weight(); ++i) expected *= 3;
      CHECK(fcube::complementary_set(a).size() == expected);
    }
  }
}

TEST_CASE("positive part") {
  CHECK(FaceVector({1, -1, 0}).positive_part() == std::vector<int>{1, 0, 0});
  CHECK(FaceVector({0, 0}).positive_part() == std::vector<int>{0, 0});
  const FaceVector a({-1, -1});
  CHECK(a.positive_part() == std::vector<int>{0, 0});
  CHECK((-a).positive_part() == std::vector<int>{1, 1});
  // (-a)^0 = a^0 - a, exhaustively up to k = 5.
  for (int k = 1; k <= 5; ++k) {
    for (const auto& v : fcube::enumerate_face_vectors(k)) {
      const auto lhs = (-v).positive_part();
      const auto p = v.positive_part();
      for (int i = 0; i < k; ++i) CHECK(lhs[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(i)] - v[i]);
    }
  }
}

TEST_CASE("boundary face vectors") {
  CHECK(fcube::boundary_face_vectors(FaceVector({1, 0})) == std::vector<FaceVector>{FaceVector({1, -1}), FaceVector({1, 1})});
  CHECK(fcube::boundary_face_vectors(FaceVector({0, 0})).size() == 8);
  CHECK(fcube::boundary_face_vectors(FaceVector({1, 1})).empty());
  for (const auto& a : fcube::enumerate_face_vectors(3)) {
    for (const auto& b : fcube::boundary_face_vectors(a)) {
      CHECK(fcube::is_subface(a, b));
      CHECK(a != b);
    }
  }
}

TEST_CASE("subface pair count is 5^k") {
  std::size_t five = 1;
  for (int k = 1; k <= 5; ++k) {
    five *= 5;
    const auto all = fcube::enumerate_face_vectors(k);
    std::size_t pairs = 0;
    for (const auto& a : all)
      for (const auto& b : all) pairs += fcube::is_subface(a, b);
    CHECK(pairs == five);
  }
}

TEST_CASE("2^|a| vectors share a zero set") {
  for (int k = 1; k <= 4; ++k) {
    const auto all = fcube::enumerate_face_vectors(k);
    for (const auto& a : all) {
      std::size_t same = 0;
      for (const auto& b : all) same += b.free_coordinates() == a.free_coordinates();
      CHECK(same == (std::size_t{1} << a.weight()));
    }
  }
}

TEST_CASE("subface is a partial order; complementary sums are superfaces") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto count = fcube::face_count(k);
    const auto a = FaceVector::from_index(k, rng() % count);
    const auto b = FaceVector::from_index(k, rng() % count);
    const auto c = FaceVector::from_index(k, rng() % count);
    CHECK(fcube::is_subface(a, a));
    if (fcube::is_subface(a, b) && fcube::is_subface(b, a)) CHECK(a == b);
    if (fcube::is_subface(a, b) && fcube::is_subface(b, c)) CHECK(fcube::is_subface(a, c));
    if (fcube::is_complementary(a, b)) {
      const auto sum = fcube::add_complementary(a, b);
      CHECK(fcube::is_subface(a, sum));
      CHECK(fcube::is_subface(b, sum));
    } else {
      CHECK_THROWS_AS(fcube::add_complementary(a, b), fcube::InputError);
    }
  }
}
