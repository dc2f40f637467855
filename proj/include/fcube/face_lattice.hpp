#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fcube {

inline constexpr int kMaxDimension = 8;

// An element of {-1,0,1}^k naming a face of the unit k-cube.
//
// Entries equal to +-1 fix the corresponding coordinate at 1 or 0; zero
// entries leave it free. The zero vector names the whole cube and vectors
// with full support name its vertices.
class FaceVector {
 public:
  FaceVector() = default;
  explicit FaceVector(std::vector<int> entries);

  static FaceVector zero(int k);
  // Parses "(a1,...,ak)"; whitespace is tolerated.
  static FaceVector parse(std::string_view token);
  // Inverse of index().
  static FaceVector from_index(int k, std::size_t index);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  // |alpha|: number of nonzero entries.
  int weight() const;
  bool is_zero() const { return weight() == 0; }
  // Zero-set J and support J'.
  std::vector<int> free_coordinates() const;
  std::vector<int> support() const;

  // Base-3 rank with digit map -1->0, 0->1, 1->2, first entry most significant.
  // Coincides with the canonical lexicographic order.
  std::size_t index() const;

  FaceVector operator-() const;
  // Entrywise max(alpha_i, 0).
  std::vector<int> positive_part() const;

  std::string to_string() const;

  friend bool operator==(const FaceVector&, const FaceVector&) = default;
  friend auto operator<=>(const FaceVector&, const FaceVector&) = default;

 private:
  std::vector<int> entries_;
};

void check_dimension(int k);

std::vector<FaceVector> enumerate_face_vectors(int k);
std::size_t face_count(int k);  // 3^k

// a ⊑ b: b agrees with a on the support of a (so the face P_b lies in P_a).
bool is_subface(const FaceVector& a, const FaceVector& b);
// Disjoint supports.
bool is_complementary(const FaceVector& a, const FaceVector& b);
std::vector<FaceVector> complementary_set(const FaceVector& a);
// Entrywise sum; requires complementary arguments.
FaceVector add_complementary(const FaceVector& a, const FaceVector& b);
// All strict superfaces b of a, i.e. a + g for nonzero g complementary to a.
std::vector<FaceVector> boundary_face_vectors(const FaceVector& a);

}  // namespace fcube
