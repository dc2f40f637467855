#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcube/face_lattice.hpp"

namespace fcube {

using Coord = std::int64_t;
using Digit = std::vector<Coord>;

std::string digit_to_string(const Digit& d);
// "(d1,...,dk)"; a bare integer is accepted for k = 1.
Digit parse_digit(std::string_view token);

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;

// Digit set D of a fractal k-cube of order n: the attractor K of the maps
// x -> (x + d) / n, d in D. Digits are kept sorted and unique.
//
// A DigitSet built through make() is never empty. Face, section and
// intersection operations may legitimately produce an empty set; those
// results are flagged by empty().
class DigitSet {
 public:
  DigitSet() = default;

  // Canonicalizes (sorts, deduplicates) and validates. Rejects empty input.
  static DigitSet make(int k, Coord n, std::vector<Digit> digits);
  // Like make() but accepts an empty list. Digits must already be valid.
  static DigitSet make_possibly_empty(int k, Coord n, std::vector<Digit> digits);
  // {0,...,n-1}^k
  static DigitSet full(int k, Coord n);

  int dimension() const { return k_; }
  Coord order() const { return n_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  const std::vector<Digit>& digits() const { return digits_; }
  bool contains(const Digit& d) const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  DigitSet(int k, Coord n, std::vector<Digit> digits);

  int k_ = 0;
  Coord n_ = 0;
  std::vector<Digit> digits_;
};

void check_order(Coord n);

// D_alpha = { d in D : d_i = n-1 where alpha_i = 1, d_i = 0 where alpha_i = -1 }.
DigitSet face_digits(const DigitSet& d, const FaceVector& alpha);

// Translates a face digit set by -(n-1) alpha^0 and drops the support
// coordinates, giving the digit set of the face as a (k-|alpha|)-cube.
// For a vertex (full support) the result would be 0-dimensional, which is
// rejected.
DigitSet normalize_face(const DigitSet& face, const FaceVector& alpha);

// Keeps the coordinates in the support of alpha.
DigitSet project_digits(const DigitSet& d, const FaceVector& alpha);

// Digits whose restriction to the support of alpha equals `projected`
// (a digit of project_digits(d, alpha), listed in support order).
DigitSet section_digits(const DigitSet& d, const FaceVector& alpha, const Digit& projected);

// p-th refinement: { n^(p-1) d_1 + ... + d_p } as a digit set of order n^p.
DigitSet refine(const DigitSet& d, int p, std::uint64_t max_cells = kDefaultMaxCells);

// Every nonzero alpha mapped to face_digits(d, alpha), empty entries kept.
std::map<FaceVector, DigitSet> boundary_digits(const DigitSet& d);

// Checked n^p.
Coord checked_power(Coord n, int p);

}  // namespace fcube
