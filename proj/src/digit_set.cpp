#include "fcube/digit_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "fcube/errors.hpp"

namespace fcube {

std::string digit_to_string(const Digit& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

Digit parse_digit(std::string_view token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::string_view body = s;
  if (!body.empty() && body.front() == '(') {
    if (body.size() < 3 || body.back() != ')') throw InputError("digit '" + std::string(token) + "' must look like (d1,...,dk)");
    body = body.substr(1, body.size() - 2);
  }
  Digit out;
  while (true) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    Coord value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("digit '" + std::string(token) + "': bad coordinate '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

void check_order(Coord n) {
  if (n < 2) throw InputError("order n=" + std::to_string(n) + " must be at least 2");
}

Coord checked_power(Coord n, int p) {
  Coord r = 1;
  for (int i = 0; i < p; ++i) {
    if (r > std::numeric_limits<Coord>::max() / n) {
      throw GuardError(std::to_string(n) + "^" + std::to_string(p) + " overflows 64-bit coordinates");
    }
    r *= n;
  }
  return r;
}

DigitSet::DigitSet(int k, Coord n, std::vector<Digit> digits) : k_(k), n_(n), digits_(std::move(digits)) {}

DigitSet DigitSet::make_possibly_empty(int k, Coord n, std::vector<Digit> digits) {
  check_dimension(k);
  check_order(n);
  for (const auto& d : digits) {
    if (static_cast<int>(d.size()) != k) {
      throw InputError("digit " + digit_to_string(d) + " has " + std::to_string(d.size()) +
                       " coordinates, expected k=" + std::to_string(k));
    }
    for (Coord c : d) {
      if (c < 0 || c >= n) {
        throw InputError("digit " + digit_to_string(d) + " out of range [0," + std::to_string(n - 1) +
                         "] for n=" + std::to_string(n));
      }
    }
  }
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  return DigitSet(k, n, std::move(digits));
}

DigitSet DigitSet::make(int k, Coord n, std::vector<Digit> digits) {
  if (digits.empty()) throw InputError("digit set must contain at least one digit");
  return make_possibly_empty(k, n, std::move(digits));
}

DigitSet DigitSet::full(int k, Coord n) {
  check_dimension(k);
  check_order(n);
  const Coord total = checked_power(n, k);
  if (static_cast<std::uint64_t>(total) > kDefaultMaxCells) throw GuardError("full digit set too large");
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(total));
  for (Coord idx = 0; idx < total; ++idx) {
    Digit d(static_cast<std::size_t>(k));
    Coord rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = rest % n;
      rest /= n;
    }
    digits.push_back(std::move(d));
  }
  return DigitSet(k, n, std::move(digits));
}

bool DigitSet::contains(const Digit& d) const { return std::binary_search(digits_.begin(), digits_.end(), d); }

namespace {

void require_dimension(const DigitSet& d, const FaceVector& alpha) {
  if (d.dimension() != alpha.dimension()) {
    throw InputError("face vector " + alpha.to_string() + " does not match digit set dimension " +
                     std::to_string(d.dimension()));
  }
}

}  // namespace

DigitSet face_digits(const DigitSet& d, const FaceVector& alpha) {
  require_dimension(d, alpha);
  const Coord top = d.order() - 1;
  std::vector<Digit> out;
  for (const auto& digit : d.digits()) {
    bool on_face = true;
    for (int i = 0; i < alpha.dimension() && on_face; ++i) {
      const Coord c = digit[static_cast<std::size_t>(i)];
      if (alpha[i] == 1) on_face = c == top;
      else if (alpha[i] == -1) on_face = c == 0;
    }
    if (on_face) out.push_back(digit);
  }
  return DigitSet::make_possibly_empty(d.dimension(), d.order(), std::move(out));
}

DigitSet normalize_face(const DigitSet& face, const FaceVector& alpha) {
  require_dimension(face, alpha);
  const auto free = alpha.free_coordinates();
  if (free.empty()) throw InputError("vertex " + alpha.to_string() + " has no free coordinates to keep");
  const Coord top = face.order() - 1;
  const auto shift = alpha.positive_part();
  std::vector<Digit> out;
  for (const auto& digit : face.digits()) {
    for (int i : alpha.support()) {
      if (digit[static_cast<std::size_t>(i)] != top * shift[static_cast<std::size_t>(i)]) {
        throw InputError("digit " + digit_to_string(digit) + " is not on face " + alpha.to_string());
      }
    }
    Digit reduced;
    for (int i : free) reduced.push_back(digit[static_cast<std::size_t>(i)]);
    out.push_back(std::move(reduced));
  }
  return DigitSet::make_possibly_empty(static_cast<int>(free.size()), face.order(), std::move(out));
}

DigitSet project_digits(const DigitSet& d, const FaceVector& alpha) {
  require_dimension(d, alpha);
  const auto keep = alpha.support();
  if (keep.empty()) throw InputError("projection along the zero face vector keeps no coordinates");
  std::vector<Digit> out;
  out.reserve(d.size());
  for (const auto& digit : d.digits()) {
    Digit reduced;
    for (int i : keep) reduced.push_back(digit[static_cast<std::size_t>(i)]);
    out.push_back(std::move(reduced));
  }
  return DigitSet::make_possibly_empty(static_cast<int>(keep.size()), d.order(), std::move(out));
}

DigitSet section_digits(const DigitSet& d, const FaceVector& alpha, const Digit& projected) {
  require_dimension(d, alpha);
  const auto keep = alpha.support();
  if (keep.empty()) throw InputError("section along the zero face vector is undefined");
  if (projected.size() != keep.size()) {
    throw InputError("projected digit " + digit_to_string(projected) + " must have " +
                     std::to_string(keep.size()) + " coordinates");
  }
  std::vector<Digit> out;
  for (const auto& digit : d.digits()) {
    bool match = true;
    for (std::size_t j = 0; j < keep.size() && match; ++j)
      match = digit[static_cast<std::size_t>(keep[j])] == projected[j];
    if (match) out.push_back(digit);
  }
  if (out.empty()) {
    throw InputError("projected digit " + digit_to_string(projected) + " is not attained by any digit");
  }
  return DigitSet::make(d.dimension(), d.order(), std::move(out));
}

DigitSet refine(const DigitSet& d, int p, std::uint64_t max_cells) {
  if (p < 1) throw InputError("refinement depth p=" + std::to_string(p) + " must be at least 1");
  const Coord order = checked_power(d.order(), p);
  std::uint64_t count = 1;
  for (int i = 0; i < p; ++i) {
    count *= d.size();
    if (count > max_cells) {
      throw GuardError("refinement " + std::to_string(d.size()) + "^" + std::to_string(p) +
                       " exceeds cell guard " + std::to_string(max_cells));
    }
  }
  std::vector<Digit> current = d.digits();
  for (int level = 1; level < p; ++level) {
    std::vector<Digit> next;
    next.reserve(current.size() * d.size());
    for (const auto& prefix : current) {
      for (const auto& tail : d.digits()) {
        Digit c(prefix.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = prefix[i] * d.order() + tail[i];
        next.push_back(std::move(c));
      }
    }
    current = std::move(next);
  }
  return DigitSet::make_possibly_empty(d.dimension(), order, std::move(current));
}

std::map<FaceVector, DigitSet> boundary_digits(const DigitSet& d) {
  std::map<FaceVector, DigitSet> out;
  for (const auto& alpha : enumerate_face_vectors(d.dimension())) {
    if (!alpha.is_zero()) out.emplace(alpha, face_digits(d, alpha));
  }
  return out;
}

}  // namespace fcube
