#include "fcube/face_lattice.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>

#include "fcube/errors.hpp"

namespace fcube {

void check_dimension(int k) {
  if (k < 1 || k > kMaxDimension) {
    throw InputError("dimension k=" + std::to_string(k) + " outside supported range [1," +
                     std::to_string(kMaxDimension) + "]");
  }
}

FaceVector::FaceVector(std::vector<int> entries) : entries_(std::move(entries)) {
  check_dimension(dimension());
  for (int e : entries_) {
    if (e < -1 || e > 1) throw InputError("face vector entry " + std::to_string(e) + " not in {-1,0,1}");
  }
}

FaceVector FaceVector::zero(int k) {
  check_dimension(k);
  return FaceVector(std::vector<int>(static_cast<std::size_t>(k), 0));
}

FaceVector FaceVector::parse(std::string_view token) {
  std::string s;
  for (char c : token) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
    throw InputError("face vector '" + std::string(token) + "' must look like (a1,...,ak)");
  }
  std::vector<int> entries;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (true) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("face vector '" + std::string(token) + "': bad entry '" + std::string(item) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return FaceVector(std::move(entries));
}

FaceVector FaceVector::from_index(int k, std::size_t index) {
  check_dimension(k);
  std::vector<int> entries(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    entries[static_cast<std::size_t>(i)] = static_cast<int>(index % 3) - 1;
    index /= 3;
  }
  if (index != 0) throw InputError("face index out of range");
  return FaceVector(std::move(entries));
}

int FaceVector::weight() const {
  int w = 0;
  for (int e : entries_) w += (e != 0);
  return w;
}

std::vector<int> FaceVector::free_coordinates() const {
  std::vector<int> out;
  for (int i = 0; i < dimension(); ++i)
    if (entries_[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

std::vector<int> FaceVector::support() const {
  std::vector<int> out;
  for (int i = 0; i < dimension(); ++i)
    if (entries_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  return out;
}

std::size_t FaceVector::index() const {
  std::size_t idx = 0;
  for (int e : entries_) idx = idx * 3 + static_cast<std::size_t>(e + 1);
  return idx;
}

FaceVector FaceVector::operator-() const {
  FaceVector out = *this;
  for (int& e : out.entries_) e = -e;
  return out;
}

std::vector<int> FaceVector::positive_part() const {
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i] > 0 ? entries_[i] : 0;
  return out;
}

std::string FaceVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

std::size_t face_count(int k) {
  check_dimension(k);
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) c *= 3;
  return c;
}

std::vector<FaceVector> enumerate_face_vectors(int k) {
  const std::size_t count = face_count(k);
  std::vector<FaceVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(FaceVector::from_index(k, i));
  return out;
}

namespace {
void require_same_dimension(const FaceVector& a, const FaceVector& b) {
  if (a.dimension() != b.dimension()) {
    throw InputError("face vectors " + a.to_string() + " and " + b.to_string() + " differ in dimension");
  }
}
}  // namespace

bool is_subface(const FaceVector& a, const FaceVector& b) {
  require_same_dimension(a, b);
  for (int i = 0; i < a.dimension(); ++i) {
    if (a[i] != 0 && b[i] != a[i]) return false;
  }
  return true;
}

bool is_complementary(const FaceVector& a, const FaceVector& b) {
  require_same_dimension(a, b);
  for (int i = 0; i < a.dimension(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::vector<FaceVector> complementary_set(const FaceVector& a) {
  std::vector<FaceVector> out;
  for (auto& b : enumerate_face_vectors(a.dimension()))
    if (is_complementary(a, b)) out.push_back(std::move(b));
  return out;
}

FaceVector add_complementary(const FaceVector& a, const FaceVector& b) {
  if (!is_complementary(a, b)) {
    throw InputError(a.to_string() + " and " + b.to_string() + " are not complementary");
  }
  std::vector<int> sum(static_cast<std::size_t>(a.dimension()));
  for (int i = 0; i < a.dimension(); ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
  return FaceVector(std::move(sum));
}

std::vector<FaceVector> boundary_face_vectors(const FaceVector& a) {
  std::vector<FaceVector> out;
  for (const auto& g : complementary_set(a)) {
    if (!g.is_zero()) out.push_back(add_complementary(a, g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fcube
