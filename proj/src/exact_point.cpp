#include "fcube/exact_point.hpp"

#include <cctype>
#include <charconv>

#include "fcube/errors.hpp"

namespace fcube {

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token, token));
  const auto num = parse_integer(token.substr(0, slash), token);
  const auto den = parse_integer(token.substr(slash + 1), token);
  if (den == 0) throw InputError("zero denominator in '" + std::string(token) + "'");
  return Rational(num, den);
}

std::string point_to_string(const ExactPoint& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += rational_to_string(x[i]);
  }
  return out + ")";
}

ExactPoint parse_point(std::string_view token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
    throw InputError("point '" + std::string(token) + "' must look like (p1/q1,...,pk/qk)");
  }
  ExactPoint out;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    out.push_back(parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

ExactPoint fixed_point(const Digit& d, Coord n) {
  ExactPoint out;
  out.reserve(d.size());
  for (Coord c : d) out.emplace_back(c, n - 1);
  return out;
}

ExactPoint apply_map(const ExactPoint& x, const Digit& d, Coord n) {
  ExactPoint out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + d[i]) / n;
  return out;
}

}  // namespace fcube
