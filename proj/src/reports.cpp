#include "fcube/reports.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "fcube/errors.hpp"

namespace fcube::io {

using Json = nlohmann::ordered_json;

namespace {

std::int64_t json_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

DigitSet digit_set_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object with k, n, digits");
  for (const char* key : {"k", "n", "digits"}) {
    if (!j.contains(key)) throw InputError(path + ": missing field '" + key + "'");
  }
  const auto k = json_integer(j["k"], path + ".k");
  const auto n = json_integer(j["n"], path + ".n");
  if (k < 1 || k > kMaxDimension) throw InputError(path + ".k: " + std::to_string(k) + " outside [1,8]");
  if (n < 2) throw InputError(path + ".n: order must be at least 2");
  const Json& list = j["digits"];
  if (!list.is_array()) throw InputError(path + ".digits: expected an array");
  std::vector<Digit> digits;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = path + ".digits[" + std::to_string(i) + "]";
    const Json& item = list[i];
    // k = 1 digits may be written as bare integers.
    if (k == 1 && item.is_number_integer()) {
      digits.push_back({item.get<Coord>()});
    } else {
      if (!item.is_array()) throw InputError(at + ": expected an array of " + std::to_string(k) + " integers");
      if (static_cast<std::int64_t>(item.size()) != k) {
        throw InputError(at + ": expected " + std::to_string(k) + " coordinates, got " + std::to_string(item.size()));
      }
      Digit d;
      for (std::size_t c = 0; c < item.size(); ++c) d.push_back(json_integer(item[c], at + "[" + std::to_string(c) + "]"));
      digits.push_back(std::move(d));
    }
    for (Coord c : digits.back()) {
      if (c < 0 || c >= n) {
        throw InputError(at + ": digit " + digit_to_string(digits.back()) + " out of range [0," +
                         std::to_string(n - 1) + "] for n=" + std::to_string(n));
      }
    }
  }
  if (digits.empty()) throw InputError(path + ".digits: digit set must not be empty");
  return DigitSet::make(static_cast<int>(k), n, std::move(digits));
}

DigitSet digit_set_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::int64_t k = 0, n = 0;
  std::vector<Digit> digits;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::int64_t> values;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      }
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (values.size() != 2) throw InputError(where + "expected header 'k n'");
      k = values[0];
      n = values[1];
      if (k < 1 || k > kMaxDimension) throw InputError(where + "k=" + std::to_string(k) + " outside [1,8]");
      if (n < 2) throw InputError(where + "order must be at least 2");
      have_header = true;
      continue;
    }
    if (static_cast<std::int64_t>(values.size()) != k) {
      throw InputError(where + "expected " + std::to_string(k) + " coordinates, got " + std::to_string(values.size()));
    }
    for (auto c : values) {
      if (c < 0 || c >= n) {
        throw InputError(where + "digit " + digit_to_string(values) + " out of range [0," + std::to_string(n - 1) +
                         "] for n=" + std::to_string(n));
      }
    }
    digits.push_back(std::move(values));
  }
  if (!have_header) throw InputError("missing 'k n' header line");
  if (digits.empty()) throw InputError("digit set must not be empty");
  return DigitSet::make(static_cast<int>(k), n, std::move(digits));
}

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json digit_set_json(const DigitSet& d) {
  Json j;
  j["k"] = d.dimension();
  j["n"] = d.order();
  j["digits"] = Json::array();
  for (const auto& digit : d.digits()) j["digits"].push_back(digit);
  return j;
}

}  // namespace

DigitSet parse_digit_set(std::string_view text) {
  if (looks_like_json(text)) return digit_set_from_json(parse_json(text), "$");
  return digit_set_from_text(text);
}

ProblemFile parse_problem(std::string_view text) {
  if (!looks_like_json(text)) {
    auto d = digit_set_from_text(text);
    return {true, d, d};
  }
  const Json j = parse_json(text);
  if (j.is_object() && (j.contains("d1") || j.contains("d2"))) {
    if (!j.contains("d1") || !j.contains("d2")) throw InputError("$: pair files need both 'd1' and 'd2'");
    auto d1 = digit_set_from_json(j["d1"], "$.d1");
    auto d2 = digit_set_from_json(j["d2"], "$.d2");
    if (d1.dimension() != d2.dimension()) {
      throw InputError("$.d2.k: " + std::to_string(d2.dimension()) + " does not match $.d1.k " +
                       std::to_string(d1.dimension()));
    }
    if (d1.order() != d2.order()) {
      throw InputError("$.d2.n: " + std::to_string(d2.order()) + " does not match $.d1.n " +
                       std::to_string(d1.order()));
    }
    return {false, std::move(d1), std::move(d2)};
  }
  auto d = digit_set_from_json(j, "$");
  return {true, d, d};
}

std::string digit_set_to_json(const DigitSet& d) { return digit_set_json(d).dump() + "\n"; }

std::string digit_set_to_text(const DigitSet& d) {
  std::string out = std::to_string(d.dimension()) + " " + std::to_string(d.order()) + "\n";
  for (const auto& digit : d.digits()) {
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(digit[i]);
    }
    out += '\n';
  }
  return out;
}

std::string problem_to_json(const ProblemFile& p) {
  if (p.self_mode) return digit_set_to_json(p.first);
  Json j;
  j["d1"] = digit_set_json(p.first);
  j["d2"] = digit_set_json(p.second);
  return j.dump() + "\n";
}

std::string export_dot(const StructureGraph& graph) {
  auto node = [](const FaceVector& a) { return "\"F_" + a.to_string() + "\""; };
  std::string out = "digraph structure_graph {\n";
  for (const auto& a : graph.alive_faces()) out += "  " + node(a) + ";\n";
  for (const auto& e : graph.edges()) {
    out += "  " + node(e.from) + " -> " + node(e.to) + " [label=\"#G=" + std::to_string(e.label.size()) + "\"];\n";
  }
  for (const auto& a : graph.loops()) {
    out += "  " + node(a) + " -> " + node(a) + " [label=\"#G=" + std::to_string(graph.loop_set(a).size()) +
           "\", style=dashed, color=red];\n";
  }
  out += "}\n";
  return out;
}

namespace {

// Bitmap of the depth-p cover, indexed [y * side + x].
std::vector<char> cover_bitmap(const DigitSet& d, int depth, std::int64_t max_image, Coord& side) {
  if (d.dimension() != 2) throw InputError("rasters need k = 2, got k=" + std::to_string(d.dimension()));
  if (depth < 1) throw InputError("raster depth must be at least 1");
  side = checked_power(d.order(), depth);
  if (side > max_image) {
    throw GuardError("image side " + std::to_string(side) + " exceeds --max-image " + std::to_string(max_image));
  }
  const auto cells = refine(d, depth, static_cast<std::uint64_t>(side * side));
  std::vector<char> bits(static_cast<std::size_t>(side * side), 0);
  for (const auto& c : cells.digits()) bits[static_cast<std::size_t>(c[1] * side + c[0])] = 1;
  return bits;
}

struct Rgb {
  int r, g, b;
};

template <typename PixelFn>
std::string write_ppm(Coord side, PixelFn pixel) {
  std::string out = "P3\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  for (Coord row = 0; row < side; ++row) {
    const Coord y = side - 1 - row;
    for (Coord x = 0; x < side; ++x) {
      const Rgb c = pixel(x, y);
      if (x) out += ' ';
      out += std::to_string(c.r) + ' ' + std::to_string(c.g) + ' ' + std::to_string(c.b);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_raster(const DigitSet& d, int depth, std::int64_t max_image) {
  Coord side = 0;
  const auto bits = cover_bitmap(d, depth, max_image, side);
  return write_ppm(side, [&](Coord x, Coord y) {
    return bits[static_cast<std::size_t>(y * side + x)] ? Rgb{0, 0, 0} : Rgb{255, 255, 255};
  });
}

std::string render_overlay(const IntersectionProblem& problem, int depth, std::int64_t max_image) {
  Coord side = 0;
  const auto a = cover_bitmap(problem.first(), depth, max_image, side);
  const auto b = cover_bitmap(problem.second(), depth, max_image, side);
  return write_ppm(side, [&](Coord x, Coord y) {
    const auto i = static_cast<std::size_t>(y * side + x);
    if (a[i] && b[i]) return Rgb{128, 0, 128};
    if (a[i]) return Rgb{255, 0, 0};
    if (b[i]) return Rgb{0, 0, 255};
    return Rgb{255, 255, 255};
  });
}

namespace {

Json face_json(const FaceAnalysis& a) {
  Json j;
  j["alpha"] = a.alpha.to_string();
  j["alive"] = a.alive;
  j["nu"] = a.nu;
  j["dimension"] = a.dimension ? Json(*a.dimension) : Json(nullptr);
  j["measure_finite"] = a.measure_finite ? Json(*a.measure_finite) : Json(nullptr);
  Json card;
  card["class"] = a.cardinality.name();
  card["count"] = a.cardinality.kind == CardinalityClass::Kind::finite ? Json(a.cardinality.count) : Json(nullptr);
  j["cardinality"] = card;
  j["sufficient_condition"] = a.alive ? Json(to_string(a.condition)) : Json(nullptr);
  if (a.points) {
    Json pts = Json::array();
    for (const auto& x : *a.points) {
      Json p = Json::array();
      for (const auto& r : x) p.push_back(rational_to_string(r));
      pts.push_back(p);
    }
    j["points"] = pts;
  } else {
    j["points"] = nullptr;
  }
  return j;
}

std::string format_dimension(double v) {
  if (std::abs(v - std::round(v)) < 1e-12) return std::to_string(static_cast<long long>(std::llround(v)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  Json j;
  j["mode"] = report.self_mode ? "self" : "pair";
  Json problem;
  if (report.self_mode) {
    problem["d"] = digit_set_json(report.first);
  } else {
    problem["d1"] = digit_set_json(report.first);
    problem["d2"] = digit_set_json(report.second);
  }
  j["problem"] = problem;
  j["graph"] = {{"vertices", report.graph.vertices}, {"edges", report.graph.edges}, {"loops", report.graph.loops}};
  j["faces"] = Json::array();
  for (const auto& a : report.faces) j["faces"].push_back(face_json(a));
  if (report.self) {
    j["self_intersection"] = {{"one_point_property", report.self->one_point},
                              {"finite_intersection_property", report.self->finite},
                              {"graph_one_point_criterion", report.self->graph_one_point},
                              {"graph_finite_criterion", report.self->graph_finite}};
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "# " << (report.self_mode ? "self-intersection" : "intersection") << ": k=" << report.first.dimension()
      << " n=" << report.first.order() << " #D1=" << report.first.size() << " #D2=" << report.second.size() << "\n";
  out << "# graph: vertices=" << report.graph.vertices << " edges=" << report.graph.edges
      << " loops=" << report.graph.loops << "\n";
  for (const auto& a : report.faces) {
    out << a.alpha.to_string();
    if (!a.alive) {
      out << " empty\n";
      continue;
    }
    out << " alive ν=" << a.nu << " dim=" << format_dimension(*a.dimension) << ' '
        << (*a.measure_finite ? "finite" : "infinite") << " card=" << a.cardinality.to_string() << "\n";
  }
  if (report.self) {
    out << "one-point: " << yes_no(report.self->one_point)
        << ", finite-intersection: " << yes_no(report.self->finite) << "\n";
    out << "graph criteria: one-point " << yes_no(report.self->graph_one_point) << ", finite "
        << yes_no(report.self->graph_finite) << "\n";
  }
  return out.str();
}

}  // namespace fcube::io
