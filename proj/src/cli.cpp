#include "fcube/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "fcube/digit_set.hpp"
#include "fcube/errors.hpp"
#include "fcube/intersection_graph.hpp"
#include "fcube/oracle.hpp"
#include "fcube/parallel.hpp"
#include "fcube/reports.hpp"

namespace fcube::cli {

namespace {

struct Settings {
  std::string input;
  std::string out;
  std::string alpha = "all";
  std::uint64_t max_cells = kDefaultMaxCells;
  std::int64_t max_image = io::kDefaultMaxImage;
  int which = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write output file '" + path + "'");
  file << data;
}

io::ProblemFile load(const Settings& s) {
  if (s.input.empty()) throw InputError("--input is required");
  return io::parse_problem(read_file(s.input));
}

const DigitSet& pick(const io::ProblemFile& p, int which) {
  if (which != 1 && which != 2) throw InputError("--which must be 1 or 2");
  return which == 1 ? p.first : p.second;
}

std::vector<FaceVector> selected_faces(const std::string& alpha, int k, bool skip_zero) {
  if (alpha != "all") {
    auto a = FaceVector::parse(alpha);
    if (a.dimension() != k) throw InputError("--alpha " + alpha + " does not match k=" + std::to_string(k));
    return {a};
  }
  std::vector<FaceVector> out;
  for (auto& a : enumerate_face_vectors(k))
    if (!skip_zero || !a.is_zero()) out.push_back(std::move(a));
  return out;
}

FaceVector single_face(const std::string& alpha, int k) {
  if (alpha == "all") throw InputError("this command needs a specific --alpha");
  return selected_faces(alpha, k, false).front();
}

// Checks the graph's conclusions against the cell-cover oracle. Returns the
// list of disagreements, one line each.
std::vector<std::string> cross_check(const IntersectionProblem& problem, const AnalysisReport& report, int pmax,
                                     std::uint64_t max_cells) {
  std::vector<std::string> diff;
  const oracle::OracleOptions opts{max_cells, Execution::parallel};
  for (const auto& a : report.faces) {
    const auto cert = oracle::certify_empty(problem, a.alpha, pmax, opts);
    if (a.alive && cert.certified()) {
      diff.push_back("F_" + a.alpha.to_string() + ": graph says nonempty, oracle certified empty at p=" +
                     std::to_string(*cert.depth));
    }
    if (a.points) {
      for (const auto& x : *a.points) {
        if (!oracle::verify_point(problem, a.alpha, x)) {
          diff.push_back("F_" + a.alpha.to_string() + ": point " + point_to_string(x) + " rejected by oracle");
        }
      }
    }
  }
  return diff;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of fractal cubes given by digit sets and of their pairwise intersections", "fcube"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--max-cells", s.max_cells, "Guard on refined cell counts")->capture_default_str();
  app.add_option("--max-image", s.max_image, "Guard on raster side length")->capture_default_str();

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("--input,-i", s.input, "Problem file (JSON or text)")->required(); };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out,-o", s.out, "Output file (default stdout)"); };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Per-face dimension, measure and cardinality report");
  std::string report_path;
  bool verify = false;
  int verify_pmax = 4;
  add_input(analyze);
  add_out(analyze);
  analyze->add_option("--report", report_path, "Write the JSON report here");
  analyze->add_option("--alpha", s.alpha, "Face vector '(a1,...,ak)' or 'all'");
  analyze->add_flag("--verify", verify, "Cross-check every conclusion with the brute-force oracle");
  analyze->add_option("--pmax", verify_pmax, "Oracle depth used by --verify")->check(CLI::Range(1, 16));

  // graph
  auto* graph = app.add_subcommand("graph", "Export the structure graph as DOT");
  std::string dot_path;
  add_input(graph);
  graph->add_option("--dot", dot_path, "DOT output file (default stdout)");

  // render
  auto* render = app.add_subcommand("render", "Render the depth-p cover as an ASCII PPM (k = 2)");
  int depth = 1;
  std::string mode = "single";
  add_input(render);
  add_out(render);
  render->add_option("--depth,-p", depth, "Refinement depth")->required();
  render->add_option("--mode", mode, "single or overlay")->check(CLI::IsMember({"single", "overlay"}));
  render->add_option("--which", s.which, "Digit set for single mode (1 or 2)");

  // refine
  auto* refine_cmd = app.add_subcommand("refine", "p-th refinement of a digit set");
  int p = 1;
  std::string format = "json";
  add_input(refine_cmd);
  add_out(refine_cmd);
  refine_cmd->add_option("--p,-p", p, "Refinement depth")->required();
  refine_cmd->add_option("--which", s.which, "Digit set (1 or 2)");
  refine_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // section
  auto* section = app.add_subcommand("section", "Digit set of the section through a projected digit");
  std::string digit_token;
  add_input(section);
  add_out(section);
  section->add_option("--alpha", s.alpha, "Face vector selecting the projected coordinates")->required();
  section->add_option("--digit", digit_token, "Projected digit '(d1,...)' on the support of alpha")->required();
  section->add_option("--which", s.which, "Digit set (1 or 2)");

  // project
  auto* project = app.add_subcommand("project", "Projection onto the support coordinates of alpha");
  add_input(project);
  add_out(project);
  project->add_option("--alpha", s.alpha, "Face vector")->required();
  project->add_option("--which", s.which, "Digit set (1 or 2)");

  // faces
  auto* faces = app.add_subcommand("faces", "Face digit sets of a cube");
  bool normalize = false;
  add_input(faces);
  add_out(faces);
  faces->add_option("--alpha", s.alpha, "Face vector or 'all' (nonzero faces)");
  faces->add_option("--which", s.which, "Digit set (1 or 2)");
  faces->add_flag("--normalize", normalize, "Translate to the origin and drop fixed coordinates");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks on cell covers");
  oracle_cmd->require_subcommand(1);
  auto* o_empty = oracle_cmd->add_subcommand("empty", "Try to certify F_alpha empty");
  int pmax = 6;
  add_input(o_empty);
  add_out(o_empty);
  o_empty->add_option("--alpha", s.alpha, "Face vector or 'all'");
  o_empty->add_option("--pmax", pmax, "Maximal depth")->check(CLI::Range(1, 32));

  auto* o_box = oracle_cmd->add_subcommand("boxdim", "Box-counting dimension estimate of F_alpha");
  int plo = 4, phi = 8;
  add_input(o_box);
  add_out(o_box);
  o_box->add_option("--alpha", s.alpha, "Face vector")->required();
  o_box->add_option("--plo", plo, "Lowest depth");
  o_box->add_option("--phi", phi, "Highest depth");

  auto* o_member = oracle_cmd->add_subcommand("member", "Exact membership of a rational point in K");
  std::string point_token;
  add_input(o_member);
  add_out(o_member);
  o_member->add_option("--point", point_token, "Point '(p1/q1,...)'")->required();
  o_member->add_option("--which", s.which, "Digit set (1 or 2)");

  auto* o_verify = oracle_cmd->add_subcommand("verify", "Exact membership of a rational point in F_alpha");
  add_input(o_verify);
  add_out(o_verify);
  o_verify->add_option("--alpha", s.alpha, "Face vector")->required();
  o_verify->add_option("--point", point_token, "Point '(p1/q1,...)'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (auto threads = thread_limit_from_env()) set_thread_limit(*threads);
    const auto file = load(s);
    const int k = file.first.dimension();

    if (analyze->parsed()) {
      AnalysisReport report = file.self_mode ? self_intersection_report(file.first) : fcube::analyze(file.problem());
      if (s.alpha != "all") {
        const auto only = single_face(s.alpha, k);
        std::erase_if(report.faces, [&](const FaceAnalysis& a) { return a.alpha != only; });
      }
      std::string text = io::report_to_text(report);
      if (verify) {
        const auto diff = cross_check(file.problem(), report, verify_pmax, s.max_cells);
        if (!diff.empty()) {
          err << "graph/oracle disagreement:\n";
          for (const auto& line : diff) err << "  " << line << "\n";
          return kVerificationFailed;
        }
        text += "# verified against cell covers up to p=" + std::to_string(verify_pmax) + "\n";
      }
      if (!report_path.empty()) write_output(report_path, io::report_to_json(report), out);
      write_output(s.out, text, out);
    } else if (graph->parsed()) {
      write_output(dot_path, io::export_dot(StructureGraph::build(file.problem())), out);
    } else if (render->parsed()) {
      const auto image = mode == "overlay" ? io::render_overlay(file.problem(), depth, s.max_image)
                                           : io::render_raster(pick(file, s.which), depth, s.max_image);
      write_output(s.out, image, out);
    } else if (refine_cmd->parsed()) {
      const auto refined = refine(pick(file, s.which), p, s.max_cells);
      write_output(s.out, format == "json" ? io::digit_set_to_json(refined) : io::digit_set_to_text(refined), out);
    } else if (section->parsed()) {
      const auto& d = pick(file, s.which);
      const auto alpha = single_face(s.alpha, k);
      write_output(s.out, io::digit_set_to_json(section_digits(d, alpha, parse_digit(digit_token))), out);
    } else if (project->parsed()) {
      const auto& d = pick(file, s.which);
      write_output(s.out, io::digit_set_to_json(project_digits(d, single_face(s.alpha, k))), out);
    } else if (faces->parsed()) {
      const auto& d = pick(file, s.which);
      std::string text;
      for (const auto& alpha : selected_faces(s.alpha, k, true)) {
        const auto face = face_digits(d, alpha);
        text += alpha.to_string() + " ";
        if (face.empty()) {
          text += "empty\n";
        } else if (normalize && alpha.weight() < k) {
          text += io::digit_set_to_json(normalize_face(face, alpha));
        } else {
          text += io::digit_set_to_json(face);
        }
      }
      write_output(s.out, text, out);
    } else if (o_empty->parsed()) {
      std::string text;
      const auto problem = file.problem();
      for (const auto& alpha : selected_faces(s.alpha, k, false)) {
        const auto cert = oracle::certify_empty(problem, alpha, pmax, {s.max_cells, Execution::parallel});
        if (s.alpha == "all") text += alpha.to_string() + " ";
        text += cert.certified() ? "certified p=" + std::to_string(*cert.depth) + "\n"
                                 : "unknown up to p=" + std::to_string(pmax) + "\n";
      }
      write_output(s.out, text, out);
    } else if (o_box->parsed()) {
      const auto alpha = single_face(s.alpha, k);
      const auto fit = oracle::box_count_fit(file.problem(), alpha, plo, phi, {s.max_cells, Execution::parallel});
      std::ostringstream text;
      text << "p N_p\n";
      for (int q = fit.lo; q <= fit.hi; ++q) text << q << ' ' << fit.counts[static_cast<std::size_t>(q - fit.lo)] << '\n';
      text << "slope " << std::fixed << std::setprecision(6) << fit.slope << '\n';
      write_output(s.out, text.str(), out);
    } else if (o_member->parsed()) {
      const bool member = oracle::exact_member(pick(file, s.which), parse_point(point_token));
      write_output(s.out, member ? "member\n" : "not member\n", out);
    } else if (o_verify->parsed()) {
      const bool ok = oracle::verify_point(file.problem(), single_face(s.alpha, k), parse_point(point_token));
      write_output(s.out, ok ? "member\n" : "not member\n", out);
    }
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace fcube::cli
