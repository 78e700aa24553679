// fibward: command-line front end for the fibward library.
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error.

#include <fibward/fibward.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace fibward;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  int i = 2;
  int n = 1;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::size_t> length;
  std::string output;
  std::string format = "text";
  int scale = 4;
  std::size_t copies = 25;
  int which = 1;
  std::string kind = "curve";
  bool all = false;
  bool grid = false;
  int max_n = 3;
  int max_i = 6;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw std::invalid_argument("format '" + o.format + "' is not available for this command");
}

bool ab_mode(const Options& o) {
  if (o.a.has_value() != o.b.has_value()) throw std::invalid_argument("-a and -b must be given together");
  return o.a.has_value();
}

int cmd_word(const Options& o) {
  require_format(o, {"text", "json"});
  BinaryWord w;
  Json j;
  if (ab_mode(o)) {
    w = ab_fib_word(*o.a, *o.b, o.n);
    j = {{"a", *o.a}, {"b", *o.b}, {"n", o.n}, {"length", w.size()}, {"word", w.str()}};
  } else if (o.length) {
    w = fib_word_prefix(o.i, *o.length);
    j = {{"i", o.i}, {"length", w.size()}, {"word", w.str()}};
  } else {
    w = fib_word(o.n, o.i);
    j = {{"i", o.i}, {"n", o.n}, {"length", w.size()}, {"word", w.str()}};
  }
  emit(o, o.format == "json" ? json_text(j) : w.str() + "\n");
  return exit_ok;
}

int cmd_curve(const Options& o) {
  require_format(o, {"text", "json", "svg"});
  const Curve c = ab_mode(o) ? ab_curve(*o.a, *o.b, o.n) : fractal_curve(o.n, o.i);
  if (o.format == "svg") {
    emit(o, render_curve(c, o.scale).str());
  } else if (o.format == "json") {
    Json j = curve_json(c);
    Json runs = Json::array();
    for (auto s : segments(c)) runs.push_back(s);
    j["segments"] = std::move(runs);
    j["endpoint"] = point_json(c.path.endpoint());
    if (!ab_mode(o)) j["body_symmetry"] = to_string(symmetry_class(curve_body(c)));
    emit(o, json_text(j));
  } else {
    std::ostringstream os;
    os << "steps " << c.source.size() << "\nendpoint " << c.path.endpoint() << "\n";
    if (!ab_mode(o)) os << "body " << to_string(symmetry_class(curve_body(c))) << "\n";
    emit(o, os.str());
  }
  return exit_ok;
}

int cmd_snowflake(const Options& o) {
  require_format(o, {"text", "json", "svg"});
  const PathWord b = boundary_word(o.n, o.i);
  if (!is_boundary_word(b)) {
    std::cerr << "fibward: the order-" << o.n << " word for i=" << o.i << " is not a boundary word\n";
    return exit_failed;
  }
  const Polyomino p = build_polyomino(b);
  if (o.format == "svg") {
    emit(o, render_polyomino(p, o.scale, o.grid).str());
    return exit_ok;
  }
  const auto fs = bn_square_factorizations(b);
  if (o.format == "json") {
    Json j = polyomino_json(p);
    Json factors = Json::array();
    for (const auto& f : fs) factors.push_back(factorization_json(f));
    j["factorizations"] = std::move(factors);
    j["double_square"] = fs.size() == 2;
    emit(o, json_text(j));
  } else {
    std::ostringstream os;
    os << "boundary " << b << "\nperimeter " << p.perimeter() << "\narea " << p.area() << "\n";
    for (const auto& f : fs) os << "factorization at " << f.rotation << ": A=" << f.a << " B=" << f.b << "\n";
    emit(o, os.str());
  }
  return exit_ok;
}

int cmd_metrics(const Options& o) {
  require_format(o, {"text", "json"});
  const MetricsReport r = metrics_report(o.n, o.i);
  if (o.format == "json") {
    emit(o, json_text(metrics_json(r)));
  } else {
    std::ostringstream os;
    os << "perimeter " << r.perimeter << "\narea " << r.area << "\nbounding side " << r.bounding_side << "\nendpoint ("
       << r.endpoint.x << ", " << r.endpoint.y << ")\ndimension estimate " << detail::fixed(r.dimension_estimate, 6) << "\n";
    emit(o, os.str());
  }
  return exit_ok;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.max_n = o.max_n;
  v.max_i = o.max_i;
  v.geometry = o.all;
  const std::vector<CheckResult> rows = run_verification(v);
  for (const auto& r : rows) {
    std::cout << to_string(r.status) << "  " << r.claim << "  [" << r.range << "]";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
  }
  const std::string path = o.output.empty() ? "CONFORMANCE.md" : o.output;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << conformance_markdown(rows, v);
  return all_passed(rows) ? exit_ok : exit_failed;
}

int cmd_tile(const Options& o) {
  require_format(o, {"svg", "json", "text"});
  const Polyomino p = build_polyomino(boundary_word(o.n, o.i));
  const auto certs = certify_all(p);
  detail::require(o.which >= 1 && static_cast<std::size_t>(o.which) <= certs.size(),
                  "--which must name one of the " + std::to_string(certs.size()) + " factorizations");
  const bool all_verified = std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.verified; });
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& c : certs) j.push_back(certificate_json(c));
    emit(o, json_text(j));
  } else if (o.format == "text") {
    std::ostringstream os;
    for (const auto& c : certs)
      os << "rotation " << c.factorization.rotation << " u=" << c.u << " v=" << c.v << " "
         << (c.verified ? "verified" : "failed") << "\n";
    emit(o, os.str());
  } else {
    const auto& cert = certs[static_cast<std::size_t>(o.which - 1)];
    if (!cert.verified) {
      std::cerr << "fibward: tiling certificate " << o.which << " did not verify\n";
      return exit_failed;
    }
    emit(o, render_tiling(p, cert, o.copies, o.scale).str());
  }
  return all_verified ? exit_ok : exit_failed;
}

int cmd_render(const Options& o) {
  std::string svg;
  if (o.kind == "curve") {
    svg = render_curve(fractal_curve(o.n, o.i), o.scale).str();
  } else if (o.kind == "snowflake") {
    svg = render_polyomino(build_polyomino(boundary_word(o.n, o.i)), o.scale, o.grid).str();
  } else if (o.kind == "tiling") {
    const Polyomino p = build_polyomino(boundary_word(o.n, o.i));
    const auto certs = certify_all(p);
    detail::require(o.which >= 1 && static_cast<std::size_t>(o.which) <= certs.size(), "--which is out of range");
    const auto& cert = certs[static_cast<std::size_t>(o.which - 1)];
    if (!cert.verified) {
      std::cerr << "fibward: tiling certificate " << o.which << " did not verify\n";
      return exit_failed;
    }
    svg = render_tiling(p, cert, o.copies, o.scale).str();
  } else {
    throw std::invalid_argument("unknown kind '" + o.kind + "'");
  }
  const std::filesystem::path dir = o.output.empty() ? "." : o.output;
  std::filesystem::create_directories(dir);
  const auto file = dir / svg_file_name(o.kind, o.i, o.n);
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << svg;
  std::cout << file.string() << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fibonacci words, fractal curves and snowflake polyominoes"};
  app.require_subcommand(1);
  Options o;

  const auto family = [&](CLI::App* cmd) {
    cmd->add_option("-i", o.i, "family parameter i (>= 1)");
    cmd->add_option("-n", o.n, "index or order n");
  };

  auto* word = app.add_subcommand("word", "print f_n^[i], a prefix of f^[i], or an (a,b) word");
  family(word);
  word->add_option("-a", o.a, "(a,b) word parameter a");
  word->add_option("-b", o.b, "(a,b) word parameter b");
  word->add_option("-l,--length", o.length, "prefix length of the infinite word");
  word->add_option("--format", o.format, "text or json");
  word->add_option("-o,--output", o.output, "output file (default: stdout)");

  auto* curve = app.add_subcommand("curve", "draw F_n^[i] with the odd-even rule");
  family(curve);
  curve->add_option("-a", o.a, "(a,b) word parameter a");
  curve->add_option("-b", o.b, "(a,b) word parameter b");
  curve->add_option("--format", o.format, "text, json or svg");
  curve->add_option("-o,--output", o.output, "output file (default: stdout)");
  curve->add_option("--scale", o.scale, "pixels per lattice unit");

  auto* snowflake = app.add_subcommand("snowflake", "boundary word, cells and BN-factorizations of a snowflake");
  family(snowflake);
  snowflake->add_option("--format", o.format, "text, json or svg");
  snowflake->add_option("-o,--output", o.output, "output file (default: stdout)");
  snowflake->add_option("--scale", o.scale, "pixels per lattice unit");
  snowflake->add_flag("--grid", o.grid, "draw the unit cells");

  auto* metrics = app.add_subcommand("metrics", "perimeter, area, bounding side, endpoint and dimension estimate");
  family(metrics);
  metrics->add_option("--format", o.format, "text or json");
  metrics->add_option("-o,--output", o.output, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run the property suite and write CONFORMANCE.md");
  verify->add_flag("--all", o.all, "include snowflake geometry, factorizations and tilings");
  verify->add_option("--max-n", o.max_n, "largest snowflake order");
  verify->add_option("--max-i", o.max_i, "largest family parameter");
  verify->add_option("-o,--output", o.output, "report path (default: CONFORMANCE.md)");

  auto* tile = app.add_subcommand("tile", "certify both translation tilings of a snowflake");
  family(tile);
  tile->add_option("--format", o.format, "svg, json or text");
  tile->add_option("-o,--output", o.output, "output file (default: stdout)");
  tile->add_option("--copies", o.copies, "number of tiles drawn");
  tile->add_option("--which", o.which, "factorization to draw (1 or 2)");
  tile->add_option("--scale", o.scale, "pixels per lattice unit");

  auto* render = app.add_subcommand("render", "write <kind>_<i>_<n>.svg");
  family(render);
  render->add_option("--kind", o.kind, "curve, snowflake or tiling");
  render->add_option("-o,--output", o.output, "output directory (default: .)");
  render->add_option("--copies", o.copies, "number of tiles drawn");
  render->add_option("--which", o.which, "factorization to draw (1 or 2)");
  render->add_option("--scale", o.scale, "pixels per lattice unit");
  render->add_flag("--grid", o.grid, "draw the unit cells");

  // The default format differs by verb.
  tile->preparse_callback([&](std::size_t) { o.format = "svg"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*word) return cmd_word(o);
    if (*curve) return cmd_curve(o);
    if (*snowflake) return cmd_snowflake(o);
    if (*metrics) return cmd_metrics(o);
    if (*verify) return cmd_verify(o);
    if (*tile) return cmd_tile(o);
    if (*render) return cmd_render(o);
  } catch (const std::domain_error& e) {
    std::cerr << "fibward: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fibward: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "fibward: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
