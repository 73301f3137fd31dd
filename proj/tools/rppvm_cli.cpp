// SPDX-License-Identifier: MIT
// Command-line front end. Exit codes: 0 pass, 1 a check failed, 2 bad usage
// or malformed input.
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rppvm/checks.hpp"
#include "rppvm/coupling.hpp"
#include "rppvm/json_io.hpp"
#include "rppvm/qt_series.hpp"
#include "rppvm/render.hpp"
#include "rppvm/sliding.hpp"
#include "rppvm/vertex_model.hpp"

using namespace rppvm;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

// Raised for a refusal the user can fix by changing flags (budget, missing
// input); reported like a usage error.
struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("no input: pass --input FILE or --input - for stdin");
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Partition parse_shape(const std::string& s) { return partition_from_json(parse_json(s)); }

// Number of RPPs of the shape with volume ≤ N, read off the generating
// function; the enumeration visits exactly these.
BigInt rpp_count(const Partition& lambda, int N) {
  BigInt total = 0;
  QTSeries s = hook_product_single(lambda, N);
  for (const auto& [key, c] : s.coeffs()) total += c;
  return total;
}

void guard_budget(const BigInt& states, bool force) {
  static const BigInt limit = 10'000'000;
  if (states > limit && !force)
    throw UsageError("enumeration would visit about " + states.str() +
                     " states (limit 10^7); rerun with --force to proceed");
}

std::vector<std::pair<Rational, Rational>> parse_samples2(const std::string& s) {
  std::vector<std::pair<Rational, Rational>> out;
  std::stringstream ss(s);
  for (std::string point; std::getline(ss, point, ';');) {
    std::stringstream ps(point);
    std::string a, b, extra;
    if (!std::getline(ps, a, ',') || !std::getline(ps, b, ',') || std::getline(ps, extra, ','))
      throw UsageError("one-color samples look like '1/2,1/3;2/5,3/7', got '" + point + "'");
    out.emplace_back(parse_rational(a), parse_rational(b));
  }
  return out;
}

std::vector<ColoredYbeSample> parse_samples3(const std::string& s) {
  std::vector<ColoredYbeSample> out;
  std::stringstream ss(s);
  for (std::string point; std::getline(ss, point, ';');) {
    std::stringstream ps(point);
    std::string a, b, c, extra;
    if (!std::getline(ps, a, ',') || !std::getline(ps, b, ',') || !std::getline(ps, c, ',') ||
        std::getline(ps, extra, ','))
      throw UsageError("two-color samples look like '1/2,1/3,2/5;...', got '" + point + "'");
    out.push_back({parse_rational(a), parse_rational(b), parse_rational(c)});
  }
  return out;
}

Json report(const std::string& command, bool pass, Json details) {
  return Json{{"command", command}, {"status", pass ? "pass" : "fail"}, {"details", std::move(details)}};
}

// ---- hook -------------------------------------------------------------------

int cmd_hook(const std::string& shape_s, const std::string& format) {
  Partition lam = parse_shape(shape_s);
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= lam.length(); ++i) {
    rows.emplace_back();
    for (int j = 1; j <= lam.part(i); ++j) rows.back().push_back(hook(lam, {i, j}));
  }
  if (format == "json") {
    std::cout << dump(Json{{"shape", to_json(lam)}, {"hooks", rows}});
  } else {
    // Row 1 (the longest) first.
    for (const auto& row : rows) {
      for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
  }
  return kPass;
}

// ---- genfun -----------------------------------------------------------------

int cmd_genfun(const std::string& shape_s, int N, bool paired, int jobs, bool force,
               const std::string& format) {
  if (N < 0) throw UsageError("--max-volume must be nonnegative");
  Partition lam = parse_shape(shape_s);
  BigInt states = rpp_count(lam, N);
  guard_budget(paired ? states * states : states, force);
  QTSeries brute = paired ? pair_genfun_bruteforce(lam, N, jobs) : single_genfun_bruteforce(lam, N);
  QTSeries product = paired ? hook_product_pair(lam, N) : hook_product_single(lam, N);
  bool eq = brute == product;
  if (format == "json") {
    std::cout << dump(report("genfun", eq,
                             Json{{"shape", to_json(lam)}, {"paired", paired},
                                  {"bruteforce", to_json(brute)}, {"product", to_json(product)},
                                  {"equal", eq}}));
  } else {
    std::cout << "shape " << to_string(lam) << (paired ? ", pairs" : ", single") << ", N = " << N << "\n"
              << "enumerated: " << to_string(brute) << "\n"
              << "product:    " << to_string(product) << "\n"
              << (eq ? "PASS" : "FAIL") << "\n";
  }
  return eq ? kPass : kFail;
}

// ---- ybe --------------------------------------------------------------------

CrossParam parse_cross(const std::string& s) {
  if (s == "yx") return CrossParam::Product;
  if (s == "yxt") return CrossParam::ProductT;
  if (s == "ratio") return CrossParam::Ratio;
  throw UsageError("--cross must be yx, yxt or ratio");
}

int cmd_ybe(const std::string& mode, const std::string& samples_s, bool smoke, const std::string& cross,
            const std::string& format) {
  Json details = Json::array();
  bool pass = true;
  std::ostringstream text;
  if (mode == "one-color") {
    auto samples = parse_samples2(samples_s.empty() ? "1/2,1/3;2/5,3/7;3,1/5;-2/3,5/4;7/11,-3/2" : samples_s);
    for (YbeKind k : {YbeKind::WhiteWhite, YbeKind::WhiteGray}) {
      if (smoke) {
        bool ok = true;
        for (const auto& [x, y] : samples) {
          auto [l, r] = ybe_sides(k, {}, x, y);
          ok = ok && l == r;
        }
        pass = pass && ok;
        details.push_back(Json{{"kind", k == YbeKind::WhiteWhite ? "white-white" : "white-gray"},
                               {"boundary", "empty"}, {"ok", ok}});
        text << (k == YbeKind::WhiteWhite ? "white-white" : "white-gray") << " empty boundary: "
             << (ok ? "equal" : "DIFFER") << "\n";
        continue;
      }
      YbeReport rep = verify_ybe(k, samples);
      pass = pass && rep.ok();
      details.push_back(to_json(rep));
      text << (k == YbeKind::WhiteWhite ? "white-white" : "white-gray") << ": "
           << rep.violations.size() << " violations over " << rep.boundaries_checked
           << " boundaries x " << rep.samples << " points\n";
    }
  } else if (mode == "two-color") {
    auto samples = parse_samples3(samples_s.empty() ? "1/2,1/3,2/5;3/7,2/9,5/3;-4/5,3/11,7/2" : samples_s);
    for (YbeKind k : {YbeKind::WhiteWhite, YbeKind::WhiteGray}) {
      CrossParam param = k == YbeKind::WhiteGray && !cross.empty() ? parse_cross(cross) : default_cross_param(k);
      const char* name = k == YbeKind::WhiteWhite ? "white-white" : "white-gray";
      if (smoke) {
        bool ok = true;
        for (const auto& s : samples) {
          auto [l, r] = colored_ybe_sides(k, {}, s, param);
          ok = ok && l == r;
        }
        pass = pass && ok;
        details.push_back(Json{{"kind", name}, {"cross", to_string(param)}, {"boundary", "empty"}, {"ok", ok}});
        text << name << " (" << to_string(param) << ") empty boundary: " << (ok ? "equal" : "DIFFER") << "\n";
        continue;
      }
      ColoredYbeReport rep = verify_colored_ybe(k, samples, param);
      pass = pass && rep.ok();
      Json j = to_json(rep);
      text << name << " (" << to_string(param) << "): " << rep.violations.size()
           << " violations over " << rep.boundaries_checked << " boundaries x " << rep.samples
           << " points\n";
      // At t = 1 each colored side must be the product of the one-color sides.
      size_t t1_bad = 0, t1_points = 0;
      for (const auto& s : samples) {
        if (s.t != 1) continue;
        ++t1_points;
        for (int m = 0; m < 4096; ++m) {
          ColoredBoundary b{};
          std::array<bool, 6> blue{}, red{};
          for (int i = 0; i < 6; ++i) {
            b[size_t(i)] = (m >> (2 * i)) & 3;
            blue[size_t(i)] = b[size_t(i)] & 1;
            red[size_t(i)] = b[size_t(i)] & 2;
          }
          auto [cl, cr] = colored_ybe_sides(k, b, s, param);
          auto [bl, br] = ybe_sides(k, blue, s.x, s.y);
          auto [rl, rr] = ybe_sides(k, red, s.x, s.y);
          if (cl != bl * rl || cr != br * rr) ++t1_bad;
        }
      }
      if (t1_points) {
        j["t1_factorization_mismatches"] = t1_bad;
        pass = pass && t1_bad == 0;
        text << "  t = 1 factorization into one-color sides: " << t1_bad << " mismatches\n";
      }
      details.push_back(j);
    }
  } else {
    throw UsageError("--mode must be one-color or two-color");
  }
  if (format == "json")
    std::cout << dump(report("ybe", pass, details));
  else
    std::cout << text.str() << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kPass : kFail;
}

// ---- slide / unslide ------------------------------------------------------------

int slide_roundtrip(const std::string& shape_s, int N, bool force, const std::string& format) {
  Partition lam = parse_shape(shape_s);
  BigInt states = rpp_count(lam, N);
  guard_budget(states * states, force);
  std::vector<RPP> all = enumerate(lam, N);
  long long pairs = 0, g0 = 0, bad = 0;
  for (const RPP& b : all)
    for (const RPP& c : all) {
      if (b.volume() + c.volume() > N) continue;
      ++pairs;
      PairRPP p = make_pair_rpp(b, c);
      if (g_via_lozenges(p) != 0) continue;
      ++g0;
      try {
        if (!(unslide(slide(p)) == p)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  for (const RPP& r : all)
    if (!(slide(unslide(r)) == r)) ++bad;
  bool pass = bad == 0 && g0 == static_cast<long long>(all.size());
  if (format == "json") {
    std::cout << dump(report("slide", pass,
                             Json{{"shape", to_json(lam)}, {"max_volume", N}, {"pairs", pairs},
                                  {"g0_pairs", g0}, {"rpps", all.size()}, {"failures", bad}}));
  } else {
    std::cout << "shape " << to_string(lam) << ", total volume <= " << N << ": " << pairs << " pairs, "
              << g0 << " with g = 0, " << all.size() << " RPPs, " << bad << " round-trip failures\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

int cmd_slide(const std::string& input, const std::string& output, const std::string& format) {
  PairRPP p = pair_from_json(parse_json(read_input(input)));
  RPP r = slide(p);
  write_output(format == "text" ? to_string(r) + "\n" : dump(to_json(r)), output);
  return kPass;
}

int cmd_unslide(const std::string& input, const std::string& output, const std::string& format) {
  RPP r = rpp_from_json(parse_json(read_input(input)));
  PairRPP p = unslide(r);
  write_output(format == "text" ? "blue\n" + to_string(p.blue) + "\nred\n" + to_string(p.red) + "\n"
                                : dump(to_json(p)),
               output);
  return kPass;
}

// ---- g ------------------------------------------------------------------------

int cmd_g(const std::string& input, const std::string& format) {
  PairRPP p = pair_from_json(parse_json(read_input(input)));
  int gv = g_via_vertex(p), gl = g_via_lozenges(p);
  auto cps = coupled_pairs(p);
  bool pass = gv == gl;
  if (format == "json") {
    Json list = Json::array();
    for (const auto& c : cps) list.push_back(to_json(c));
    std::cout << dump(report("g", pass,
                             Json{{"g_vertex", gv}, {"g_lozenges", gl}, {"coupled_pairs", list},
                                  {"t0_constraints", check_t0_constraints(p)}}));
  } else {
    std::cout << "g from vertex weights: " << gv << "\ng from coupled lozenges: " << gl << "\n";
    for (const auto& c : cps)
      std::cout << "  strip " << c.strip << ", column " << c.column << ", type " << c.type << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

// ---- render -------------------------------------------------------------------

int cmd_render(const std::string& object, const std::string& shape_s, const std::string& input,
               const std::string& format, const std::string& output, int half_width) {
  if (format != "svg" && format != "ascii") throw UsageError("render --format must be svg or ascii");
  const bool svg = format == "svg";
  std::string out;
  if (object == "maya") {
    Partition lam = parse_shape(shape_s);
    out = svg ? render_maya_svg(lam, half_width) : render_maya_ascii(lam, half_width) + "\n";
  } else if (object == "rpp") {
    // With only a shape the zero filling is drawn, which shows the back walls alone.
    RPP r = input.empty() && shape_s != "[]" ? zero_rpp(parse_shape(shape_s))
                                                    : rpp_from_json(parse_json(read_input(input)));
    out = svg ? render_tiling_svg(r) : render_tiling_ascii(r);
  } else if (object == "pair") {
    PairRPP p = pair_from_json(parse_json(read_input(input)));
    out = svg ? render_pair_svg(p) : render_pair_ascii(p);
  } else {
    throw UsageError("render --object must be maya, rpp or pair");
  }
  write_output(out, output);
  return kPass;
}

// ---- verify-all -------------------------------------------------------------------

int cmd_verify_all(double budget, int jobs, bool timing, const std::string& format) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  Json results = Json::array();
  std::string text;
  for (int id = 1; id <= kCriterionCount; ++id) {
    double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CriterionResult r;
    if (budget > 0 && used > budget) {
      r = CriterionResult{id, "criterion " + std::to_string(id), false, {"skipped: time budget spent"}, 0};
    } else {
      r = run_criterion(id, jobs);
    }
    pass = pass && r.pass;
    Json j{{"id", r.id}, {"title", r.title}, {"status", r.pass ? "pass" : "fail"}, {"details", r.details}};
    if (timing) j["elapsed"] = r.seconds;
    results.push_back(j);
    text += format_result(r, timing);
  }
  if (format == "json") {
    Json rep = report("verify-all", pass, results);
    if (timing)
      rep["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << dump(rep);
  } else {
    std::cout << text << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reverse plane partitions and colored vertex models: exact checks and pictures"};
  app.require_subcommand(1);
  const int default_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::string shape = "[]", format, input, output, samples, mode = "one-color", cross, object = "rpp";
  int N = 6, jobs = default_jobs, half_width = 0;
  bool paired = false, force = false, smoke = false, roundtrip = false, timing = false;
  double budget = 0;

  auto* hook_c = app.add_subcommand("hook", "hook lengths of a shape, row 1 first");
  hook_c->add_option("--shape", shape, "partition as JSON, e.g. [4,3,1]")->required();
  hook_c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen_c = app.add_subcommand("genfun", "enumerate and compare with the hook product");
  gen_c->add_option("--shape", shape)->required();
  gen_c->add_option("--max-volume", N, "truncation order N")->required();
  gen_c->add_flag("--paired", paired, "pairs of RPPs with the t statistic");
  gen_c->add_option("--jobs", jobs, "threads for the pair enumeration")->check(CLI::PositiveNumber);
  gen_c->add_flag("--force", force, "ignore the 10^7 state guard");
  gen_c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ybe_c = app.add_subcommand("ybe", "Yang-Baxter equations over all boundaries");
  ybe_c->add_option("--mode", mode)->check(CLI::IsMember({"one-color", "two-color"}));
  ybe_c->add_option("--samples", samples, "points 'x,y;...' or 'x,y,t;...' as exact rationals");
  ybe_c->add_flag("--smoke", smoke, "only the all-empty boundary");
  ybe_c->add_option("--cross", cross, "white-gray cross parameter for two colors: yx (default), yxt, ratio");
  ybe_c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* slide_c = app.add_subcommand("slide", "slide a g = 0 pair into one RPP");
  slide_c->add_option("--input", input, "PairRPP JSON file, - for stdin");
  slide_c->add_option("--output", output);
  slide_c->add_flag("--roundtrip", roundtrip, "check both round trips over a shape instead");
  slide_c->add_option("--shape", shape);
  slide_c->add_option("--max-volume", N);
  slide_c->add_flag("--force", force);
  slide_c->add_option("--format", format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

  auto* unslide_c = app.add_subcommand("unslide", "split one RPP into a g = 0 pair");
  unslide_c->add_option("--input", input, "RPP JSON file, - for stdin");
  unslide_c->add_option("--output", output);
  unslide_c->add_option("--format", format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

  auto* g_c = app.add_subcommand("g", "interaction statistic of a pair, both ways");
  g_c->add_option("--input", input, "PairRPP JSON file, - for stdin");
  g_c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* render_c = app.add_subcommand("render", "static pictures");
  render_c->add_option("--object", object)->check(CLI::IsMember({"maya", "rpp", "pair"}));
  render_c->add_option("--shape", shape, "for --object maya");
  render_c->add_option("--input", input, "RPP or PairRPP JSON, - for stdin");
  render_c->add_option("--half-width", half_width, "Maya window half width (0 = automatic)");
  render_c->add_option("--output", output);
  render_c->add_option("--format", format, "ascii (default) or svg");

  auto* all_c = app.add_subcommand("verify-all", "run the full acceptance suite");
  all_c->add_option("--budget", budget, "seconds; criteria not started in time are reported as failed");
  all_c->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  all_c->add_flag("--timing", timing, "include elapsed seconds (output is then not reproducible)");
  all_c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (format.empty()) format = *slide_c || *unslide_c ? "json" : *render_c ? "ascii" : "text";
  try {
    if (*hook_c) return cmd_hook(shape, format);
    if (*gen_c) return cmd_genfun(shape, N, paired, jobs, force, format);
    if (*ybe_c) return cmd_ybe(mode, samples, smoke, cross, format);
    if (*slide_c) return roundtrip ? slide_roundtrip(shape, N, force, format) : cmd_slide(input, output, format);
    if (*unslide_c) return cmd_unslide(input, output, format);
    if (*g_c) return cmd_g(input, format);
    if (*render_c) return cmd_render(object, shape, input, format, output, half_width);
    if (*all_c) return cmd_verify_all(budget, jobs, timing, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Malformed or out-of-domain input (bad shape, invalid RPP, pair with
    // coupled lozenges handed to slide).
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
