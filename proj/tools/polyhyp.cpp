// polyhyp: hyperbolicity invariants of finite Cayley balls.
//
// Exit status: 0 success, 1 other failure, 2 bad input, 3 vertex budget
// exceeded, 4 internal check failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyhyp/analysis.hpp"

using namespace polyhyp;

namespace {

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              item;
    std::istringstream       in(s);
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  // "4" or "2..6".
  std::pair<long, long> parse_range(std::string const& s, char const* what) {
    auto dots = s.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        long v = std::stol(s, &used);
        if (used != s.size()) {
          throw std::invalid_argument(s);
        }
        return {v, v};
      }
      auto lo_text = s.substr(0, dots);
      auto hi_text = s.substr(dots + 2);
      long lo      = std::stol(lo_text, &used);
      if (used != lo_text.size()) {
        throw std::invalid_argument(s);
      }
      long hi = std::stol(hi_text, &used);
      if (used != hi_text.size()) {
        throw std::invalid_argument(s);
      }
      return {lo, hi};
    } catch (std::logic_error const&) {
      throw ConfigError(std::string("bad ") + what + " '" + s + "', expected N or A..B");
    }
  }

  struct Options {
    std::string   group;
    std::string   generators;
    std::string   radius;
    std::string   radii;
    std::string   invariants = "all";
    std::size_t   samples    = 0;
    std::uint64_t seed       = 0;
    std::size_t   cap        = 64;
    std::size_t   budget     = kDefaultVertexBudget;
    std::string   format     = "table";
    std::string   out;
    std::string   polygon_n     = "1..4";
    std::string   chain_method  = "bottleneck";
    std::size_t   chain_length  = 4;
    std::string   basepoint;
    std::string   mesh_mode     = "geodesic";
    std::string   geodesic_mode = "all";
    std::string   subgroup;
    std::string   export_ball;
  };

  void add_analysis_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--group", o.group, "group spec, e.g. \"F(a,b)\", \"Z2 * Z3\", \"Z x Z\"")
      ->required();
    auto* r  = cmd->add_option("--radius", o.radius, "inner radius R_in");
    auto* rs = cmd->add_option("--radii", o.radii, "inner radius sweep A..B");
    r->excludes(rs);
    cmd->add_option("--invariants", o.invariants, "comma list, or all")
      ->capture_default_str();
    cmd->add_option("--samples", o.samples, "random tuples per invariant; 0 = exhaustive")
      ->capture_default_str();
    cmd->add_option("--seed", o.seed, "seed for random sampling")->capture_default_str();
    cmd->add_option("--geodesic-cap", o.cap, "geodesics per side in enumerate mode and mesh")
      ->capture_default_str();
    cmd->add_option("--budget", o.budget, "vertex budget for the outer ball")
      ->capture_default_str();
    cmd->add_option("--format", o.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--polygon-n", o.polygon_n, "polygon sizes n (gon size - 1), N or A..B")
      ->capture_default_str();
    cmd->add_option("--chain-method", o.chain_method)
      ->check(CLI::IsMember({"bottleneck", "bruteforce"}))
      ->capture_default_str();
    cmd->add_option("--chain-max-length", o.chain_length, "chain steps for bruteforce")
      ->capture_default_str();
    cmd->add_option("--basepoint", o.basepoint, "chain basepoint as a word; default all");
    cmd->add_option("--mesh-mode", o.mesh_mode)
      ->check(CLI::IsMember({"geodesic", "adversarial"}))
      ->capture_default_str();
    cmd->add_option("--geodesic-mode", o.geodesic_mode, "side handling: all, enumerate, interval")
      ->check(CLI::IsMember({"all", "enumerate", "interval"}))
      ->capture_default_str();
    cmd->add_option("--subgroup", o.subgroup, "subgroup generator words, comma separated");
    cmd->add_option("--export-ball", o.export_ball, "write each ball to PREFIX_r<R>.txt");
  }

  AnalysisConfig make_config(Options const& o, std::string const& generators) {
    AnalysisConfig c;
    c.group      = o.group;
    c.generators = split_list(generators);
    if (o.radius.empty() && o.radii.empty()) {
      throw ConfigError("one of --radius or --radii is required");
    }
    auto [lo, hi] = parse_range(o.radii.empty() ? o.radius : o.radii, "radius");
    if (!o.radius.empty() && lo != hi) {
      throw ConfigError("--radius takes a single value; use --radii for a sweep");
    }
    if (lo < 1 || hi < lo || hi > 10000) {
      throw ConfigError("radius range must satisfy 1 <= A <= B");
    }
    c.radius_lo  = static_cast<int>(lo);
    c.radius_hi  = static_cast<int>(hi);
    c.invariants = split_list(o.invariants);
    c.plan       = o.samples == 0 ? SamplingPlan::exhaustive(o.cap)
                                  : SamplingPlan::random(o.samples, o.seed, o.cap);
    c.budget     = o.budget;
    auto [plo, phi] = parse_range(o.polygon_n, "polygon size");
    if (plo < 1 || phi < plo) {
      throw ConfigError("polygon size range must satisfy 1 <= A <= B");
    }
    c.polygon_lo        = static_cast<std::size_t>(plo);
    c.polygon_hi        = static_cast<std::size_t>(phi);
    c.chain.method      = o.chain_method == "bruteforce" ? ChainMethod::bruteforce
                                                         : ChainMethod::bottleneck;
    c.chain.max_length  = o.chain_length;
    c.chain_basepoint   = o.basepoint;
    c.mesh_mode         = o.mesh_mode == "adversarial" ? MeshMode::adversarial : MeshMode::geodesic;
    c.geodesic_mode     = o.geodesic_mode == "enumerate" ? SideMode::enumerate
                          : o.geodesic_mode == "interval" ? SideMode::interval
                                                          : SideMode::all;
    c.subgroup    = split_list(o.subgroup);
    c.export_ball = o.export_ball;
    validate(c);
    return c;
  }

  void deliver(std::string const& text, std::string const& path) {
    if (path.empty()) {
      std::cout << text;
    } else {
      write_text_file(path, text);
    }
  }

  ReportFormat format_of(Options const& o) {
    return o.format == "json" ? ReportFormat::json : ReportFormat::table;
  }

  std::string h2_demo(double r, std::string const& format) {
    double const d = h2_center_distance(r);
    std::vector<std::pair<double, double>> series;
    for (int k = 1; k <= 8; ++k) {
      double rk = 1.0 - std::pow(10.0, -k);
      series.emplace_back(rk, h2_center_distance(rk));
    }
    if (format == "json") {
      nlohmann::ordered_json j;
      j["tool"]     = "polyhyp";
      j["version"]  = kToolVersion;
      j["radius"]   = r;
      j["distance"] = d;
      auto& s       = j["series"];
      s             = nlohmann::ordered_json::array();
      for (auto [x, y] : series) {
        s.push_back({{"radius", x}, {"distance", y}});
      }
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    char               buf[96];
    std::snprintf(buf, sizeof buf, "d(0, z) at |z| = %.12g: %.12g\n", r, d);
    os << buf << "\ndivergence as |z| -> 1:\n";
    for (auto [x, y] : series) {
      std::snprintf(buf, sizeof buf, "  |z| = %-12.10g  d = %.9f\n", x, y);
      os << buf;
    }
    return os.str();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolicity invariants of finite balls in Cayley graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options analyze_opts;
  auto*   analyze = app.add_subcommand("analyze", "compute invariants over one or more radii");
  add_analysis_options(analyze, analyze_opts);

  Options     compare_opts;
  std::string gens_a, gens_b;
  auto*       compare = app.add_subcommand("compare-generators",
                                     "run the same analysis with two generating sets");
  add_analysis_options(compare, compare_opts);
  compare->add_option("--gens-a", gens_a, "first generating set; empty = standard");
  compare->add_option("--gens-b", gens_b, "second generating set")->required();

  double      h2_radius = 0;
  std::string h2_format = "table";
  std::string h2_out;
  auto*       h2 = app.add_subcommand("h2-demo", "distance to the Poincare disk centre");
  h2->add_option("--radius", h2_radius, "Euclidean radius in [0, 1)")->required();
  h2->add_option("--format", h2_format)->check(CLI::IsMember({"json", "table"}));
  h2->add_option("--out", h2_out);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      auto report = run_analysis(make_config(analyze_opts, analyze_opts.generators));
      deliver(emit_report(report, format_of(analyze_opts)), analyze_opts.out);
    } else if (*compare) {
      auto a = run_analysis(make_config(compare_opts, gens_a));
      auto b = run_analysis(make_config(compare_opts, gens_b));
      deliver(emit_comparison(a, b, format_of(compare_opts)), compare_opts.out);
    } else if (*h2) {
      deliver(h2_demo(h2_radius, h2_format), h2_out);
    }
  } catch (ParseError const& e) {
    std::cerr << "polyhyp: parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (BudgetExceeded const& e) {
    std::cerr << "polyhyp: " << e.what() << "\n";
    return 3;
  } catch (OutsideBall const& e) {
    std::cerr << "polyhyp: " << e.what() << "\n";
    return 3;
  } catch (InvariantCheckFailure const& e) {
    std::cerr << "polyhyp: internal check failed: " << e.what() << "\n";
    return 4;
  } catch (std::domain_error const& e) {
    std::cerr << "polyhyp: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    std::cerr << "polyhyp: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "polyhyp: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
