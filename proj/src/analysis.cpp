#include "polyhyp/analysis.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "common.hpp"

namespace polyhyp {

  namespace {
    constexpr std::array<std::string_view, 8> kNames{
      "four_point_delta", "chain_defect",   "rips_delta",    "polygon_delta",
      "bigon_constants",  "detour_epsilon", "mesh_estimate", "subgroup_quasiconvexity"};
  }

  std::span<std::string_view const> invariant_names() {
    return kNames;
  }

  std::vector<std::string> expanded_invariants(AnalysisConfig const& config) {
    std::vector<char> on(kNames.size(), 0);
    for (auto const& name : config.invariants) {
      if (name == "all") {
        std::fill(on.begin(), on.end() - 1, 1);
        if (!config.subgroup.empty()) {
          on.back() = 1;
        }
        continue;
      }
      auto it = std::find(kNames.begin(), kNames.end(), name);
      if (it == kNames.end()) {
        throw ConfigError("unknown invariant '" + name + "'");
      }
      on[static_cast<std::size_t>(it - kNames.begin())] = 1;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (on[i]) {
        out.emplace_back(kNames[i]);
      }
    }
    return out;
  }

  void validate(AnalysisConfig const& config) {
    auto spec = GroupSpec::parse(config.group);
    symmetric_generating_set(spec, config.generators);
    for (auto const& w : config.subgroup) {
      spec.parse_word(w);
    }
    if (!config.chain_basepoint.empty()) {
      spec.parse_word(config.chain_basepoint);
    }
    if (config.radius_lo < 1 || config.radius_hi < config.radius_lo) {
      throw ConfigError("radius range must satisfy 1 <= lo <= hi");
    }
    // 3 * R must fit the 16-bit distance tables with room for sentinels.
    if (config.radius_hi > 10000) {
      throw ConfigError("radius too large");
    }
    if (config.plan.geodesic_cap < 1) {
      throw ConfigError("geodesic cap must be at least 1");
    }
    if (!config.plan.is_exhaustive() && config.plan.samples < 1) {
      throw ConfigError("random sampling needs at least one sample");
    }
    if (config.polygon_lo < 1 || config.polygon_hi < config.polygon_lo) {
      throw ConfigError("polygon range must satisfy 1 <= lo <= hi");
    }
    if (config.chain.method == ChainMethod::bruteforce && config.chain.max_length < 1) {
      throw ConfigError("chain length must be at least 1");
    }
    auto names = expanded_invariants(config);
    bool wants_subgroup =
      std::find(names.begin(), names.end(), "subgroup_quasiconvexity") != names.end();
    if (wants_subgroup && config.subgroup.empty()) {
      throw ConfigError("subgroup_quasiconvexity needs subgroup generators");
    }
  }

  Report run_analysis(AnalysisConfig const& config) {
    detail::Stopwatch clock;
    validate(config);
    auto const spec    = GroupSpec::parse(config.group);
    auto const letters = symmetric_generating_set(spec, config.generators);
    auto const names   = expanded_invariants(config);

    Report report;
    report.config     = config;
    report.group_text = spec.text();
    report.structure  = spec.structure();
    for (auto const& l : letters) {
      report.letters.push_back(l.label);
    }

    for (int radius = config.radius_lo; radius <= config.radius_hi; ++radius) {
      auto ball = build_ball(spec, letters, radius, config.budget);
      if (!config.export_ball.empty()) {
        write_text_file(config.export_ball + "_r" + std::to_string(radius) + ".txt",
                        ball.export_text());
      }
      report.balls.push_back({ball.radius_in(), ball.radius_out(), ball.size(),
                              ball.inner_size(), ball.hull_size(), ball.sphere_sizes()});
      if (names.empty()) {
        continue;
      }
      auto const         hull = hull_distances(ball);
      std::optional<int> epsilon;
      auto const&        plan = config.plan;
      for (auto const& name : names) {
        if (name == "four_point_delta") {
          report.results.push_back(four_point_delta(ball, hull, plan));
        } else if (name == "chain_defect") {
          auto options = config.chain;
          options.basepoint.reset();
          if (!config.chain_basepoint.empty()) {
            auto v = ball.find_word(config.chain_basepoint);
            if (!v || *v >= ball.inner_size()) {
              throw ConfigError("chain basepoint " + config.chain_basepoint
                                + " is not in the inner ball");
            }
            options.basepoint = *v;
          }
          report.results.push_back(chain_defect(ball, hull, options));
        } else if (name == "rips_delta") {
          report.results.push_back(rips_delta(ball, hull, plan, config.geodesic_mode));
        } else if (name == "polygon_delta") {
          auto rs = polygon_delta_range(ball, hull, config.polygon_lo, config.polygon_hi,
                                        plan, config.geodesic_mode);
          report.results.insert(report.results.end(), rs.begin(), rs.end());
        } else if (name == "bigon_constants") {
          auto b = bigon_constants(ball, hull, plan, config.geodesic_mode);
          report.results.push_back(std::move(b.async));
          report.results.push_back(std::move(b.sync));
        } else if (name == "detour_epsilon") {
          auto r  = detour_epsilon(ball, hull, plan);
          epsilon = static_cast<int>(*r.doubled / 2);
          report.results.push_back(std::move(r));
        } else if (name == "mesh_estimate") {
          report.results.push_back(mesh_estimate(ball, hull, plan, config.mesh_mode));
        } else if (name == "subgroup_quasiconvexity") {
          report.results.push_back(
            subgroup_quasiconvexity(ball, hull, config.subgroup, epsilon));
        }
      }
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }

  void write_text_file(std::string const& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open " + path + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
      throw std::runtime_error("cannot write " + path);
    }
  }

}  // namespace polyhyp
