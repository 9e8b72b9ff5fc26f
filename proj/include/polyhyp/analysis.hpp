// Experiment configuration, orchestration and report emission.

#ifndef POLYHYP_ANALYSIS_HPP_
#define POLYHYP_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyhyp/ball.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  inline constexpr std::string_view kToolVersion = "1.0.0";

  //! Invariant names accepted by AnalysisConfig::invariants, in report
  //! order.  "all" selects every entry except subgroup_quasiconvexity, which
  //! is added when subgroup words are configured.
  std::span<std::string_view const> invariant_names();

  //! Rejected configuration (unknown invariant, bad radius range, ...).
  class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct AnalysisConfig {
    std::string              group;
    std::vector<std::string> generators;  // empty: standard generators
    int                      radius_lo = 2;
    int                      radius_hi = 2;
    std::vector<std::string> invariants;
    SamplingPlan             plan;
    std::size_t              budget = kDefaultVertexBudget;

    std::size_t              polygon_lo    = 1;
    std::size_t              polygon_hi    = 4;
    ChainOptions             chain;          // basepoint field unused here
    std::string              chain_basepoint;  // word; empty scans all basepoints
    MeshMode                 mesh_mode     = MeshMode::geodesic;
    SideMode                 geodesic_mode = SideMode::all;
    std::vector<std::string> subgroup;
    std::string              export_ball;  // path prefix, empty for none
  };

  //! Checks everything that can be checked without building a ball,
  //! including parsing the group and the generator words.  Throws
  //! ParseError or ConfigError.
  void validate(AnalysisConfig const& config);

  //! Selected invariant names after expanding "all", deduplicated, in
  //! report order.
  std::vector<std::string> expanded_invariants(AnalysisConfig const& config);

  struct BallStats {
    int                      radius_in  = 0;
    int                      radius_out = 0;
    std::size_t              vertices = 0;
    std::size_t              inner    = 0;
    std::size_t              hull     = 0;
    std::vector<std::size_t> sphere_sizes;
  };

  struct Report {
    std::string                  version{kToolVersion};
    AnalysisConfig               config;
    std::string                  group_text;  // canonical spelling
    std::string                  structure;
    std::vector<std::string>     letters;
    std::vector<BallStats>       balls;
    std::vector<InvariantResult> results;
    double                       wall_time_ms = 0;
  };

  //! Builds one ball per radius and evaluates the selected invariants on
  //! each.  Throws ParseError, ConfigError, BudgetExceeded, OutsideBall or
  //! InvariantCheckFailure.
  Report run_analysis(AnalysisConfig const& config);

  enum class ReportFormat { json, table };

  //! json output uses a fixed key order and doubled integer values.
  std::string emit_report(Report const& report, ReportFormat format);

  //! The json form with every wall_time_ms field removed; byte-identical
  //! across runs of the same config.
  std::string canonical_json(Report const& report);

  //! Reads a json report back.  Throws ParseError on malformed input.
  Report report_from_json(std::string_view text);

  //! Side-by-side output for two reports on the same group.
  std::string emit_comparison(Report const& a, Report const& b, ReportFormat format);

  //! Writes text to path; std::runtime_error if it cannot be written.
  void write_text_file(std::string const& path, std::string_view text);

}  // namespace polyhyp

#endif  // POLYHYP_ANALYSIS_HPP_
