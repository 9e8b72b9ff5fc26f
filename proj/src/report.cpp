#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "polyhyp/analysis.hpp"

namespace polyhyp {

  using Json = nlohmann::ordered_json;

  namespace {

    std::string half_integer(std::int64_t doubled) {
      auto        whole = doubled / 2;
      std::string s     = std::to_string(whole);
      if (doubled % 2 != 0) {
        if (doubled < 0 && whole == 0) {
          s = "-0";
        }
        s += ".5";
      }
      return s;
    }

    Json plan_json(SamplingPlan const& p) {
      Json j;
      j["mode"] = p.is_exhaustive() ? "exhaustive" : "random";
      if (!p.is_exhaustive()) {
        j["samples"] = p.samples;
        j["seed"]    = p.seed;
      }
      j["geodesic_cap"] = p.geodesic_cap;
      return j;
    }

    SamplingPlan plan_from(Json const& j) {
      SamplingPlan p;
      if (j.at("mode").get<std::string>() == "random") {
        p.mode    = SamplingPlan::Mode::random;
        p.samples = j.at("samples").get<std::size_t>();
        p.seed    = j.at("seed").get<std::uint64_t>();
      }
      p.geodesic_cap = j.at("geodesic_cap").get<std::size_t>();
      return p;
    }

    Json config_json(AnalysisConfig const& c) {
      Json j;
      j["group"]      = c.group;
      j["generators"] = c.generators;
      j["radii"]      = {c.radius_lo, c.radius_hi};
      j["invariants"] = c.invariants;
      j["sampling"]   = plan_json(c.plan);
      j["budget"]     = c.budget;
      j["polygon_n"]  = {c.polygon_lo, c.polygon_hi};
      j["chain"]      = {
        {"method", c.chain.method == ChainMethod::bottleneck ? "bottleneck" : "bruteforce"},
        {"max_length", c.chain.max_length},
        {"basepoint", c.chain_basepoint.empty() ? Json(nullptr) : Json(c.chain_basepoint)}};
      j["mesh_mode"]     = std::string(to_string(c.mesh_mode));
      j["geodesic_mode"] = std::string(to_string(c.geodesic_mode));
      j["subgroup"]      = c.subgroup;
      return j;
    }

    AnalysisConfig config_from(Json const& j) {
      AnalysisConfig c;
      c.group      = j.at("group").get<std::string>();
      c.generators = j.at("generators").get<std::vector<std::string>>();
      c.radius_lo  = j.at("radii").at(0).get<int>();
      c.radius_hi  = j.at("radii").at(1).get<int>();
      c.invariants = j.at("invariants").get<std::vector<std::string>>();
      c.plan       = plan_from(j.at("sampling"));
      c.budget     = j.at("budget").get<std::size_t>();
      c.polygon_lo = j.at("polygon_n").at(0).get<std::size_t>();
      c.polygon_hi = j.at("polygon_n").at(1).get<std::size_t>();
      auto const& ch = j.at("chain");
      c.chain.method = ch.at("method").get<std::string>() == "bruteforce"
                         ? ChainMethod::bruteforce
                         : ChainMethod::bottleneck;
      c.chain.max_length = ch.at("max_length").get<std::size_t>();
      if (!ch.at("basepoint").is_null()) {
        c.chain_basepoint = ch.at("basepoint").get<std::string>();
      }
      c.mesh_mode = j.at("mesh_mode").get<std::string>() == "adversarial" ? MeshMode::adversarial
                                                                          : MeshMode::geodesic;
      auto gm = j.at("geodesic_mode").get<std::string>();
      c.geodesic_mode = gm == "enumerate"  ? SideMode::enumerate
                        : gm == "interval" ? SideMode::interval
                                           : SideMode::all;
      c.subgroup = j.at("subgroup").get<std::vector<std::string>>();
      return c;
    }

    Json result_json(InvariantResult const& r) {
      Json j;
      j["name"]       = r.name;
      j["radius_in"]  = r.radius_in;
      j["radius_out"] = r.radius_out;
      Json params     = Json::object();
      for (auto const& [k, v] : r.parameters) {
        params[k] = v;
      }
      j["parameters"] = params;
      if (r.doubled) {
        j["value_doubled"] = *r.doubled;
        j["value"]         = half_integer(*r.doubled);
      } else {
        j["value_doubled"] = nullptr;
        j["value"]         = nullptr;
      }
      if (r.real) {
        j["value_real"] = *r.real;
      }
      j["bound"] = std::string(to_string(r.bound));
      auto s     = plan_json(r.sampling.plan);
      s["arity"]    = r.sampling.arity;
      s["examined"] = r.sampling.examined;
      s["cap_hit"]  = r.sampling.cap_hit;
      j["sampling"] = s;
      j["witness"]  = {{"vertices", r.witness.vertices},
                       {"paths", r.witness.paths},
                       {"note", r.witness.note}};
      Json aux      = Json::object();
      for (auto const& [k, v] : r.auxiliary) {
        aux[k] = v;
      }
      j["auxiliary_doubled"] = aux;
      Json checks            = Json::object();
      for (auto const& [k, v] : r.checks) {
        checks[k] = v;
      }
      j["checks"]       = checks;
      j["note"]         = r.note;
      j["wall_time_ms"] = r.wall_time_ms;
      return j;
    }

    InvariantResult result_from(Json const& j) {
      InvariantResult r;
      r.name       = j.at("name").get<std::string>();
      r.radius_in  = j.at("radius_in").get<int>();
      r.radius_out = j.at("radius_out").get<int>();
      for (auto const& [k, v] : j.at("parameters").items()) {
        r.parameters.emplace_back(k, v.get<std::string>());
      }
      if (!j.at("value_doubled").is_null()) {
        r.doubled = j.at("value_doubled").get<std::int64_t>();
      }
      if (j.contains("value_real")) {
        r.real = j.at("value_real").get<double>();
      }
      auto b  = j.at("bound").get<std::string>();
      r.bound = b == "lower" ? Bound::lower : b == "upper" ? Bound::upper : Bound::exact;
      auto const& s       = j.at("sampling");
      r.sampling.plan     = plan_from(s);
      r.sampling.arity    = s.at("arity").get<std::size_t>();
      r.sampling.examined = s.at("examined").get<std::size_t>();
      r.sampling.cap_hit  = s.at("cap_hit").get<bool>();
      auto const& w       = j.at("witness");
      r.witness.vertices  = w.at("vertices").get<std::vector<std::string>>();
      r.witness.paths     = w.at("paths").get<std::vector<std::string>>();
      r.witness.note      = w.at("note").get<std::string>();
      for (auto const& [k, v] : j.at("auxiliary_doubled").items()) {
        r.auxiliary.emplace_back(k, v.get<std::int64_t>());
      }
      for (auto const& [k, v] : j.at("checks").items()) {
        r.checks.emplace_back(k, v.get<bool>());
      }
      r.note         = j.at("note").get<std::string>();
      r.wall_time_ms = j.value("wall_time_ms", 0.0);
      return r;
    }

    Json report_json(Report const& report) {
      Json j;
      j["tool"]    = "polyhyp";
      j["version"] = report.version;
      j["config"]  = config_json(report.config);
      j["group"]   = {{"canonical", report.group_text},
                      {"structure", report.structure},
                      {"letters", report.letters}};
      Json balls   = Json::array();
      for (auto const& b : report.balls) {
        balls.push_back({{"radius_in", b.radius_in},
                         {"radius_out", b.radius_out},
                         {"vertices", b.vertices},
                         {"inner", b.inner},
                         {"hull", b.hull},
                         {"sphere_sizes", b.sphere_sizes}});
      }
      j["balls"]   = balls;
      Json results = Json::array();
      for (auto const& r : report.results) {
        results.push_back(result_json(r));
      }
      j["results"]      = results;
      j["wall_time_ms"] = report.wall_time_ms;
      return j;
    }

    void strip_timing(Json& j) {
      if (j.is_object()) {
        j.erase("wall_time_ms");
        for (auto& [k, v] : j.items()) {
          strip_timing(v);
        }
      } else if (j.is_array()) {
        for (auto& v : j) {
          strip_timing(v);
        }
      }
    }

    std::string parameters_text(InvariantResult const& r) {
      std::string s;
      for (auto const& [k, v] : r.parameters) {
        s += (s.empty() ? "" : " ") + k + "=" + v;
      }
      return s;
    }

    std::string value_text(InvariantResult const& r) {
      if (r.doubled) {
        return half_integer(*r.doubled);
      }
      if (r.real) {
        std::ostringstream os;
        os << std::setprecision(12) << *r.real;
        return os.str();
      }
      return "-";
    }

    std::string fmt_ms(double ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", ms);
      return buf;
    }

    void table_body(std::ostringstream& os, Report const& report) {
      os << "group      " << report.group_text << "  [" << report.structure << "]\n";
      os << "letters    ";
      for (std::size_t i = 0; i < report.letters.size(); ++i) {
        os << (i ? " " : "") << report.letters[i];
      }
      os << "\n\n";
      os << std::left << std::setw(6) << "R_in" << std::setw(7) << "R_out" << std::setw(11)
         << "vertices" << std::setw(8) << "inner" << "hull\n";
      for (auto const& b : report.balls) {
        os << std::setw(6) << b.radius_in << std::setw(7) << b.radius_out << std::setw(11)
           << b.vertices << std::setw(8) << b.inner << b.hull << "\n";
      }
      if (report.results.empty()) {
        return;
      }
      os << "\n"
         << std::setw(6) << "R_in" << std::setw(26) << "invariant" << std::setw(28)
         << "parameters" << std::setw(8) << "value" << std::setw(7) << "bound"
         << std::setw(12) << "examined" << "ms\n";
      for (auto const& r : report.results) {
        os << std::setw(6) << r.radius_in << std::setw(26) << r.name << std::setw(28)
           << parameters_text(r) << std::setw(8) << value_text(r) << std::setw(7)
           << to_string(r.bound) << std::setw(12) << r.sampling.examined
           << fmt_ms(r.wall_time_ms) << "\n";
        for (auto const& [k, v] : r.auxiliary) {
          os << "      " << k << " = " << half_integer(v) << "\n";
        }
        for (auto const& [k, v] : r.checks) {
          os << "      check " << k << ": " << (v ? "holds" : "FAILS") << "\n";
        }
      }
    }

  }  // namespace

  std::string emit_report(Report const& report, ReportFormat format) {
    if (format == ReportFormat::json) {
      return report_json(report).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "polyhyp " << report.version << "\n";
    table_body(os, report);
    return os.str();
  }

  std::string canonical_json(Report const& report) {
    auto j = report_json(report);
    strip_timing(j);
    return j.dump(2) + "\n";
  }

  Report report_from_json(std::string_view text) {
    try {
      auto   j = Json::parse(text);
      Report r;
      r.version    = j.at("version").get<std::string>();
      r.config     = config_from(j.at("config"));
      r.group_text = j.at("group").at("canonical").get<std::string>();
      r.structure  = j.at("group").at("structure").get<std::string>();
      r.letters    = j.at("group").at("letters").get<std::vector<std::string>>();
      for (auto const& b : j.at("balls")) {
        r.balls.push_back({b.at("radius_in").get<int>(), b.at("radius_out").get<int>(),
                           b.at("vertices").get<std::size_t>(), b.at("inner").get<std::size_t>(),
                           b.at("hull").get<std::size_t>(),
                           b.at("sphere_sizes").get<std::vector<std::size_t>>()});
      }
      for (auto const& x : j.at("results")) {
        r.results.push_back(result_from(x));
      }
      r.wall_time_ms = j.value("wall_time_ms", 0.0);
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed report: ") + e.what(), 0);
    }
  }

  std::string emit_comparison(Report const& a, Report const& b, ReportFormat format) {
    if (format == ReportFormat::json) {
      Json j;
      j["tool"]         = "polyhyp";
      j["version"]      = a.version;
      j["generators_a"] = report_json(a);
      j["generators_b"] = report_json(b);
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "polyhyp " << a.version << " generator comparison\n\n";
    os << "== generating set A\n";
    table_body(os, a);
    os << "\n== generating set B\n";
    table_body(os, b);

    os << "\n== trends (A | B)\n";
    auto const n = std::min(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto const& x = a.results[i];
      auto const& y = b.results[i];
      os << std::left << std::setw(6) << x.radius_in << std::setw(26) << x.name << std::setw(28)
         << parameters_text(x) << std::setw(8) << value_text(x) << "| " << value_text(y)
         << "\n";
    }
    return os.str();
  }

}  // namespace polyhyp
