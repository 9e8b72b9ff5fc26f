#include <algorithm>
#include <limits>
#include <stdexcept>

#include "common.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  PolygonEvaluator::PolygonEvaluator(BallGraph const&      ball,
                                     DistanceMatrix const& dist,
                                     SideMode              mode,
                                     std::size_t           geodesic_cap)
      : _ball(ball), _dist(dist), _mode(mode), _cap(geodesic_cap), _n(ball.inner_size()) {
    detail::require_hull(ball, dist);
    if (geodesic_cap == 0) {
      throw std::invalid_argument("geodesic cap must be at least 1");
    }
    _pairs.resize(_n * _n);
  }

  PolygonEvaluator::PairData& PolygonEvaluator::pair(Vertex a, Vertex b) {
    if (a > b) {
      std::swap(a, b);
    }
    auto& pd = _pairs[std::size_t{a} * _n + b];
    if (pd.ready) {
      return pd;
    }
    auto const  hull = _ball.hull_size();
    GeodesicDag dag(_ball, _dist, a, b);
    pd.reach.assign(hull, 0);
    switch (_mode) {
      case SideMode::all:
        for (std::size_t p = 0; p < hull; ++p) {
          pd.reach[p] = static_cast<std::uint16_t>(dag.widest(_dist.row(p)));
        }
        pd.last.assign(dag.nodes().begin(), dag.nodes().end());
        break;
      case SideMode::interval:
        for (std::size_t p = 0; p < hull; ++p) {
          int m = std::numeric_limits<int>::max();
          for (auto w : dag.nodes()) {
            m = std::min(m, _dist(p, w));
          }
          pd.reach[p] = static_cast<std::uint16_t>(m);
        }
        pd.last.assign(dag.nodes().begin(), dag.nodes().end());
        break;
      case SideMode::enumerate: {
        auto list = dag.enumerate(_cap);
        _cap_hit  = _cap_hit || list.truncated;
        pd.paths  = std::move(list.paths);
        for (std::size_t p = 0; p < hull; ++p) {
          int best = 0;
          for (auto const& path : pd.paths) {
            int m = std::numeric_limits<int>::max();
            for (auto w : path.vertices) {
              m = std::min(m, _dist(p, w));
            }
            best = std::max(best, m);
          }
          pd.reach[p] = static_cast<std::uint16_t>(best);
        }
        for (auto const& path : pd.paths) {
          pd.last.insert(pd.last.end(), path.vertices.begin(), path.vertices.end());
        }
        break;
      }
    }
    std::sort(pd.last.begin(), pd.last.end());
    pd.last.erase(std::unique(pd.last.begin(), pd.last.end()), pd.last.end());
    pd.ready = true;
    return pd;
  }

  namespace {
    void check_corners(std::span<Vertex const> corners, std::size_t inner) {
      if (corners.size() < 2) {
        throw std::invalid_argument("a polygon needs at least two corners");
      }
      for (auto v : corners) {
        if (v >= inner) {
          throw std::invalid_argument("polygon corners must lie in the inner ball");
        }
      }
    }
  }  // namespace

  int PolygonEvaluator::evaluate(std::span<Vertex const> corners) {
    check_corners(corners, _n);
    auto const n = corners.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      pair(corners[i], corners[i + 1]);
    }
    auto const& last = pair(corners[n], corners[0]).last;
    int         best = 0;
    for (auto p : last) {
      int m = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < n && m > best; ++i) {
        m = std::min<int>(m, pair(corners[i], corners[i + 1]).reach[p]);
      }
      best = std::max(best, m);
    }
    return best;
  }

  GeodesicPath PolygonEvaluator::side_for(Vertex a, Vertex b, Vertex p) {
    if (_mode != SideMode::enumerate) {
      return GeodesicDag(_ball, _dist, a, b).widest_path(_dist.row(p));
    }
    auto const& pd   = pair(a, b);
    auto const* best = &pd.paths.front();
    int         top  = -1;
    for (auto const& path : pd.paths) {
      int m = std::numeric_limits<int>::max();
      for (auto w : path.vertices) {
        m = std::min(m, _dist(p, w));
      }
      if (m > top) {
        top  = m;
        best = &path;
      }
    }
    return best->front() == a ? *best : best->reversed();
  }

  GeodesicPath PolygonEvaluator::last_side_through(Vertex a, Vertex b, Vertex p) {
    if (_mode != SideMode::enumerate) {
      return GeodesicDag(_ball, _dist, a, b).through(p);
    }
    for (auto const& path : pair(a, b).paths) {
      if (std::find(path.vertices.begin(), path.vertices.end(), p) != path.vertices.end()) {
        return path.front() == a ? path : path.reversed();
      }
    }
    throw InvariantCheckFailure("basepoint is on no enumerated geodesic");
  }

  Polygon PolygonEvaluator::witness(std::span<Vertex const> corners) {
    int const   target = evaluate(corners);
    auto const  n      = corners.size() - 1;
    Vertex      best_p = 0;
    bool        found  = false;
    for (auto p : pair(corners[n], corners[0]).last) {
      int m = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < n; ++i) {
        m = std::min<int>(m, pair(corners[i], corners[i + 1]).reach[p]);
      }
      if (m == target) {
        best_p = p;
        found  = true;
        break;
      }
    }
    if (!found) {
      throw InvariantCheckFailure("polygon witness basepoint not found");
    }
    Polygon poly;
    for (std::size_t i = 0; i < n; ++i) {
      poly.sides.push_back(side_for(corners[i], corners[i + 1], best_p));
    }
    poly.sides.push_back(last_side_through(corners[n], corners[0], best_p));
    return poly;
  }

  std::vector<PolygonEvaluator::Extremum> PolygonEvaluator::exhaustive(std::size_t n_max) {
    std::vector<Extremum> out(n_max);
    if (n_max == 0) {
      return out;
    }
    auto const n = static_cast<Vertex>(_n);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a; b < n; ++b) {
        pair(a, b);
      }
    }
    struct Best {
      int    value = -1;
      Vertex p = 0, a = 0, b = 0;
    };
    std::vector<Best> best(n_max);

    std::size_t const nn = std::size_t{n} * n;
    std::vector<char> mask(nn);
    std::vector<int>  w(nn), power(nn), next(nn);
    auto reach = [&](Vertex a, Vertex b, Vertex p) -> int {
      return _pairs[a <= b ? std::size_t{a} * n + b : std::size_t{b} * n + a].reach[p];
    };
    auto multiply = [&](std::vector<int> const& lhs, std::vector<int>& dst) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          int m = 0;
          for (Vertex z = 0; z < n; ++z) {
            m = std::max(m, std::min(lhs[a * std::size_t{n} + z], w[z * std::size_t{n} + b]));
          }
          dst[a * std::size_t{n} + b] = m;
        }
      }
    };

    for (Vertex p = 0; p < _ball.hull_size(); ++p) {
      bool any = false;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          auto const& last = _pairs[a <= b ? std::size_t{a} * n + b : std::size_t{b} * n + a].last;
          bool        on   = std::binary_search(last.begin(), last.end(), p);
          mask[a * std::size_t{n} + b] = on;
          any                         = any || on;
        }
      }
      if (!any) {
        continue;
      }
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          w[a * std::size_t{n} + b] = reach(a, b, p);
        }
      }
      power = w;
      for (std::size_t k = 0; k < n_max; ++k) {
        if (k > 0) {
          multiply(power, next);
          std::swap(power, next);
        }
        for (Vertex a = 0; a < n; ++a) {
          for (Vertex b = 0; b < n; ++b) {
            auto i = a * std::size_t{n} + b;
            if (mask[i] && power[i] > best[k].value) {
              best[k] = {power[i], p, a, b};
            }
          }
        }
      }
    }

    // Rebuild one chain per n by walking the powers of the best basepoint
    // backwards, taking the smallest admissible corner at each step.
    for (std::size_t k = 0; k < n_max; ++k) {
      auto const& bk = best[k];
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          w[a * std::size_t{n} + b] = reach(a, b, bk.p);
        }
      }
      std::vector<std::vector<int>> powers{w};
      for (std::size_t j = 1; j < k; ++j) {
        multiply(powers.back(), next);
        powers.push_back(next);
      }
      std::vector<Vertex> chain{bk.b};
      for (std::size_t j = k; j > 0; --j) {
        auto const& prev = powers[j - 1];
        Vertex      cur  = chain.back();
        Vertex      z    = 0;
        while (z < n && !(prev[bk.a * std::size_t{n} + z] >= bk.value
                          && w[z * std::size_t{n} + cur] >= bk.value)) {
          ++z;
        }
        if (z == n) {
          throw InvariantCheckFailure("polygon chain reconstruction failed");
        }
        chain.push_back(z);
      }
      chain.push_back(bk.a);
      std::reverse(chain.begin(), chain.end());
      out[k] = {std::max(bk.value, 0), std::move(chain)};
    }
    return out;
  }

  namespace {

    void fill_polygon_witness(InvariantResult&      r,
                              BallGraph const&      ball,
                              DistanceMatrix const& dist,
                              PolygonEvaluator&     ev,
                              std::vector<Vertex> const& corners,
                              int                   value) {
      if (ev.evaluate(corners) != value) {
        throw InvariantCheckFailure(r.name + " witness does not re-evaluate");
      }
      auto poly = ev.witness(corners);
      int  thin = polygon_thinness(dist, poly);
      bool ok   = ev.mode() == SideMode::interval ? thin >= value : thin == value;
      if (!ok) {
        throw InvariantCheckFailure(r.name + " witness polygon has the wrong thinness");
      }
      detail::add_vertices(r.witness, ball, corners);
      for (auto const& side : poly.sides) {
        r.witness.paths.push_back(detail::path_text(ball, side.vertices));
      }
      r.witness.note = "corners x_0..x_n; sides x_i -> x_{i+1}, the last side x_n -> x_0";
    }

    std::vector<InvariantResult> polygon_results(std::string const&    name,
                                                 BallGraph const&      ball,
                                                 DistanceMatrix const& dist,
                                                 std::size_t           n_lo,
                                                 std::size_t           n_hi,
                                                 SamplingPlan const&   plan,
                                                 SideMode              mode) {
      detail::Stopwatch clock;
      if (n_lo < 1 || n_hi < n_lo) {
        throw std::invalid_argument("polygon size n must be at least 1");
      }
      if (n_hi + 1 > ball.inner_size()) {
        throw std::invalid_argument("polygon corner count exceeds the inner vertex count");
      }
      PolygonEvaluator             ev(ball, dist, mode, plan.geodesic_cap);
      std::vector<InvariantResult> out;

      std::vector<PolygonEvaluator::Extremum> found;
      std::vector<std::size_t>                examined;
      if (plan.is_exhaustive()) {
        auto all = ev.exhaustive(n_hi);
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
          found.push_back(all[n - 1]);
          std::size_t count = 1;
          for (std::size_t i = 0; i <= n; ++i) {
            count *= ball.inner_size();
          }
          examined.push_back(count);
        }
      } else {
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
          PolygonEvaluator::Extremum e{-1, {}};
          for (auto const& t : draw_tuples(plan, n + 1, ball.inner_size())) {
            int v = ev.evaluate(t);
            if (detail::better(v, t, e.value, e.corners)) {
              e = {v, t};
            }
          }
          found.push_back(std::move(e));
          examined.push_back(plan.samples);
        }
      }

      double const elapsed = clock.elapsed_ms() / static_cast<double>(found.size());
      for (std::size_t i = 0; i < found.size(); ++i) {
        auto const n = n_lo + i;
        auto       r = detail::start_result(name, ball, plan, n + 1);
        r.parameters.emplace_back("n", std::to_string(n));
        r.parameters.emplace_back("geodesic_mode", std::string(to_string(mode)));
        r.sampling.examined = examined[i];
        if (!found[i].corners.empty()) {
          fill_polygon_witness(r, ball, dist, ev, found[i].corners, found[i].value);
        }
        r.doubled = 2 * std::int64_t{std::max(found[i].value, 0)};
        out.push_back(std::move(r));
      }
      // Caps may bind during any evaluation, so bounds are set last.
      for (auto& r : out) {
        r.sampling.cap_hit = ev.cap_hit();
        r.bound = mode == SideMode::interval ? Bound::lower : bound_for(plan, ev.cap_hit());
        r.wall_time_ms = elapsed;
      }
      return out;
    }

  }  // namespace

  InvariantResult polygon_delta(BallGraph const&      ball,
                                DistanceMatrix const& dist,
                                std::size_t           n,
                                SamplingPlan const&   plan,
                                SideMode              mode) {
    return polygon_results("polygon_delta", ball, dist, n, n, plan, mode).front();
  }

  std::vector<InvariantResult> polygon_delta_range(BallGraph const&      ball,
                                                   DistanceMatrix const& dist,
                                                   std::size_t           n_lo,
                                                   std::size_t           n_hi,
                                                   SamplingPlan const&   plan,
                                                   SideMode              mode) {
    return polygon_results("polygon_delta", ball, dist, n_lo, n_hi, plan, mode);
  }

  InvariantResult rips_delta(BallGraph const&      ball,
                             DistanceMatrix const& dist,
                             SamplingPlan const&   plan,
                             SideMode              mode) {
    auto r = polygon_results("rips_delta", ball, dist, 2, 2, plan, mode).front();
    r.parameters.erase(r.parameters.begin());
    return r;
  }

  int bigon_sync_pair(GeodesicDag const&    dag,
                      DistanceMatrix const& dist,
                      SideMode              mode,
                      std::size_t           geodesic_cap,
                      bool*                 cap_hit) {
    int best = 0;
    if (mode != SideMode::enumerate) {
      auto nodes = dag.nodes();
      for (std::size_t t = 0; t <= dag.length(); ++t) {
        auto [lo, hi] = dag.layer(t);
        for (auto i = lo; i < hi; ++i) {
          for (auto j = i + 1; j < hi; ++j) {
            best = std::max(best, dist(nodes[i], nodes[j]));
          }
        }
      }
      return best;
    }
    auto list = dag.enumerate(geodesic_cap);
    if (cap_hit && list.truncated) {
      *cap_hit = true;
    }
    for (std::size_t i = 0; i < list.paths.size(); ++i) {
      for (std::size_t j = i + 1; j < list.paths.size(); ++j) {
        auto const& u = list.paths[i].vertices;
        auto const& v = list.paths[j].vertices;
        for (std::size_t t = 0; t < u.size(); ++t) {
          best = std::max(best, dist(u[t], v[t]));
        }
      }
    }
    return best;
  }

  BigonConstants bigon_constants(BallGraph const&      ball,
                                 DistanceMatrix const& dist,
                                 SamplingPlan const&   plan,
                                 SideMode              mode) {
    detail::Stopwatch clock;
    PolygonEvaluator  ev(ball, dist, mode, plan.geodesic_cap);
    BigonConstants    out{detail::start_result("bigon_async", ball, plan, 2),
                       detail::start_result("bigon_sync", ball, plan, 2), 0, 0};
    auto const        n = ball.inner_size();

    std::vector<std::vector<Vertex>> pairs;
    if (plan.is_exhaustive()) {
      // Bigon values are symmetric in the endpoints.
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x; y < n; ++y) {
          pairs.push_back({x, y});
        }
      }
    } else {
      pairs = draw_tuples(plan, 2, n);
    }

    bool                sync_cap = false;
    int                 best_a = -1, best_s = -1;
    std::vector<Vertex> arg_a, arg_s;
    for (auto const& t : pairs) {
      int         a = ev.evaluate(t);
      GeodesicDag dag(ball, dist, t[0], t[1]);
      int         s = bigon_sync_pair(dag, dist, mode, plan.geodesic_cap, &sync_cap);
      if (s > 2 * a) {
        ++out.fellow_traveler_violations;
      }
      if (detail::better(a, t, best_a, arg_a)) {
        best_a = a;
        arg_a  = t;
      }
      if (detail::better(s, t, best_s, arg_s)) {
        best_s = s;
        arg_s  = t;
      }
    }
    out.pairs_checked = pairs.size();

    for (auto* r : {&out.async, &out.sync}) {
      r->parameters.emplace_back("geodesic_mode", std::string(to_string(mode)));
      r->sampling.examined = pairs.size();
    }
    fill_polygon_witness(out.async, ball, dist, ev, arg_a, best_a);
    out.async.doubled = 2 * std::int64_t{std::max(best_a, 0)};
    out.async.witness.note = "endpoints x, y; the second side strays farthest from the first";

    {
      GeodesicDag dag(ball, dist, arg_s[0], arg_s[1]);
      if (bigon_sync_pair(dag, dist, mode, plan.geodesic_cap) != best_s) {
        throw InvariantCheckFailure("bigon_sync witness does not re-evaluate");
      }
      detail::add_vertices(out.sync.witness, ball, arg_s);
      // Two interval vertices on a common level, each on some geodesic.
      auto nodes = dag.nodes();
      for (std::size_t t = 0; t <= dag.length() && out.sync.witness.paths.empty(); ++t) {
        auto [lo, hi] = dag.layer(t);
        for (auto i = lo; i < hi && out.sync.witness.paths.empty(); ++i) {
          for (auto j = i + 1; j < hi; ++j) {
            if (dist(nodes[i], nodes[j]) == best_s && mode != SideMode::enumerate) {
              for (auto v : {nodes[i], nodes[j]}) {
                auto g = dag.through(v);
                out.sync.witness.paths.push_back(detail::path_text(ball, g.vertices));
              }
              out.sync.witness.note = "endpoints x, y; the geodesics separate most at t = "
                                      + std::to_string(t);
              break;
            }
          }
        }
      }
      if (out.sync.witness.note.empty()) {
        out.sync.witness.note = "endpoints x, y";
      }
    }
    out.sync.doubled = 2 * std::int64_t{std::max(best_s, 0)};

    bool const cap = ev.cap_hit() || sync_cap;
    for (auto* r : {&out.async, &out.sync}) {
      r->sampling.cap_hit = cap;
      r->bound = mode == SideMode::interval ? Bound::lower : bound_for(plan, cap);
      r->checks.emplace_back("sync_le_2_async", out.fellow_traveler_violations == 0);
      r->note = std::to_string(out.fellow_traveler_violations) + " of "
                + std::to_string(out.pairs_checked) + " pairs have sync > 2 * async";
      r->wall_time_ms = clock.elapsed_ms() / 2;
    }
    return out;
  }

}  // namespace polyhyp
