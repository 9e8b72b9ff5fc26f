#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "common.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  InvariantResult subgroup_quasiconvexity(BallGraph const&             ball,
                                          DistanceMatrix const&        dist,
                                          std::span<std::string const> words,
                                          std::optional<int>           epsilon) {
    detail::Stopwatch clock;
    detail::require_hull(ball, dist);
    auto result = detail::start_result("subgroup_quasiconvexity", ball, SamplingPlan::exhaustive(), 2);
    auto const& group = ball.group();

    std::string joined;
    std::vector<Element> gens;
    int                  m = 0;
    for (auto const& w : words) {
      joined += (joined.empty() ? "" : ",") + w;
      auto e = group.parse_word(w);
      auto v = ball.find(e);
      if (!v) {
        throw OutsideBall("subgroup generator " + w + " lies outside the ball");
      }
      m = std::max(m, ball.norm(*v));
      if (!group.is_identity(e)) {
        gens.push_back(e);
        gens.push_back(group.invert(e));
      }
    }
    result.parameters.emplace_back("generators", joined);

    // H within the ball, reached by right multiplication from the identity.
    std::vector<char>   in_h(ball.size(), 0);
    std::vector<Vertex> members{0};
    in_h[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      auto const& h = ball.element(members[head]);
      for (auto const& b : gens) {
        auto v = ball.find(group.multiply(h, b));
        if (v && !in_h[*v]) {
          in_h[*v] = 1;
          members.push_back(*v);
        }
      }
    }

    // Distance to H along paths inside the ball.
    auto const                 unseen = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> to_h(ball.size(), unseen);
    std::vector<Vertex>        queue = members;
    for (auto v : members) {
      to_h[v] = 0;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto const& e : ball.neighbors(u)) {
        if (to_h[e.target] == unseen) {
          to_h[e.target] = static_cast<std::uint16_t>(to_h[u] + 1);
          queue.push_back(e.target);
        }
      }
    }

    std::vector<Vertex> inner_h;
    for (Vertex v = 0; v < ball.inner_size(); ++v) {
      if (in_h[v]) {
        inner_h.push_back(v);
      }
    }
    int    q = 0;
    Vertex bh = 0, bk = 0, bp = 0;
    std::size_t examined = 0;
    for (std::size_t i = 0; i < inner_h.size(); ++i) {
      for (std::size_t j = i; j < inner_h.size(); ++j) {
        ++examined;
        for (auto p : interval(dist, inner_h[i], inner_h[j]).members) {
          if (to_h[p] > q) {
            q  = to_h[p];
            bh = inner_h[i];
            bk = inner_h[j];
            bp = p;
          }
        }
      }
    }
    result.sampling.examined = examined;

    int  direct = std::numeric_limits<int>::max();
    auto from_p = bfs_distances(ball, bp, 2 * ball.radius_out() + 1);
    for (auto h : members) {
      direct = std::min<int>(direct, from_p[h]);
    }
    if (direct != q) {
      throw InvariantCheckFailure("subgroup_quasiconvexity witness does not re-evaluate");
    }

    result.doubled = 2 * std::int64_t{q};
    result.bound   = Bound::exact;
    result.auxiliary.emplace_back("M", 2 * std::int64_t{m});
    if (epsilon) {
      result.auxiliary.emplace_back("epsilon", 2 * std::int64_t{*epsilon});
      result.checks.emplace_back("q_le_epsilon_plus_M", q <= *epsilon + m);
    }
    detail::add_vertices(result.witness, ball, std::vector<Vertex>{bh, bk, bp});
    auto g = GeodesicDag(ball, dist, bh, bk).through(bp);
    result.witness.paths.push_back(detail::path_text(ball, g.vertices));
    result.witness.note = "subgroup elements h, h' and the geodesic vertex p farthest from H";
    result.note = "H has " + std::to_string(members.size())
                  + " elements in the ball, found by closure inside the ball";
    result.wall_time_ms = clock.elapsed_ms();
    return result;
  }

  double h2_center_distance(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw std::domain_error("h2_center_distance needs 0 <= r < 1");
    }
    // ln((1 + r) / (1 - r)), written to stay accurate near both ends.
    return std::log1p(r) - std::log1p(-r);
  }

}  // namespace polyhyp
