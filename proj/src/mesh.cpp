#include <algorithm>
#include <limits>
#include <stdexcept>

#include "common.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  TriangleMesh triangle_mesh(BallGraph const&        ball,
                             DistanceMatrix const&   dist,
                             std::span<Vertex const> side0,
                             std::span<Vertex const> side1,
                             std::span<Vertex const> side2) {
    if (side0.empty() || side1.empty() || side2.empty()) {
      throw std::invalid_argument("triangle sides must be nonempty");
    }
    auto const hull = dist.size();
    auto       d    = [&](Vertex u, Vertex v) {
      return u < hull && v < hull ? dist(u, v) : ball.word_distance(u, v);
    };
    auto table = [&](std::span<Vertex const> a, std::span<Vertex const> b) {
      std::vector<int> t(a.size() * b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          t[i * b.size() + j] = d(a[i], b[j]);
        }
      }
      return t;
    };
    auto const d01 = table(side0, side1);
    auto const d02 = table(side0, side2);
    auto const d12 = table(side1, side2);

    TriangleMesh best{std::numeric_limits<int>::max(), {}};
    for (std::size_t i = 0; i < side0.size(); ++i) {
      for (std::size_t j = 0; j < side1.size(); ++j) {
        int a = d01[i * side1.size() + j];
        if (a >= best.value) {
          continue;
        }
        for (std::size_t k = 0; k < side2.size(); ++k) {
          int m = std::max({a, d02[i * side2.size() + k], d12[j * side2.size() + k]});
          if (m < best.value) {
            best = {m, {side0[i], side1[j], side2[k]}};
          }
        }
      }
    }
    return best;
  }

  namespace {

    struct MeshSearch {
      BallGraph const&                 ball;
      DistanceMatrix const&            dist;
      MeshMode                         mode;
      std::size_t                      cap;
      std::size_t                      n;
      std::vector<std::vector<std::vector<Vertex>>> candidates;
      std::vector<char>                ready;
      DetourEvaluator                  detour;
      bool                             cap_hit = false;

      MeshSearch(BallGraph const& b, DistanceMatrix const& d, MeshMode m, std::size_t c)
          : ball(b), dist(d), mode(m), cap(c), n(b.inner_size()),
            candidates(n * n), ready(n * n, 0), detour(b, d) {}

      std::vector<std::vector<Vertex>>& sides(Vertex a, Vertex b) {
        if (a > b) {
          std::swap(a, b);
        }
        auto i = std::size_t{a} * n + b;
        if (!ready[i]) {
          auto& list = candidates[i];
          if (mode == MeshMode::adversarial && a != b) {
            auto e = detour.pair(a, b);
            if (e.value > 0) {
              list.push_back(detour.detour_path(a, b, e.basepoint, e.value));
            }
          }
          auto geodesics = GeodesicDag(ball, dist, a, b).enumerate(cap);
          cap_hit        = cap_hit || geodesics.truncated;
          for (auto& g : geodesics.paths) {
            list.push_back(std::move(g.vertices));
          }
          ready[i] = 1;
        }
        return candidates[i];
      }

      struct Worst {
        int                   value = -1;
        std::array<std::size_t, 3> choice{};
        TriangleMesh          mesh;
      };

      // Worst mesh over side combinations, at most cap of them.
      Worst evaluate(std::span<Vertex const> t) {
        std::array<std::vector<std::vector<Vertex>>*, 3> s{
          &sides(t[0], t[1]), &sides(t[1], t[2]), &sides(t[2], t[0])};
        std::array<std::size_t, 3> take{s[0]->size(), s[1]->size(), s[2]->size()};
        while (take[0] * take[1] * take[2] > cap) {
          auto k = static_cast<std::size_t>(std::max_element(take.begin(), take.end())
                                            - take.begin());
          --take[k];
          cap_hit = true;
        }
        Worst w;
        for (std::size_t i = 0; i < take[0]; ++i) {
          for (std::size_t j = 0; j < take[1]; ++j) {
            for (std::size_t k = 0; k < take[2]; ++k) {
              auto m = triangle_mesh(ball, dist, (*s[0])[i], (*s[1])[j], (*s[2])[k]);
              if (m.value > w.value) {
                w = {m.value, {i, j, k}, m};
              }
            }
          }
        }
        return w;
      }
    };

    std::vector<Vertex> oriented(std::vector<Vertex> path, Vertex start) {
      if (path.front() != start) {
        std::reverse(path.begin(), path.end());
      }
      return path;
    }

  }  // namespace

  InvariantResult mesh_estimate(BallGraph const&      ball,
                                DistanceMatrix const& dist,
                                SamplingPlan const&   plan,
                                MeshMode              mode) {
    detail::Stopwatch clock;
    detail::require_hull(ball, dist);
    if (plan.geodesic_cap == 0) {
      throw std::invalid_argument("geodesic cap must be at least 1");
    }
    auto       result = detail::start_result("mesh_estimate", ball, plan, 3);
    MeshSearch search(ball, dist, mode, plan.geodesic_cap);
    auto const n = static_cast<Vertex>(ball.inner_size());
    result.parameters.emplace_back("mode", std::string(to_string(mode)));

    int                 best = -1;
    std::vector<Vertex> arg;
    MeshSearch::Worst   arg_worst;
    auto consider = [&](std::span<Vertex const> t) {
      auto w = search.evaluate(t);
      if (detail::better(w.value, t, best, arg)) {
        best      = w.value;
        arg.assign(t.begin(), t.end());
        arg_worst = w;
      }
    };
    if (plan.is_exhaustive()) {
      // Mesh depends only on the set of three sides, so sorted triples suffice.
      std::size_t count = 0;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a; b < n; ++b) {
          for (Vertex c = b; c < n; ++c) {
            std::array<Vertex, 3> t{a, b, c};
            consider(t);
            ++count;
          }
        }
      }
      result.sampling.examined = count;
    } else {
      for (auto const& t : draw_tuples(plan, 3, n)) {
        consider(t);
      }
      result.sampling.examined = plan.samples;
    }

    std::array<std::vector<Vertex>, 3> sides{
      oriented(search.sides(arg[0], arg[1])[arg_worst.choice[0]], arg[0]),
      oriented(search.sides(arg[1], arg[2])[arg_worst.choice[1]], arg[1]),
      oriented(search.sides(arg[2], arg[0])[arg_worst.choice[2]], arg[2])};
    auto check = triangle_mesh(ball, dist, sides[0], sides[1], sides[2]);
    if (check.value != best) {
      throw InvariantCheckFailure("mesh_estimate witness does not re-evaluate");
    }

    result.doubled          = 2 * std::int64_t{std::max(best, 0)};
    result.bound            = Bound::lower;
    result.sampling.cap_hit = search.cap_hit;
    // Two polygon thinness constants derived from a mesh bound mu, (3mu+1)/2
    // and (mu+1)/2; recorded for comparison, neither is checked.
    std::int64_t const mu = std::max(best, 0);
    result.auxiliary.emplace_back("polygon_delta_from_mesh_loose", 3 * mu + 1);
    result.auxiliary.emplace_back("polygon_delta_from_mesh_tight", mu + 1);
    detail::add_vertices(result.witness, ball, arg);
    for (auto const& s : sides) {
      result.witness.paths.push_back(detail::path_text(ball, s));
    }
    result.witness.paths.push_back("points: " + ball.label(check.points[0]) + ", "
                                   + ball.label(check.points[1]) + ", "
                                   + ball.label(check.points[2]));
    result.witness.note = "corners, the three sides, and the closest point triple";
    result.note = mode == MeshMode::geodesic
                    ? "geodesic triangles only; the mesh over all triangles can be larger"
                    : "adds maximal-detour sides; a heuristic lower bound on the mesh";
    result.wall_time_ms = clock.elapsed_ms();
    return result;
  }

}  // namespace polyhyp
