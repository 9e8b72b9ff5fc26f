#include <algorithm>
#include <limits>
#include <stdexcept>

#include "common.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  int four_point_defect2(DistanceMatrix const& dist, Vertex x0, Vertex x1, Vertex x2, Vertex p) {
    int const a = gromov_product2(dist, x0, x1, p);
    int const b = gromov_product2(dist, x1, x2, p);
    int const c = gromov_product2(dist, x0, x2, p);
    return std::max(0, std::min(a, b) - c);
  }

  InvariantResult four_point_delta(BallGraph const&      ball,
                                   DistanceMatrix const& dist,
                                   SamplingPlan const&   plan) {
    detail::Stopwatch clock;
    auto              result = detail::start_result("four_point_delta", ball, plan, 4);
    auto const        n      = static_cast<Vertex>(ball.inner_size());
    if (dist.size() < n) {
      throw std::invalid_argument("distance matrix must cover the inner ball");
    }

    int                 best = -1;
    std::vector<Vertex> arg(4, 0);
    if (plan.is_exhaustive()) {
      for (Vertex x0 = 0; x0 < n; ++x0) {
        for (Vertex x1 = 0; x1 < n; ++x1) {
          for (Vertex x2 = 0; x2 < n; ++x2) {
            for (Vertex p = 0; p < n; ++p) {
              int v = four_point_defect2(dist, x0, x1, x2, p);
              if (v > best) {
                best = v;
                arg  = {x0, x1, x2, p};
              }
            }
          }
        }
      }
      result.sampling.examined = std::size_t{n} * n * n * n;
    } else {
      for (auto const& t : draw_tuples(plan, 4, n)) {
        int v = four_point_defect2(dist, t[0], t[1], t[2], t[3]);
        if (detail::better(v, t, best, arg)) {
          best = v;
          arg  = t;
        }
      }
      result.sampling.examined = plan.samples;
    }
    best = std::max(best, 0);
    if (four_point_defect2(dist, arg[0], arg[1], arg[2], arg[3]) != best) {
      throw InvariantCheckFailure("four_point_delta witness does not re-evaluate");
    }

    result.doubled = best;
    result.bound   = bound_for(plan, false);
    detail::add_vertices(result.witness, ball, arg);
    result.witness.note = "x, y, z, p with (x|z)_p = min((x|y)_p, (y|z)_p) - delta";
    result.wall_time_ms = clock.elapsed_ms();
    return result;
  }

  std::int64_t chain_width2(DistanceMatrix const& dist, std::span<Vertex const> chain, Vertex p) {
    if (chain.size() < 2) {
      throw std::invalid_argument("chain needs at least two points");
    }
    std::int64_t w = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      w = std::min<std::int64_t>(w, gromov_product2(dist, chain[i], chain[i + 1], p));
    }
    return w;
  }

  namespace {

    // Maximum spanning tree of the complete graph on 0..n-1 weighted by
    // doubled Gromov products at p, as a parent array rooted at 0.
    std::vector<Vertex> max_spanning_tree(DistanceMatrix const& dist, Vertex n, Vertex p) {
      std::vector<Vertex> parent(n, 0);
      std::vector<int>    key(n, std::numeric_limits<int>::min());
      std::vector<char>   in_tree(n, 0);
      key[0] = std::numeric_limits<int>::max();
      for (Vertex step = 0; step < n; ++step) {
        Vertex u = n;
        for (Vertex v = 0; v < n; ++v) {
          if (!in_tree[v] && (u == n || key[v] > key[u])) {
            u = v;
          }
        }
        in_tree[u] = 1;
        for (Vertex v = 0; v < n; ++v) {
          if (!in_tree[v]) {
            int w = gromov_product2(dist, u, v, p);
            if (w > key[v]) {
              key[v]    = w;
              parent[v] = u;
            }
          }
        }
      }
      return parent;
    }

    ChainExtremum bottleneck(DistanceMatrix const& dist, Vertex n, Vertex p) {
      ChainExtremum best;
      best.basepoint = p;
      if (n < 2) {
        best.chain = {0, 0};
        return best;
      }
      auto                             parent = max_spanning_tree(dist, n, p);
      std::vector<std::vector<Vertex>> adj(n);
      for (Vertex v = 1; v < n; ++v) {
        adj[v].push_back(parent[v]);
        adj[parent[v]].push_back(v);
      }

      std::int64_t        top = -1;
      Vertex              bx = 0, by = 1;
      std::vector<Vertex> from(n);
      std::vector<int>    width(n);
      std::vector<Vertex> stack;
      for (Vertex x = 0; x < n; ++x) {
        std::fill(from.begin(), from.end(), n);
        from[x]  = x;
        width[x] = std::numeric_limits<int>::max();
        stack    = {x};
        while (!stack.empty()) {
          auto u = stack.back();
          stack.pop_back();
          for (auto v : adj[u]) {
            if (from[v] == n) {
              from[v]  = u;
              width[v] = std::min(width[u], gromov_product2(dist, u, v, p));
              stack.push_back(v);
            }
          }
        }
        for (Vertex y = x + 1; y < n; ++y) {
          std::int64_t d = width[y] - gromov_product2(dist, x, y, p);
          if (d > top) {
            top = d;
            bx  = x;
            by  = y;
          }
        }
      }

      // Recover the tree path bx -> by.
      std::fill(from.begin(), from.end(), n);
      from[bx] = bx;
      stack    = {bx};
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : adj[u]) {
          if (from[v] == n) {
            from[v] = u;
            stack.push_back(v);
          }
        }
      }
      std::vector<Vertex> chain;
      for (Vertex v = by; v != bx; v = from[v]) {
        chain.push_back(v);
      }
      chain.push_back(bx);
      std::reverse(chain.begin(), chain.end());
      best.doubled = top;
      best.chain   = std::move(chain);
      return best;
    }

    struct Brute {
      DistanceMatrix const& dist;
      Vertex                n;
      Vertex                p;
      std::size_t           max_len;
      std::vector<int>      reach;  // widest value to each endpoint
      std::vector<Vertex>   path;
      Vertex                target = 0;
      int                   want   = 0;
      std::vector<Vertex>   found;

      void walk(Vertex u, int width, std::size_t steps) {
        for (Vertex v = 0; v < n; ++v) {
          int w = std::min(width, gromov_product2(dist, u, v, p));
          reach[v] = std::max(reach[v], w);
          if (steps + 1 < max_len) {
            walk(v, w, steps + 1);
          }
        }
      }

      bool search(Vertex u, int width, std::size_t steps) {
        for (Vertex v = 0; v < n; ++v) {
          int w = std::min(width, gromov_product2(dist, u, v, p));
          path.push_back(v);
          if (v == target && w == want) {
            found = path;
            return true;
          }
          if (w >= want && steps + 1 < max_len && search(v, w, steps + 1)) {
            return true;
          }
          path.pop_back();
        }
        return false;
      }
    };

    ChainExtremum bruteforce(DistanceMatrix const& dist, Vertex n, Vertex p, std::size_t max_len) {
      ChainExtremum best;
      best.basepoint = p;
      if (n < 2) {
        best.chain = {0, 0};
        return best;
      }
      Brute        b{dist, n, p, max_len, {}, {}, 0, 0, {}};
      std::int64_t top = -1;
      Vertex       bx = 0, by = 1;
      int          bw = 0;
      for (Vertex x = 0; x < n; ++x) {
        b.reach.assign(n, std::numeric_limits<int>::min());
        b.walk(x, std::numeric_limits<int>::max(), 0);
        for (Vertex y = x + 1; y < n; ++y) {
          std::int64_t d = b.reach[y] - gromov_product2(dist, x, y, p);
          if (d > top) {
            top = d;
            bx  = x;
            by  = y;
            bw  = b.reach[y];
          }
        }
      }
      b.target = by;
      b.want   = bw;
      b.path   = {bx};
      if (!b.search(bx, std::numeric_limits<int>::max(), 0)) {
        throw InvariantCheckFailure("chain enumeration lost its extremal chain");
      }
      best.doubled = top;
      best.chain   = std::move(b.found);
      return best;
    }

  }  // namespace

  ChainExtremum chain_defect_at(DistanceMatrix const& dist,
                                std::size_t           vertices,
                                Vertex                p,
                                ChainOptions const&   options) {
    if (vertices > dist.size() || p >= dist.size()) {
      throw std::invalid_argument("chain defect range exceeds the distance matrix");
    }
    auto const n = static_cast<Vertex>(vertices);
    if (options.method == ChainMethod::bottleneck) {
      return bottleneck(dist, n, p);
    }
    if (options.max_length < 1) {
      throw std::invalid_argument("chain length must be at least 1");
    }
    return bruteforce(dist, n, p, options.max_length);
  }

  InvariantResult chain_defect(BallGraph const&      ball,
                               DistanceMatrix const& dist,
                               ChainOptions const&   options) {
    detail::Stopwatch clock;
    auto              result =
      detail::start_result("chain_defect", ball, SamplingPlan::exhaustive(), 2);
    auto const n = static_cast<Vertex>(ball.inner_size());
    bool const brute = options.method == ChainMethod::bruteforce;
    result.parameters.emplace_back("method", brute ? "bruteforce" : "bottleneck");
    if (brute) {
      result.parameters.emplace_back("max_length", std::to_string(options.max_length));
    }

    Vertex lo = 0, hi = n;
    if (options.basepoint) {
      if (*options.basepoint >= n) {
        throw std::invalid_argument("basepoint must lie in the inner ball");
      }
      lo = *options.basepoint;
      hi = lo + 1;
      result.parameters.emplace_back("basepoint", ball.label(lo));
    }

    ChainExtremum best;
    best.doubled = -1;
    for (Vertex p = lo; p < hi; ++p) {
      auto e = chain_defect_at(dist, n, p, options);
      if (e.doubled > best.doubled) {
        best = std::move(e);
      }
    }
    result.sampling.examined = std::size_t{hi - lo} * n * n;

    auto const& c = best.chain;
    if (n >= 2 && chain_width2(dist, c, best.basepoint)
                      - gromov_product2(dist, c.front(), c.back(), best.basepoint)
                    != best.doubled) {
      throw InvariantCheckFailure("chain_defect witness does not re-evaluate");
    }

    result.doubled = std::max<std::int64_t>(best.doubled, 0);
    // Chains of bounded length only bound the unrestricted defect from below.
    result.bound = brute ? Bound::lower : Bound::exact;
    result.witness.vertices.push_back(ball.label(best.basepoint));
    detail::add_vertices(result.witness, ball, c);
    result.witness.note = "basepoint p, then the chain x_0, ..., x_n";
    result.wall_time_ms = clock.elapsed_ms();
    return result;
  }

}  // namespace polyhyp
