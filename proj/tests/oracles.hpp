// Brute-force reference implementations for the tests.
//
// Nothing here calls the library's distance tables, geodesic DAG or
// invariant code.  Distances come from closed forms on normal forms,
// geodesics from a plain depth-first walk guided by those closed forms,
// and extremal values from literal enumeration.

#ifndef POLYHYP_TESTS_ORACLES_HPP_
#define POLYHYP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyhyp/ball.hpp"

namespace oracle {

  using polyhyp::BallGraph;
  using polyhyp::Element;
  using polyhyp::Vertex;

  using Metric = std::function<int(Vertex, Vertex)>;
  using Path   = std::vector<Vertex>;

  inline std::pair<long, long> grid_point(Element const& e) {
    auto const& c = std::get<polyhyp::Components>(e.form).values;
    return {static_cast<long>(std::get<polyhyp::Residue>(c[0].form).value),
            static_cast<long>(std::get<polyhyp::Residue>(c[1].form).value)};
  }

  // L1 distance on Z x Z.
  inline Metric grid_metric(BallGraph const& ball) {
    return [&ball](Vertex u, Vertex v) {
      auto [a, b] = grid_point(ball.element(u));
      auto [c, d] = grid_point(ball.element(v));
      return static_cast<int>(std::labs(a - c) + std::labs(b - d));
    };
  }

  // Reduced length of u^-1 v for reduced words u and v: both minus twice
  // their common prefix.
  inline Metric free_metric(BallGraph const& ball) {
    return [&ball](Vertex u, Vertex v) {
      auto const& x = std::get<polyhyp::FreeWord>(ball.element(u).form).letters;
      auto const& y = std::get<polyhyp::FreeWord>(ball.element(v).form).letters;
      std::size_t k = 0;
      while (k < x.size() && k < y.size() && x[k] == y[k]) {
        ++k;
      }
      return static_cast<int>(x.size() + y.size() - 2 * k);
    };
  }

  inline Metric cyclic_metric(BallGraph const& ball, long n) {
    return [&ball, n](Vertex u, Vertex v) {
      long a = std::get<polyhyp::Residue>(ball.element(u).form).value;
      long b = std::get<polyhyp::Residue>(ball.element(v).form).value;
      long k = ((a - b) % n + n) % n;
      return static_cast<int>(std::min(k, n - k));
    };
  }

  // Z2 * Z3 words over s, t, T = t^-1, reduced by rewriting.
  inline std::string z2z3_reduce(std::string w) {
    std::string out;
    for (char c : w) {
      if (c == 'T') {
        out += "tt";
      } else {
        out += c;
      }
      bool changed = true;
      while (changed) {
        changed = false;
        if (out.size() >= 2 && out.compare(out.size() - 2, 2, "ss") == 0) {
          out.resize(out.size() - 2);
          changed = true;
        } else if (out.size() >= 3 && out.compare(out.size() - 3, 3, "ttt") == 0) {
          out.resize(out.size() - 3);
          changed = true;
        }
      }
    }
    return out;
  }

  // Letters of a label such as "t^2.s.t" as a string over s, t.
  inline std::string z2z3_letters(std::string const& label) {
    if (label == "1") {
      return "";
    }
    std::string out;
    for (std::size_t i = 0; i < label.size(); ++i) {
      char c = label[i];
      if (c == 's' || c == 't') {
        int k = 1;
        if (i + 1 < label.size() && label[i + 1] == '^') {
          k = label[i + 2] - '0';
          i += 2;
        }
        out.append(static_cast<std::size_t>(k), c);
      }
    }
    return z2z3_reduce(out);
  }

  inline std::string z2z3_inverse(std::string const& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out += *it == 's' ? "s" : "tt";
    }
    return z2z3_reduce(out);
  }

  // Word length: one per syllable, since t^2 = t^-1 is a single letter.
  inline int z2z3_length(std::string const& reduced) {
    int n = 0;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (i == 0 || reduced[i] != reduced[i - 1]) {
        ++n;
      }
    }
    return n;
  }

  inline Metric z2z3_metric(BallGraph const& ball) {
    return [&ball](Vertex u, Vertex v) {
      auto w = z2z3_reduce(z2z3_inverse(z2z3_letters(ball.label(u))) + z2z3_letters(ball.label(v)));
      return z2z3_length(w);
    };
  }

  // Every geodesic u -> v: walk neighbours that step one closer to v.
  inline std::vector<Path> all_geodesics(BallGraph const& ball, Metric const& d, Vertex u, Vertex v) {
    std::vector<Path> out;
    Path              path{u};
    std::function<void(Vertex)> walk = [&](Vertex w) {
      if (w == v) {
        out.push_back(path);
        return;
      }
      std::set<Vertex> seen;
      for (auto const& e : ball.neighbors(w)) {
        if (d(e.target, v) + 1 == d(w, v) && seen.insert(e.target).second) {
          path.push_back(e.target);
          walk(e.target);
          path.pop_back();
        }
      }
    };
    walk(u);
    return out;
  }

  inline int set_distance(Metric const& d, Vertex p, std::vector<Vertex> const& z) {
    int best = std::numeric_limits<int>::max();
    for (auto w : z) {
      best = std::min(best, d(p, w));
    }
    return best;
  }

  // Thinness of one explicit polygon: max over the last side of the distance
  // to the union of the others.
  inline int thinness(Metric const& d, std::vector<Path> const& sides) {
    std::vector<Vertex> z;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
      z.insert(z.end(), sides[i].begin(), sides[i].end());
    }
    int worst = 0;
    for (auto p : sides.back()) {
      worst = std::max(worst, set_distance(d, p, z));
    }
    return worst;
  }

  // Worst thinness over every combination of geodesic sides.
  inline int worst_polygon(BallGraph const& ball, Metric const& d, std::vector<Vertex> const& corners) {
    auto const                     n = corners.size();
    std::vector<std::vector<Path>> choices;
    for (std::size_t i = 0; i < n; ++i) {
      choices.push_back(all_geodesics(ball, d, corners[i], corners[(i + 1) % n]));
    }
    std::vector<std::size_t> pick(n, 0);
    int                      worst = 0;
    while (true) {
      std::vector<Path> sides;
      for (std::size_t i = 0; i < n; ++i) {
        sides.push_back(choices[i][pick[i]]);
      }
      worst = std::max(worst, thinness(d, sides));
      std::size_t i = 0;
      while (i < n && ++pick[i] == choices[i].size()) {
        pick[i++] = 0;
      }
      if (i == n) {
        return worst;
      }
    }
  }

  // Same value without walking every combination: the non-last sides are
  // chosen independently, so for each point p of each last side take, per
  // side, the geodesic farthest from p.
  inline int worst_polygon_by_point(BallGraph const& ball, Metric const& d,
                                    std::vector<Vertex> const& corners) {
    auto const                     n = corners.size();
    std::vector<std::vector<Path>> choices;
    for (std::size_t i = 0; i < n; ++i) {
      choices.push_back(all_geodesics(ball, d, corners[i], corners[(i + 1) % n]));
    }
    std::set<Vertex> last;
    for (auto const& g : choices.back()) {
      last.insert(g.begin(), g.end());
    }
    int worst = 0;
    for (auto p : last) {
      int m = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        int far = 0;
        for (auto const& g : choices[i]) {
          far = std::max(far, set_distance(d, p, g));
        }
        m = std::min(m, far);
      }
      worst = std::max(worst, m);
    }
    return worst;
  }

  // max over coterminal geodesic pairs of max_t d(w_t, w'_t).
  inline int worst_sync(BallGraph const& ball, Metric const& d, Vertex u, Vertex v) {
    auto gs    = all_geodesics(ball, d, u, v);
    int  worst = 0;
    for (auto const& a : gs) {
      for (auto const& b : gs) {
        for (std::size_t t = 0; t < a.size(); ++t) {
          worst = std::max(worst, d(a[t], b[t]));
        }
      }
    }
    return worst;
  }

  // max over simple paths x -> y in the ball of min_w d(p, w).
  inline int detour_by_simple_paths(BallGraph const& ball, Metric const& d, Vertex x, Vertex y, Vertex p) {
    std::vector<char>            on(ball.size(), 0);
    int                          best = -1;
    std::function<void(Vertex, int)> walk = [&](Vertex w, int m) {
      m = std::min(m, d(p, w));
      if (m <= best) {
        return;
      }
      if (w == y) {
        best = m;
        return;
      }
      on[w] = 1;
      for (auto const& e : ball.neighbors(w)) {
        if (!on[e.target]) {
          walk(e.target, m);
        }
      }
      on[w] = 0;
    };
    walk(x, std::numeric_limits<int>::max());
    return best;
  }

  // Widest chain values by (max, min) Floyd-Warshall over the complete graph
  // on 0..n-1 weighted by doubled Gromov products at p.
  inline int chain_defect2(Metric const& d, Vertex n, Vertex p) {
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    auto g = [&](Vertex x, Vertex y) { return d(p, x) + d(p, y) - d(x, y); };
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        w[x][y] = g(x, y);
      }
    }
    for (Vertex k = 0; k < n; ++k) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          w[x][y] = std::max(w[x][y], std::min(w[x][k], w[k][y]));
        }
      }
    }
    int top = 0;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        top = std::max(top, w[x][y] - g(x, y));
      }
    }
    return top;
  }

  // All monotone lattice paths from a to b in Z^2 as point sequences.
  using Point = std::pair<long, long>;
  inline std::vector<std::vector<Point>> lattice_paths(Point a, Point b) {
    std::vector<std::vector<Point>> out;
    long const sx = b.first >= a.first ? 1 : -1;
    long const sy = b.second >= a.second ? 1 : -1;
    std::vector<Point> path{a};
    std::function<void(Point)> walk = [&](Point q) {
      if (q == b) {
        out.push_back(path);
        return;
      }
      if (q.first != b.first) {
        path.push_back({q.first + sx, q.second});
        walk(path.back());
        path.pop_back();
      }
      if (q.second != b.second) {
        path.push_back({q.first, q.second + sy});
        walk(path.back());
        path.pop_back();
      }
    };
    walk(a);
    return out;
  }

  inline long l1(Point a, Point b) {
    return std::labs(a.first - b.first) + std::labs(a.second - b.second);
  }

  // max over ordered pairs of lattice geodesics a -> b of the one-sided
  // Hausdorff distance from the second to the first.
  inline long lattice_bigon(Point a, Point b) {
    auto paths = lattice_paths(a, b);
    long worst = 0;
    for (auto const& p : paths) {
      for (auto const& q : paths) {
        for (auto y : q) {
          long m = std::numeric_limits<long>::max();
          for (auto z : p) {
            m = std::min(m, l1(y, z));
          }
          worst = std::max(worst, m);
        }
      }
    }
    return worst;
  }

}  // namespace oracle

#endif  // POLYHYP_TESTS_ORACLES_HPP_
