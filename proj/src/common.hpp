// Shared helpers for the invariant implementations.

#ifndef POLYHYP_SRC_COMMON_HPP_
#define POLYHYP_SRC_COMMON_HPP_

#include <algorithm>
#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "polyhyp/invariants.hpp"

namespace polyhyp::detail {

  class Stopwatch {
   public:
    Stopwatch() : _start(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
      std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - _start;
      return d.count();
    }

   private:
    std::chrono::steady_clock::time_point _start;
  };

  inline InvariantResult
  start_result(std::string name, BallGraph const& ball, SamplingPlan const& plan, std::size_t arity) {
    InvariantResult r;
    r.name              = std::move(name);
    r.radius_in         = ball.radius_in();
    r.radius_out        = ball.radius_out();
    r.sampling.plan     = plan;
    r.sampling.arity    = arity;
    return r;
  }

  // Larger value wins; ties go to the lexicographically smaller tuple.
  inline bool better(int value, std::span<Vertex const> tuple,
                     int best, std::span<Vertex const> best_tuple) {
    if (value != best) {
      return value > best;
    }
    return std::lexicographical_compare(tuple.begin(), tuple.end(),
                                        best_tuple.begin(), best_tuple.end());
  }

  inline std::string path_text(BallGraph const& ball, std::span<Vertex const> path) {
    return ball.label(path.front()) + ": " + ball.path_word(path);
  }

  inline void add_vertices(Witness& w, BallGraph const& ball, std::span<Vertex const> vs) {
    for (auto v : vs) {
      w.vertices.push_back(ball.label(v));
    }
  }

  // Calls f(tuple) for every tuple of `arity` vertices below n in
  // lexicographic order.
  template <typename F>
  void for_each_tuple(std::size_t arity, std::size_t n, F&& f) {
    std::vector<Vertex> t(arity, 0);
    if (n == 0) {
      return;
    }
    while (true) {
      f(std::span<Vertex const>(t));
      std::size_t i = arity;
      while (i > 0) {
        --i;
        if (++t[i] < n) {
          break;
        }
        t[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (arity == 0) {
        return;
      }
    }
  }

  inline void require_hull(BallGraph const& ball, DistanceMatrix const& dist) {
    if (dist.size() < ball.hull_size()) {
      throw std::invalid_argument("distance matrix must cover the hull");
    }
  }

}  // namespace polyhyp::detail

#endif  // POLYHYP_SRC_COMMON_HPP_
