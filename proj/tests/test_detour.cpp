#include "doctest.h"
#include "oracles.hpp"
#include "polyhyp/invariants.hpp"

using namespace polyhyp;

namespace {
  struct Fixture {
    GroupSpec      spec;
    BallGraph      ball;
    DistanceMatrix dist;

    Fixture(std::string_view text, int radius)
        : spec(GroupSpec::parse(text)),
          ball(build_ball(spec, symmetric_generating_set(spec), radius)),
          dist(hull_distances(ball)) {}

    Vertex at(std::string_view word) const {
      auto v = ball.find_word(word);
      REQUIRE(v.has_value());
      return *v;
    }
  };

  void check_path(Fixture const& f, std::vector<Vertex> const& path, Vertex x, Vertex y,
                  Vertex p, int r) {
    REQUIRE_FALSE(path.empty());
    CHECK(path.front() == x);
    CHECK(path.back() == y);
    for (std::size_t i = 0; i < path.size(); ++i) {
      CHECK(f.ball.word_distance(p, path[i]) >= r);
      if (i) {
        CHECK(f.ball.word_distance(path[i - 1], path[i]) == 1);
      }
    }
  }
}  // namespace

TEST_CASE("detours around cycles") {
  for (auto [text, n, radius] : {std::tuple{"Z6", 6L, 3}, {"Z10", 10L, 5}}) {
    CAPTURE(text);
    Fixture         f(text, radius);
    auto            d = oracle::cyclic_metric(f.ball, n);
    DetourEvaluator ev(f.ball, f.dist);
    Vertex          x = f.at("1");
    Vertex          y = f.at("s^" + std::to_string(n / 2));
    auto            e = ev.pair(x, y);
    CHECK(e.value == (n == 6 ? 1 : 2));
    int best = 0;
    for (auto p : interval(f.dist, x, y).members) {
      CHECK(ev.at(x, y, p) == oracle::detour_by_simple_paths(f.ball, d, x, y, p));
      best = std::max(best, ev.at(x, y, p));
    }
    CHECK(e.value == best);
    check_path(f, ev.detour_path(x, y, e.basepoint, e.value), x, y, e.basepoint, e.value);
    CHECK(ev.detour_path(x, y, e.basepoint, e.value + 1).empty());
  }
}

TEST_CASE("trees admit no detours") {
  Fixture         f("F(a,b)", 2);
  DetourEvaluator ev(f.ball, f.dist);
  auto            n = static_cast<Vertex>(f.ball.inner_size());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      CHECK(ev.pair(x, y).value == 0);
    }
  }
  auto r = detour_epsilon(f.ball, f.dist, SamplingPlan::exhaustive());
  CHECK(r.doubled == 0);
  CHECK(r.bound == Bound::lower);
}

TEST_CASE("detours on the grid match the simple-path oracle") {
  Fixture         z("Z x Z", 1);
  auto            d = oracle::grid_metric(z.ball);
  DetourEvaluator ev(z.ball, z.dist);
  auto            n = static_cast<Vertex>(z.ball.inner_size());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      for (auto p : interval(z.dist, x, y).members) {
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(p);
        CHECK(ev.at(x, y, p) == oracle::detour_by_simple_paths(z.ball, d, x, y, p));
      }
    }
  }
  // The basepoint is its own endpoint: nothing can stay away from it.
  CHECK(ev.at(0, z.at("s"), 0) == 0);
  CHECK_THROWS_AS(ev.at(0, static_cast<Vertex>(n), 0), std::invalid_argument);
}

TEST_CASE("detour epsilon and its witness") {
  Fixture z("Z x Z", 2);
  auto    r = detour_epsilon(z.ball, z.dist, SamplingPlan::exhaustive());
  CHECK(r.doubled == 4);
  REQUIRE(r.witness.vertices.size() == 3);
  REQUIRE(r.witness.paths.size() == 2);

  DetourEvaluator ev(z.ball, z.dist);
  auto            e = ev.exhaustive();
  CHECK(2 * e.value == *r.doubled);
  CHECK(ev.at(e.x, e.y, e.basepoint) == e.value);
  check_path(z, ev.detour_path(e.x, e.y, e.basepoint, e.value), e.x, e.y, e.basepoint, e.value);

  auto sampled = detour_epsilon(z.ball, z.dist, SamplingPlan::random(50, 2));
  CHECK(*sampled.doubled <= *r.doubled);
  CHECK(sampled.sampling.examined == 50);
}
