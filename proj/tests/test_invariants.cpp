#include <cmath>
#include <random>

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

  auto const kExact = SamplingPlan::exhaustive();

  // The vertex-level thinness of 3-gons in Z2 * Z3 reached with seed 42 and
  // 2000 samples, as produced by the literal oracle below.
  constexpr int kZ2Z3QuadrilateralThinness = 0;
}  // namespace

TEST_CASE("Gromov products: documented values") {
  Fixture f("F(a,b)", 2);
  CHECK(gromov_product2(f.dist, f.at("a"), f.at("b"), 0) == 0);
  CHECK(gromov_product2(f.dist, f.at("a.b"), f.at("a.b^-1"), 0) == 2);
  CHECK(gromov_product2(f.dist, f.at("a.b"), f.at("a.b"), 0) == 4);
  CHECK(four_point_defect2(f.dist, f.at("a"), f.at("a.b"), f.at("b"), 0) == 0);
}

TEST_CASE("four-point delta on a tree and on the grid") {
  Fixture f("F(a,b)", 2);
  auto    r = four_point_delta(f.ball, f.dist, kExact);
  CHECK(r.doubled == 0);
  CHECK(r.bound == Bound::exact);
  CHECK(r.sampling.examined == 17u * 17 * 17 * 17);

  Fixture z2("Z x Z", 2), z4("Z x Z", 4);
  auto    small = four_point_delta(z2.ball, z2.dist, kExact);
  auto    large = four_point_delta(z4.ball, z4.dist, kExact);
  CHECK(*small.doubled < *large.doubled);

  // Literal maximum with the closed-form L1 metric.
  auto d    = oracle::grid_metric(z2.ball);
  auto g    = [&](Vertex x, Vertex y, Vertex p) { return d(p, x) + d(p, y) - d(x, y); };
  int  best = 0;
  auto n    = static_cast<Vertex>(z2.ball.inner_size());
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex w = 0; w < n; ++w) {
          best = std::max(best, std::min(g(x, y, p), g(y, w, p)) - g(x, w, p));
        }
      }
    }
  }
  CHECK(small.doubled == best);
  REQUIRE(small.witness.vertices.size() == 4);
}

TEST_CASE("bounds follow the plan and the caps") {
  Fixture z("Z x Z", 2);
  CHECK(rips_delta(z.ball, z.dist, kExact).bound == Bound::exact);
  CHECK(rips_delta(z.ball, z.dist, SamplingPlan::random(50, 1)).bound == Bound::lower);
  auto capped = rips_delta(z.ball, z.dist, SamplingPlan::exhaustive(1), SideMode::enumerate);
  CHECK(capped.sampling.cap_hit);
  CHECK(capped.bound == Bound::lower);
  CHECK(rips_delta(z.ball, z.dist, kExact, SideMode::interval).bound == Bound::lower);
  CHECK(detour_epsilon(z.ball, z.dist, kExact).bound == Bound::lower);
  CHECK(mesh_estimate(z.ball, z.dist, kExact).bound == Bound::lower);
  CHECK(chain_defect(z.ball, z.dist).bound == Bound::exact);
}

TEST_CASE("rips delta") {
  Fixture f("F(a,b)", 2);
  CHECK(rips_delta(f.ball, f.dist, kExact).doubled == 0);
  PolygonEvaluator tree(f.ball, f.dist, SideMode::all);
  for (Vertex x = 0; x < f.ball.inner_size(); ++x) {
    for (Vertex y = 0; y < f.ball.inner_size(); ++y) {
      std::vector<Vertex> t{x, x, y};
      CHECK(tree.evaluate(t) == 0);
    }
  }

  Fixture z("Z x Z", 2);
  PolygonEvaluator ev(z.ball, z.dist, SideMode::all);
  Vertex x = z.at("s"), y = z.at("t^-1.s^-1");
  // With several geodesics a repeated corner leaves a bigon, whose sides
  // are chosen independently.
  std::vector<Vertex> degenerate{x, x, y}, bigon{x, y};
  CHECK(ev.evaluate(degenerate) == ev.evaluate(bigon));
  std::vector<Vertex> point{x, x, x};
  CHECK(ev.evaluate(point) == 0);
}

TEST_CASE("polygon evaluator matches the literal oracle on the grid") {
  Fixture          z("Z x Z", 2);
  auto             d = oracle::grid_metric(z.ball);
  PolygonEvaluator ev(z.ball, z.dist, SideMode::all);
  auto             n     = static_cast<Vertex>(z.ball.inner_size());
  int              worst = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        std::vector<Vertex> t{a, b, c};
        int                 v = oracle::worst_polygon(z.ball, d, t);
        CHECK(ev.evaluate(t) == v);
        auto w = ev.witness(t);
        CHECK(polygon_thinness(z.dist, w) == v);
        worst = std::max(worst, v);
      }
    }
  }
  CHECK(rips_delta(z.ball, z.dist, kExact).doubled == 2 * worst);

  for (auto const& t : draw_tuples(SamplingPlan::random(300, 5), 4, n)) {
    CHECK(ev.evaluate(t) == oracle::worst_polygon(z.ball, d, t));
  }
}

TEST_CASE("rips delta on a larger grid ball matches the per-point oracle") {
  Fixture z("Z x Z", 3);
  auto    d     = oracle::grid_metric(z.ball);
  auto    n     = static_cast<Vertex>(z.ball.inner_size());
  int     worst = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = b; c < n; ++c) {
        worst = std::max(worst, oracle::worst_polygon_by_point(z.ball, d, {a, b, c}));
      }
    }
  }
  CHECK(rips_delta(z.ball, z.dist, kExact).doubled == 2 * worst);
}

TEST_CASE("polygon delta: trees, grids and side modes") {
  Fixture f("F(a,b)", 2);
  for (auto const& r : polygon_delta_range(f.ball, f.dist, 1, 5, kExact)) {
    CHECK(r.doubled == 0);
  }

  std::vector<std::int64_t> bigons;
  for (int radius : {2, 3, 4}) {
    Fixture z("Z x Z", radius);
    bigons.push_back(*polygon_delta(z.ball, z.dist, 1, kExact).doubled);
  }
  CHECK(bigons[0] < bigons[1]);
  CHECK(bigons[1] < bigons[2]);

  Fixture z("Z x Z", 2);
  auto    all  = polygon_delta_range(z.ball, z.dist, 1, 3, kExact, SideMode::all);
  auto    enu  = polygon_delta_range(z.ball, z.dist, 1, 3, kExact, SideMode::enumerate);
  auto    ivl  = polygon_delta_range(z.ball, z.dist, 1, 3, kExact, SideMode::interval);
  auto    rnd  = polygon_delta_range(z.ball, z.dist, 1, 3, SamplingPlan::random(40, 3));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CAPTURE(i);
    CHECK(all[i].doubled == enu[i].doubled);
    CHECK_FALSE(enu[i].sampling.cap_hit);
    CHECK(enu[i].bound == Bound::exact);
    CHECK(*ivl[i].doubled <= *all[i].doubled);
    CHECK(*rnd[i].doubled <= *all[i].doubled);
    CHECK(rnd[i].sampling.examined == 40);
    if (i) {
      CHECK(*all[i].doubled >= *all[i - 1].doubled);
    }
  }

  Fixture two("Z2", 1);
  CHECK_THROWS_AS(polygon_delta(two.ball, two.dist, 2, kExact), std::invalid_argument);
  CHECK(polygon_delta(two.ball, two.dist, 1, kExact).doubled == 0);
}

TEST_CASE("Z2 * Z3 quadrilaterals match the literal oracle") {
  auto plan = SamplingPlan::random(2000, 42);
  for (int radius : {3, 4, 5, 6}) {
    CAPTURE(radius);
    Fixture g("Z2 * Z3", radius);
    auto    d     = oracle::z2z3_metric(g.ball);
    int     worst = 0;
    for (auto const& t : draw_tuples(plan, 4, g.ball.inner_size())) {
      worst = std::max(worst, oracle::worst_polygon(g.ball, d, t));
    }
    CHECK(worst == kZ2Z3QuadrilateralThinness);
    CHECK(polygon_delta(g.ball, g.dist, 3, plan).doubled == 2 * kZ2Z3QuadrilateralThinness);
  }
}

TEST_CASE("bigon constants") {
  Fixture f("F(a,b)", 2);
  auto    tree = bigon_constants(f.ball, f.dist, kExact);
  CHECK(tree.async.doubled == 0);
  CHECK(tree.sync.doubled == 0);
  CHECK(tree.fellow_traveler_violations == 0);

  Fixture z("Z x Z", 2);
  auto    grid  = bigon_constants(z.ball, z.dist, kExact);
  auto    d     = oracle::grid_metric(z.ball);
  auto    n     = static_cast<Vertex>(z.ball.inner_size());
  long    async = 0;
  int     sync  = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      auto a = oracle::grid_point(z.ball.element(u));
      auto b = oracle::grid_point(z.ball.element(v));
      async  = std::max(async, oracle::lattice_bigon(a, b));
      int s  = oracle::worst_sync(z.ball, d, u, v);
      sync   = std::max(sync, s);
      GeodesicDag dag(z.ball, z.dist, u, v);
      CHECK(bigon_sync_pair(dag, z.dist, SideMode::all, 64) == s);
      CHECK(bigon_sync_pair(dag, z.dist, SideMode::enumerate, 64) == s);
    }
  }
  CHECK(grid.async.doubled == 2 * async);
  CHECK(grid.sync.doubled == 2 * sync);
  CHECK(grid.fellow_traveler_violations == 0);
  CHECK(grid.pairs_checked == n * (n + 1) / 2);
}

TEST_CASE("mesh") {
  Fixture f("F(a,b)", 2);
  CHECK(mesh_estimate(f.ball, f.dist, kExact).doubled == 0);
  CHECK(mesh_estimate(f.ball, f.dist, kExact, MeshMode::adversarial).doubled == 0);

  Fixture             z("Z x Z", 2);
  std::vector<Vertex> side{z.at("s^-1"), z.at("1"), z.at("s")};
  CHECK(triangle_mesh(z.ball, z.dist, side, side, side).value == 0);
  CHECK_THROWS_AS(triangle_mesh(z.ball, z.dist, side, {}, side), std::invalid_argument);

  // Literal triple loop on random vertex sets.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<Vertex> s[3];
    for (auto& v : s) {
      v.resize(1 + rng() % 4);
      for (auto& w : v) {
        w = static_cast<Vertex>(rng() % z.ball.hull_size());
      }
    }
    int best = 1 << 20;
    for (auto a : s[0]) {
      for (auto b : s[1]) {
        for (auto c : s[2]) {
          best = std::min(best, std::max({z.dist(a, b), z.dist(a, c), z.dist(b, c)}));
        }
      }
    }
    CHECK(triangle_mesh(z.ball, z.dist, s[0], s[1], s[2]).value == best);
  }

  std::int64_t last = 0;
  for (int radius : {2, 3}) {
    Fixture g("Z x Z", radius);
    auto    geo = mesh_estimate(g.ball, g.dist, kExact);
    auto    adv = mesh_estimate(g.ball, g.dist, kExact, MeshMode::adversarial);
    CHECK(*geo.doubled >= last);
    CHECK(*adv.doubled >= *geo.doubled);
    last = *geo.doubled;
  }
}

TEST_CASE("subgroup quasi-convexity") {
  Fixture                  f("F(a,b)", 3);
  std::vector<std::string> whole{"a", "b"};
  auto                     g = subgroup_quasiconvexity(f.ball, f.dist, whole);
  CHECK(g.doubled == 0);
  CHECK(g.bound == Bound::exact);

  std::vector<std::string> squares{"a^2", "b^2"};
  auto                     h = subgroup_quasiconvexity(f.ball, f.dist, squares, 0);
  CHECK(h.doubled == 2);
  REQUIRE(h.auxiliary.size() == 2);
  CHECK(h.auxiliary[0] == std::pair<std::string, std::int64_t>{"M", 4});
  CHECK(h.auxiliary[1] == std::pair<std::string, std::int64_t>{"epsilon", 0});
  REQUIRE(h.checks.size() == 1);
  CHECK(h.checks[0].second);

  std::vector<std::string> trivial{"1"};
  CHECK(subgroup_quasiconvexity(f.ball, f.dist, trivial).doubled == 0);

  std::vector<std::string> far{"a^10"};
  CHECK_THROWS_AS(subgroup_quasiconvexity(f.ball, f.dist, far), OutsideBall);

  // The diagonal of the grid is not convex: the staircase from (-1,-1) to
  // (1,1) through (1,-1) is two steps away from it.
  Fixture                  z("Z x Z", 2);
  std::vector<std::string> diagonal{"s.t"};
  CHECK(subgroup_quasiconvexity(z.ball, z.dist, diagonal).doubled == 4);
}

TEST_CASE("hyperbolic plane distance from the centre") {
  CHECK(h2_center_distance(0.0) == 0.0);
  CHECK(h2_center_distance(0.5) == doctest::Approx(std::log(3.0)));
  double prev = 0;
  for (int k = 1; k <= 8; ++k) {
    double r = 1.0 - std::pow(10.0, -k);
    double v = h2_center_distance(r);
    CHECK(v == doctest::Approx(std::log((1 + r) / (1 - r))));
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(h2_center_distance(1.0), std::domain_error);
  CHECK_THROWS_AS(h2_center_distance(-0.1), std::domain_error);
  CHECK_THROWS_AS(h2_center_distance(std::nan("")), std::domain_error);
}

TEST_CASE("sampling is deterministic") {
  auto plan = SamplingPlan::random(100, 7);
  auto a    = draw_tuples(plan, 3, 10);
  CHECK(a == draw_tuples(plan, 3, 10));
  CHECK(a != draw_tuples(SamplingPlan::random(100, 8), 3, 10));
  for (auto const& t : a) {
    REQUIRE(t.size() == 3);
    for (auto v : t) {
      CHECK(v < 10);
    }
  }
  TupleSampler s(7);
  CHECK_THROWS_AS(s.below(0), std::invalid_argument);

  Fixture z("Z x Z", 2);
  auto    plan2 = SamplingPlan::random(200, 11);
  auto    r1    = rips_delta(z.ball, z.dist, plan2);
  auto    r2    = rips_delta(z.ball, z.dist, plan2);
  CHECK(r1.doubled == r2.doubled);
  CHECK(r1.witness.vertices == r2.witness.vertices);
  CHECK(r1.witness.paths == r2.witness.paths);
}
