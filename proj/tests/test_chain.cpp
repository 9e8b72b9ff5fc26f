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
  };

  oracle::Metric matrix_metric(DistanceMatrix const& dist) {
    return [&dist](Vertex u, Vertex v) { return dist(u, v); };
  }

  ChainOptions brute(std::size_t steps) {
    ChainOptions o;
    o.method     = ChainMethod::bruteforce;
    o.max_length = steps;
    return o;
  }
}  // namespace

TEST_CASE("bottleneck chains match the Floyd-Warshall oracle") {
  for (auto [text, radius] : {std::pair{"Z x Z", 2}, {"Z x Z", 3}, {"Z2 * Z3", 3}, {"F(a,b)", 2},
                              {"Z3 x Z3", 1}, {"S3 * Z2", 2}, {"Z10", 4}}) {
    CAPTURE(text);
    CAPTURE(radius);
    Fixture f(text, radius);
    auto    d = matrix_metric(f.dist);
    auto    n = static_cast<Vertex>(f.ball.inner_size());
    std::int64_t top = 0;
    for (Vertex p = 0; p < n; ++p) {
      auto e = chain_defect_at(f.dist, n, p, {});
      CHECK(e.doubled == oracle::chain_defect2(d, n, p));
      CHECK(chain_width2(f.dist, e.chain, p)
              - gromov_product2(f.dist, e.chain.front(), e.chain.back(), p)
            == e.doubled);
      top = std::max(top, e.doubled);
    }
    auto r = chain_defect(f.ball, f.dist);
    CHECK(r.doubled == top);
    CHECK(r.bound == Bound::exact);
  }
}

TEST_CASE("literal chain enumeration agrees when chains are long enough") {
  for (auto [text, radius] : {std::pair{"Z x Z", 1}, {"Z3 x Z3", 1}, {"Z6", 2}, {"F(a,b)", 1}}) {
    CAPTURE(text);
    Fixture f(text, radius);
    auto    n = static_cast<Vertex>(f.ball.inner_size());
    for (Vertex p = 0; p < n; ++p) {
      auto full = chain_defect_at(f.dist, n, p, {});
      CHECK(chain_defect_at(f.dist, n, p, brute(n - 1)).doubled == full.doubled);
    }
    auto r = chain_defect(f.ball, f.dist, brute(n - 1));
    CHECK(r.doubled == chain_defect(f.ball, f.dist).doubled);
    CHECK(r.bound == Bound::lower);
  }

  Fixture z("Z x Z", 2);
  auto    n = static_cast<Vertex>(z.ball.inner_size());
  for (Vertex p = 0; p < n; p += 3) {
    CHECK(chain_defect_at(z.dist, n, p, brute(3)).doubled
          <= chain_defect_at(z.dist, n, p, {}).doubled);
  }
  CHECK_THROWS_AS(chain_defect_at(z.dist, n, 0, brute(0)), std::invalid_argument);
  CHECK_THROWS_AS(chain_defect_at(z.dist, z.dist.size() + 1, 0, {}), std::invalid_argument);
}

TEST_CASE("two-step chains are the four-point condition") {
  Fixture z("Z x Z", 2);
  auto    n = static_cast<Vertex>(z.ball.inner_size());
  for (Vertex p = 0; p < n; ++p) {
    int four = 0;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex w = 0; w < n; ++w) {
          four = std::max(four, four_point_defect2(z.dist, x, y, w, p));
        }
      }
    }
    CHECK(chain_defect_at(z.dist, n, p, brute(2)).doubled == four);
    CHECK(chain_defect_at(z.dist, n, p, {}).doubled >= four);
  }
}

TEST_CASE("chain defect: small cases and options") {
  Fixture two("Z2", 1);
  REQUIRE(two.ball.inner_size() == 2);
  CHECK(chain_defect(two.ball, two.dist).doubled == 0);

  Fixture f("F(a,b)", 3);
  CHECK(chain_defect(f.ball, f.dist).doubled == 0);

  Fixture      z("Z x Z", 2);
  ChainOptions at;
  at.basepoint = 0;
  auto single  = chain_defect(z.ball, z.dist, at);
  CHECK(single.doubled == chain_defect_at(z.dist, z.ball.inner_size(), 0, {}).doubled);
  CHECK(single.parameters.back() == std::pair<std::string, std::string>{"basepoint", "(1,1)"});
  at.basepoint = static_cast<Vertex>(z.ball.inner_size());
  CHECK_THROWS_AS(chain_defect(z.ball, z.dist, at), std::invalid_argument);
}

TEST_CASE("bottleneck equals four-step enumeration on small balls") {
  for (auto [text, radius] : {std::pair{"F(a,b)", 2}, {"Z2 * Z3", 2}, {"Z x Z", 2}, {"Z6", 3}}) {
    CAPTURE(text);
    Fixture f(text, radius);
    auto    n = static_cast<Vertex>(f.ball.inner_size());
    for (Vertex p = 0; p < n; ++p) {
      CAPTURE(p);
      CHECK(chain_defect_at(f.dist, n, p, brute(4)).doubled
            == chain_defect_at(f.dist, n, p, {}).doubled);
    }
  }
}
