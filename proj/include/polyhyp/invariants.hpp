// Hyperbolicity-type invariants evaluated on a Cayley ball.
//
// Every metric quantity is a vertex-level integer or half-integer.
// Half-integers (Gromov products and the constants derived from them) are
// carried doubled so that all values stay exact.
//
// Bound directions are relative to the ball-level quantity, i.e. the same
// supremum taken over tuples of inner vertices.  `exact` means every tuple
// and every geodesic choice was examined; random plans, binding geodesic
// caps, and quantities that could only grow with paths leaving the ball are
// reported as `lower`.

#ifndef POLYHYP_INVARIANTS_HPP_
#define POLYHYP_INVARIANTS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyhyp/ball.hpp"
#include "polyhyp/geodesic.hpp"

namespace polyhyp {

  enum class Bound { exact, lower, upper };

  std::string_view to_string(Bound b);

  struct SamplingPlan {
    enum class Mode { exhaustive, random };

    Mode          mode         = Mode::exhaustive;
    std::size_t   samples      = 0;
    std::uint64_t seed         = 0;
    std::size_t   geodesic_cap = 64;

    static SamplingPlan exhaustive(std::size_t geodesic_cap = 64);
    static SamplingPlan random(std::size_t   samples,
                               std::uint64_t seed,
                               std::size_t   geodesic_cap = 64);

    bool is_exhaustive() const noexcept {
      return mode == Mode::exhaustive;
    }
  };

  //! Seeded stream of tuples of vertex indices.  Only the mt19937_64 engine
  //! is used, with rejection sampling for bounded draws, so the sequence is
  //! identical across standard libraries.
  class TupleSampler {
   public:
    explicit TupleSampler(std::uint64_t seed) : _engine(seed) {}

    std::size_t below(std::size_t n);

    std::vector<Vertex> tuple(std::size_t arity, std::size_t n);

   private:
    std::mt19937_64 _engine;
  };

  //! Pre-generates a random plan's tuples in draw order.
  std::vector<std::vector<Vertex>>
  draw_tuples(SamplingPlan const& plan, std::size_t arity, std::size_t n);

  struct SamplingRecord {
    SamplingPlan plan;
    std::size_t  arity    = 0;
    std::size_t  examined = 0;
    bool         cap_hit  = false;
  };

  //! Extremal configuration behind a result, as normal-form strings and
  //! letter words.  Each path is written `start: word`.
  struct Witness {
    std::vector<std::string> vertices;
    std::vector<std::string> paths;
    std::string              note;
  };

  struct InvariantResult {
    std::string                                      name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<std::int64_t>                      doubled;
    std::optional<double>                            real;
    Bound                                            bound = Bound::exact;
    SamplingRecord                                   sampling;
    Witness                                          witness;
    int                                              radius_in  = 0;
    int                                              radius_out = 0;
    std::vector<std::pair<std::string, std::int64_t>> auxiliary;  // doubled
    std::vector<std::pair<std::string, bool>>         checks;
    std::string                                      note;
    double                                           wall_time_ms = 0;

    //! value() = doubled / 2.
    double value() const;
  };

  //! Thrown when a witness fails to re-evaluate to its reported value or an
  //! internal consistency check fails.
  class InvariantCheckFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  //! exact only for exhaustive plans with no binding cap.
  Bound bound_for(SamplingPlan const& plan, bool cap_hit);

  ////////////////////////////////////////////////////////////////////////
  // Gromov products
  ////////////////////////////////////////////////////////////////////////

  //! 2 (x|y)_p = d(p,x) + d(p,y) - d(x,y).
  inline int gromov_product2(DistanceMatrix const& dist, Vertex x, Vertex y, Vertex p) {
    return dist(p, x) + dist(p, y) - dist(x, y);
  }

  //! Doubled 2-chain defect min{(x0|x1)_p, (x1|x2)_p} - (x0|x2)_p floored at
  //! 0 for one quadruple.
  int four_point_defect2(DistanceMatrix const& dist,
                         Vertex                x0,
                         Vertex                x1,
                         Vertex                x2,
                         Vertex                p);

  //! max over quadruples of inner vertices of four_point_defect2.
  InvariantResult four_point_delta(BallGraph const&      ball,
                                   DistanceMatrix const& dist,
                                   SamplingPlan const&   plan);

  enum class ChainMethod { bottleneck, bruteforce };

  struct ChainOptions {
    ChainMethod           method     = ChainMethod::bottleneck;
    std::size_t           max_length = 4;  // steps, bruteforce only
    std::optional<Vertex> basepoint;       // all inner basepoints if empty
  };

  struct ChainExtremum {
    std::int64_t        doubled = 0;
    Vertex              basepoint = 0;
    std::vector<Vertex> chain;  // x = chain.front(), y = chain.back()
  };

  //! Least doubled delta' at basepoint p for which
  //! (x_0|x_n)_p >= min_i (x_i|x_{i+1})_p - delta' holds for every chain in
  //! the first `vertices` vertices: max over pairs of the widest chain value
  //! minus the direct product.  bottleneck runs on a maximum spanning tree of
  //! the complete graph weighted by Gromov products; bruteforce enumerates all
  //! chains of at most max_length steps.
  ChainExtremum chain_defect_at(DistanceMatrix const& dist,
                                std::size_t           vertices,
                                Vertex                p,
                                ChainOptions const&   options);

  //! Minimum consecutive Gromov product (doubled) along a chain.
  std::int64_t chain_width2(DistanceMatrix const&   dist,
                            std::span<Vertex const> chain,
                            Vertex                  p);

  InvariantResult chain_defect(BallGraph const&      ball,
                               DistanceMatrix const& dist,
                               ChainOptions const&   options = {});

  ////////////////////////////////////////////////////////////////////////
  // Polygons and bigons
  ////////////////////////////////////////////////////////////////////////

  //! How the sides of a polygon range over geodesics.
  //!  all:       every geodesic, via dynamic programming on the geodesic DAG
  //!  enumerate: the first geodesic_cap geodesics per side (lower bound when
  //!             the cap binds)
  //!  interval:  non-last sides replaced by their whole interval (fast lower
  //!             bound)
  enum class SideMode { all, enumerate, interval };

  std::string_view to_string(SideMode m);

  //! Worst-case thinness of geodesic polygons with prescribed corners.
  //!
  //! For corners x_0..x_n, sides run x_i -> x_{i+1} and the distinguished
  //! side x_n -> x_0.  Because the non-last sides are chosen independently,
  //! the worst case is
  //!
  //!     max_{p in xi_n} min_{i<n} D(x_i, x_{i+1}, p),
  //!
  //! where D(a, b, p) is the largest distance from p that a geodesic a -> b
  //! can keep.  D is tabulated lazily per unordered pair over hull vertices.
  class PolygonEvaluator {
   public:
    PolygonEvaluator(BallGraph const&      ball,
                     DistanceMatrix const& dist,
                     SideMode              mode,
                     std::size_t           geodesic_cap = 64);

    int evaluate(std::span<Vertex const> corners);

    //! A concrete polygon on these corners whose thinness equals evaluate()
    //! (at least evaluate() in interval mode).
    Polygon witness(std::span<Vertex const> corners);

    struct Extremum {
      int                 value = 0;
      std::vector<Vertex> corners;
    };

    //! For n = 1..n_max, the maximum of evaluate() over all (n+1)-tuples of
    //! inner vertices, computed by (max, min) matrix powers per basepoint.
    std::vector<Extremum> exhaustive(std::size_t n_max);

    //! Whether any geodesic enumeration hit the cap so far.
    bool cap_hit() const noexcept {
      return _cap_hit;
    }

    SideMode mode() const noexcept {
      return _mode;
    }

   private:
    struct PairData {
      bool                       ready = false;
      std::vector<std::uint16_t> reach;   // D(a, b, p) over hull p
      std::vector<Vertex>        last;    // vertices available to the last side
      std::vector<GeodesicPath>  paths;   // enumerate mode, direction a -> b
    };

    PairData&    pair(Vertex a, Vertex b);
    GeodesicPath side_for(Vertex a, Vertex b, Vertex p);
    GeodesicPath last_side_through(Vertex a, Vertex b, Vertex p);

    BallGraph const&      _ball;
    DistanceMatrix const& _dist;
    SideMode              _mode;
    std::size_t           _cap;
    std::size_t           _n;
    std::vector<PairData> _pairs;
    bool                  _cap_hit = false;
  };

  //! Worst-case thinness over (n+1)-gons, n >= 1.  Throws
  //! std::invalid_argument when n + 1 exceeds the inner vertex count.
  InvariantResult polygon_delta(BallGraph const&      ball,
                                DistanceMatrix const& dist,
                                std::size_t           n,
                                SamplingPlan const&   plan,
                                SideMode              mode = SideMode::all);

  //! polygon_delta for n = n_lo..n_hi, sharing work across n.
  std::vector<InvariantResult> polygon_delta_range(BallGraph const&      ball,
                                                   DistanceMatrix const& dist,
                                                   std::size_t           n_lo,
                                                   std::size_t           n_hi,
                                                   SamplingPlan const&   plan,
                                                   SideMode mode = SideMode::all);

  //! Thin-triangle constant, i.e. polygon_delta with n = 2.
  InvariantResult rips_delta(BallGraph const&      ball,
                             DistanceMatrix const& dist,
                             SamplingPlan const&   plan,
                             SideMode              mode = SideMode::all);

  //! max over coterminal geodesic pairs u -> v and t of d(w_t, w'_t).
  //! In all/interval mode this is the largest distance between two interval
  //! vertices on the same level.
  int bigon_sync_pair(GeodesicDag const&    dag,
                      DistanceMatrix const& dist,
                      SideMode              mode,
                      std::size_t           geodesic_cap,
                      bool*                 cap_hit = nullptr);

  struct BigonConstants {
    InvariantResult async;
    InvariantResult sync;
    std::size_t     pairs_checked              = 0;
    //! Pairs with sync > 2 * async (the fellow-traveler bound).
    std::size_t     fellow_traveler_violations = 0;
  };

  BigonConstants bigon_constants(BallGraph const&      ball,
                                 DistanceMatrix const& dist,
                                 SamplingPlan const&   plan,
                                 SideMode              mode = SideMode::all);

  ////////////////////////////////////////////////////////////////////////
  // Detours
  ////////////////////////////////////////////////////////////////////////

  //! Distance a coterminal path can keep from a geodesic vertex.
  //!
  //! For inner x, y and p on a geodesic between them,
  //!     g(p) = max{ r : x, y connected in the ball minus the open r-ball
  //!                     around p },
  //! which is the largest d(p, Im xi') over paths xi' from x to y inside the
  //! ball.  Computed per basepoint by a union-find sweep over distance
  //! levels, cached for the inner vertices.
  class DetourEvaluator {
   public:
    DetourEvaluator(BallGraph const& ball, DistanceMatrix const& dist);

    int at(Vertex x, Vertex y, Vertex p);

    struct PairExtremum {
      int    value = 0;
      Vertex basepoint = 0;
    };
    //! max of at() over p in the interval of (x, y).
    PairExtremum pair(Vertex x, Vertex y);

    //! A shortest path x -> y avoiding every w with d(p, w) < r; empty when
    //! none exists.
    std::vector<Vertex> detour_path(Vertex x, Vertex y, Vertex p, int r) const;

    struct Extremum {
      int    value = 0;
      Vertex x = 0, y = 0, basepoint = 0;
    };
    Extremum exhaustive();

   private:
    struct Levels {
      bool                       ready = false;
      std::vector<std::uint16_t> inner_distance;
      std::vector<std::uint32_t> components;  // [r * inner + x], r = 0..cap
    };
    Levels& levels(Vertex p);

    BallGraph const&      _ball;
    DistanceMatrix const& _dist;
    int                   _cap;
    std::vector<Levels>   _levels;
  };

  //! max over pairs and geodesic vertices of g(p).  Always `lower`: paths
  //! leaving the ball could detour farther.
  InvariantResult detour_epsilon(BallGraph const&      ball,
                                 DistanceMatrix const& dist,
                                 SamplingPlan const&   plan);

  ////////////////////////////////////////////////////////////////////////
  // Mesh
  ////////////////////////////////////////////////////////////////////////

  enum class MeshMode { geodesic, adversarial };

  std::string_view to_string(MeshMode m);

  struct TriangleMesh {
    int                   value = 0;
    std::array<Vertex, 3> points{};
  };

  //! min over u_i on side i of diam{u_0, u_1, u_2}.  Sides may leave the hull;
  //! such distances fall back to BallGraph::word_distance().
  TriangleMesh triangle_mesh(BallGraph const&      ball,
                             DistanceMatrix const& dist,
                             std::span<Vertex const> side0,
                             std::span<Vertex const> side1,
                             std::span<Vertex const> side2);

  //! max over sampled triangles of their mesh.  geodesic mode uses geodesic
  //! sides; adversarial mode adds, per side, a maximal-detour path.  Both are
  //! lower bounds on the mesh over all triangles and are reported as such.
  InvariantResult mesh_estimate(BallGraph const&      ball,
                                DistanceMatrix const& dist,
                                SamplingPlan const&   plan,
                                MeshMode              mode = MeshMode::geodesic);

  ////////////////////////////////////////////////////////////////////////
  // Subgroups and the hyperbolic plane
  ////////////////////////////////////////////////////////////////////////

  //! Quasi-convexity constant of H = <words> on the ball: the largest
  //! distance from a geodesic vertex between two elements of H in the inner
  //! ball to H within the ball.  Auxiliary values: M = max |b| over the
  //! generators, and with epsilon given (a detour constant, not doubled)
  //! the check q <= epsilon + M.  Throws OutsideBall when a generator lies
  //! outside the ball.
  InvariantResult subgroup_quasiconvexity(BallGraph const&             ball,
                                          DistanceMatrix const&        dist,
                                          std::span<std::string const> words,
                                          std::optional<int> epsilon = std::nullopt);

  //! |ln((1 - r)/(1 + r))|: hyperbolic distance from the centre of the
  //! Poincaré disk to a point at Euclidean radius r.  It diverges as r -> 1.
  //! Throws std::domain_error unless 0 <= r < 1.
  double h2_center_distance(double r);

}  // namespace polyhyp

#endif  // POLYHYP_INVARIANTS_HPP_
