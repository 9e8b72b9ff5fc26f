// Geodesic intervals, geodesic enumeration and polygon thinness.
//
// All routines take the hull distance matrix (see hull_distances()), which
// covers every vertex lying on a geodesic between two inner vertices.

#ifndef POLYHYP_GEODESIC_HPP_
#define POLYHYP_GEODESIC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyhyp/ball.hpp"

namespace polyhyp {

  //! { w : d(from, w) + d(w, to) = d(from, to) }, ordered by d(from, w) and
  //! then by vertex index.
  struct GeodesicInterval {
    Vertex              from = 0;
    Vertex              to   = 0;
    std::vector<Vertex> members;

    bool contains(Vertex w) const;
  };

  GeodesicInterval interval(DistanceMatrix const& dist, Vertex u, Vertex v);

  //! Vertex sequence w_0..w_k with consecutive vertices adjacent and
  //! k = d(w_0, w_k).
  struct GeodesicPath {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept {
      return vertices.empty() ? 0 : vertices.size() - 1;
    }
    Vertex front() const {
      return vertices.front();
    }
    Vertex back() const {
      return vertices.back();
    }
    GeodesicPath reversed() const {
      return {{vertices.rbegin(), vertices.rend()}};
    }

    friend bool operator==(GeodesicPath const&, GeodesicPath const&) = default;
  };

  struct GeodesicList {
    std::vector<GeodesicPath> paths;
    bool                      truncated = false;
  };

  //! The layered DAG of all geodesics from `from` to `to`: its nodes are the
  //! interval members, its arcs the ball edges (w, w') with
  //! d(from, w') = d(from, w) + 1 inside the interval.
  class GeodesicDag {
   public:
    GeodesicDag(BallGraph const& ball, DistanceMatrix const& dist, Vertex from, Vertex to);

    Vertex from() const noexcept {
      return _from;
    }
    Vertex to() const noexcept {
      return _to;
    }
    //! Interval members in level order; node 0 is `from`, the last is `to`.
    std::span<Vertex const> nodes() const noexcept {
      return _nodes;
    }
    std::size_t level(std::size_t node) const {
      return _levels[node];
    }
    std::span<std::uint32_t const> predecessors(std::size_t node) const {
      return {_pred.data() + _pred_off[node], _pred.data() + _pred_off[node + 1]};
    }
    std::span<std::uint32_t const> successors(std::size_t node) const {
      return {_succ.data() + _succ_off[node], _succ.data() + _succ_off[node + 1]};
    }
    //! Index range of the nodes at distance t from `from`.
    std::pair<std::size_t, std::size_t> layer(std::size_t t) const {
      return {_layer_off[t], _layer_off[t + 1]};
    }
    std::size_t length() const noexcept {
      return _layer_off.size() - 2;
    }

    //! Number of geodesics, saturating at UINT64_MAX.
    std::uint64_t count() const;

    //! max over geodesics xi of min_{w in xi} weight[w], where weight is
    //! indexed by vertex (typically a distance-matrix row).
    int widest(std::span<std::uint16_t const> weight) const;
    //! A geodesic attaining widest(weight).
    GeodesicPath widest_path(std::span<std::uint16_t const> weight) const;

    //! Some geodesic through `via`, which must be an interval member.
    GeodesicPath through(Vertex via) const;

    //! Depth-first enumeration in successor order, truncated at cap.
    GeodesicList enumerate(std::size_t cap) const;

   private:
    std::size_t node_of(Vertex v) const;

    Vertex                     _from;
    Vertex                     _to;
    std::vector<Vertex>        _nodes;
    std::vector<std::uint32_t> _levels;
    std::vector<std::size_t>   _layer_off;
    std::vector<std::uint32_t> _pred;
    std::vector<std::size_t>   _pred_off;
    std::vector<std::uint32_t> _succ;
    std::vector<std::size_t>   _succ_off;
  };

  //! Every geodesic from u to v, up to cap paths; truncated is set when more
  //! exist.
  GeodesicList enumerate_geodesics(BallGraph const&      ball,
                                   DistanceMatrix const& dist,
                                   Vertex                u,
                                   Vertex                v,
                                   std::size_t           cap);

  //! Geodesic polygon [[xi_0, ..., xi_n]] with sides.back() the distinguished
  //! side xi_n.  Side i ends where side i+1 starts, cyclically.
  struct Polygon {
    std::vector<GeodesicPath> sides;
  };

  //! Throws std::invalid_argument unless the sides chain up cyclically and
  //! there are at least two of them.
  void validate_polygon(Polygon const& poly);

  //! max_{p in xi_n} d(p, Z) with Z = xi_0 ∪ ... ∪ xi_{n-1}: the least delta
  //! for which the polygon is delta-thin at vertex level.
  int polygon_thinness(DistanceMatrix const& dist, Polygon const& poly);

}  // namespace polyhyp

#endif  // POLYHYP_GEODESIC_HPP_
