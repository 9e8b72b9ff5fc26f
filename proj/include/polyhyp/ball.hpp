// Finite balls of Cayley graphs and their word metric.

#ifndef POLYHYP_BALL_HPP_
#define POLYHYP_BALL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyhyp/group.hpp"

namespace polyhyp {

  using Vertex = std::uint32_t;

  inline constexpr std::size_t kDefaultVertexBudget = 2'000'000;

  //! Thrown when breadth-first enumeration would exceed the vertex budget.
  class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::size_t budget,
                   std::size_t vertices_reached,
                   int         completed_radius);

    std::size_t budget() const noexcept {
      return _budget;
    }
    std::size_t vertices_reached() const noexcept {
      return _reached;
    }
    //! Largest radius whose sphere was fully enumerated.
    int completed_radius() const noexcept {
      return _radius;
    }

   private:
    std::size_t _budget;
    std::size_t _reached;
    int         _radius;
  };

  //! Thrown when an element needed by a computation lies outside the ball.
  class OutsideBall : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  struct Edge {
    Vertex        target;
    std::uint16_t letter;
  };

  //! The ball of radius radius_out() = 3 * radius_in() around the identity.
  //!
  //! Vertices are numbered in breadth-first order from the identity (vertex
  //! 0), so the inner ball (norm <= radius_in) and the hull (norm <=
  //! 2 * radius_in, which contains every geodesic between inner vertices) are
  //! prefixes of the vertex list.  Adjacency is symmetric: an edge u -> v
  //! labelled a is paired with v -> u labelled a^-1.
  class BallGraph {
   public:
    std::size_t size() const noexcept {
      return _norms.size();
    }
    std::size_t inner_size() const noexcept {
      return _inner;
    }
    std::size_t hull_size() const noexcept {
      return _hull;
    }
    int radius_in() const noexcept {
      return _radius_in;
    }
    int radius_out() const noexcept {
      return _radius_out;
    }

    //! d(1, v); exact for every vertex of the ball.
    int norm(Vertex v) const {
      return _norms[v];
    }

    std::span<Edge const> neighbors(Vertex v) const {
      return {_edges.data() + _offsets[v], _edges.data() + _offsets[v + 1]};
    }

    std::string const& label(Vertex v) const {
      return _labels[v];
    }

    std::span<std::string const> letter_labels() const noexcept {
      return _letter_labels;
    }

    //! Number of vertices at each distance 0..radius_out from the identity.
    std::vector<std::size_t> sphere_sizes() const;

    //! False for balls read back with import_text(); those carry labels and
    //! adjacency but no element algebra.
    bool has_group() const noexcept {
      return _group.has_value();
    }
    GroupSpec const& group() const;
    Element const&   element(Vertex v) const;

    std::optional<Vertex> find(Element const& e) const;
    //! Vertex of a word over the standard generators, if inside the ball.
    std::optional<Vertex> find_word(std::string_view word) const;

    //! Word-metric distance d(u, v) = |u^-1 v|, exact whenever it is at most
    //! radius_out(); returns radius_out() + 1 when u^-1 v lies outside.
    int word_distance(Vertex u, Vertex v) const;

    //! Letter labels along a vertex path, joined by '.'; "1" for a
    //! single-vertex path.
    std::string path_word(std::span<Vertex const> path) const;

    //! Line format: `vertices N radius_in R radius_out S`, then `index label`
    //! per vertex, then `u v letter` per directed adjacency entry.
    std::string        export_text() const;
    static BallGraph   import_text(std::string_view text);

    friend BallGraph build_ball(GroupSpec const&,
                                std::span<GeneratorLetter const>,
                                int,
                                std::size_t);

   private:
    BallGraph() = default;
    void finish_prefixes();

    std::optional<GroupSpec>                        _group;
    std::vector<Element>                            _elements;
    std::unordered_map<Element, Vertex, ElementHash> _index;
    std::vector<std::string>                        _labels;
    std::vector<std::string>                        _letter_labels;
    std::vector<std::uint16_t>                      _norms;
    std::vector<std::size_t>                        _offsets;
    std::vector<Edge>                               _edges;
    int                                             _radius_in  = 0;
    int                                             _radius_out = 0;
    std::size_t                                     _inner      = 0;
    std::size_t                                     _hull       = 0;
  };

  //! Breadth-first enumeration of the ball of radius 3 * radius_in with
  //! vertices deduplicated by normal form.  Throws BudgetExceeded when more
  //! than vertex_budget vertices would be needed and std::invalid_argument for
  //! radius_in < 1 or an empty generating set.
  BallGraph build_ball(GroupSpec const&                 spec,
                       std::span<GeneratorLetter const> letters,
                       int                              radius_in,
                       std::size_t vertex_budget = kDefaultVertexBudget);

  //! Dense symmetric matrix of word distances over a vertex prefix.
  class DistanceMatrix {
   public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<std::uint16_t> values, int far);

    std::size_t size() const noexcept {
      return _n;
    }

    int operator()(std::size_t u, std::size_t v) const {
      return _values[u * _n + v];
    }

    //! Value stored for pairs whose distance exceeds the ball's range.
    int far() const noexcept {
      return _far;
    }

    std::span<std::uint16_t const> row(std::size_t u) const {
      return {_values.data() + u * _n, _n};
    }

    friend bool operator==(DistanceMatrix const&, DistanceMatrix const&) = default;

   private:
    std::size_t                _n = 0;
    std::vector<std::uint16_t> _values;
    int                        _far = 0;
  };

  //! One breadth-first pass per inner vertex over the whole ball; the result
  //! is restricted to inner pairs, where it equals the distance in the full
  //! Cayley graph.
  DistanceMatrix all_pairs_distances(BallGraph const& ball);

  //! Distances between hull vertices via left-invariance, d(u,v) = |u^-1 v|.
  //! The matrix covers hull_size() vertices and agrees with
  //! all_pairs_distances() on the inner block.  Every geodesic-level
  //! computation (intervals, polygons, bigons, mesh) runs on this matrix.
  //! Requires has_group().
  DistanceMatrix hull_distances(BallGraph const& ball);

  //! Breadth-first distances from source over the whole ball, saturating at
  //! cap.  Exact for values <= radius_out - norm(source).
  std::vector<std::uint16_t>
  bfs_distances(BallGraph const& ball, Vertex source, int cap);

  //! sup_{y in Y} d(y, Z).  Throws std::invalid_argument on empty sets.
  int one_sided_hausdorff(DistanceMatrix const&   dist,
                          std::span<Vertex const> from,
                          std::span<Vertex const> to);

  //! max of the two one-sided distances.
  int hausdorff(DistanceMatrix const&   dist,
                std::span<Vertex const> y,
                std::span<Vertex const> z);

}  // namespace polyhyp

#endif  // POLYHYP_BALL_HPP_
