#include "polyhyp/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polyhyp {

  bool GeodesicInterval::contains(Vertex w) const {
    return std::find(members.begin(), members.end(), w) != members.end();
  }

  GeodesicInterval interval(DistanceMatrix const& dist, Vertex u, Vertex v) {
    GeodesicInterval result{u, v, {}};
    auto const       duv = dist(u, v);
    auto const       ru  = dist.row(u);
    auto const       rv  = dist.row(v);
    for (std::size_t w = 0; w < dist.size(); ++w) {
      if (ru[w] + rv[w] == duv) {
        result.members.push_back(static_cast<Vertex>(w));
      }
    }
    std::stable_sort(result.members.begin(),
                     result.members.end(),
                     [&](Vertex a, Vertex b) { return ru[a] < ru[b]; });
    return result;
  }

  GeodesicDag::GeodesicDag(BallGraph const&      ball,
                           DistanceMatrix const& dist,
                           Vertex                from,
                           Vertex                to)
      : _from(from), _to(to) {
    _nodes = interval(dist, from, to).members;
    auto const ru = dist.row(from);
    auto const length = static_cast<std::size_t>(dist(from, to));
    _levels.reserve(_nodes.size());
    _layer_off.assign(length + 2, 0);
    for (auto w : _nodes) {
      _levels.push_back(ru[w]);
      ++_layer_off[ru[w] + 1];
    }
    std::partial_sum(_layer_off.begin(), _layer_off.end(), _layer_off.begin());

    std::vector<std::vector<std::uint32_t>> pred(_nodes.size()), succ(_nodes.size());
    for (std::size_t i = 0; i < _nodes.size() && _levels[i] < length; ++i) {
      for (auto const& e : ball.neighbors(_nodes[i])) {
        if (e.target >= dist.size() || ru[e.target] != _levels[i] + 1) {
          continue;
        }
        auto [lo, hi] = layer(_levels[i] + 1);
        auto first    = _nodes.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last     = _nodes.begin() + static_cast<std::ptrdiff_t>(hi);
        auto it       = std::lower_bound(first, last, e.target);
        if (it == last || *it != e.target) {
          continue;
        }
        auto j = static_cast<std::uint32_t>(it - _nodes.begin());
        // Multi-edges (two letters with the same endpoints) collapse.
        if (std::find(succ[i].begin(), succ[i].end(), j) == succ[i].end()) {
          succ[i].push_back(j);
          pred[j].push_back(static_cast<std::uint32_t>(i));
        }
      }
    }
    _pred_off.push_back(0);
    _succ_off.push_back(0);
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      std::sort(pred[i].begin(), pred[i].end());
      _pred.insert(_pred.end(), pred[i].begin(), pred[i].end());
      _pred_off.push_back(_pred.size());
      _succ.insert(_succ.end(), succ[i].begin(), succ[i].end());
      _succ_off.push_back(_succ.size());
    }
  }

  std::size_t GeodesicDag::node_of(Vertex v) const {
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      if (_nodes[i] == v) {
        return i;
      }
    }
    throw std::invalid_argument("vertex is not on a geodesic of this interval");
  }

  std::uint64_t GeodesicDag::count() const {
    auto const              max = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> ways(_nodes.size(), 0);
    ways[0] = 1;
    for (std::size_t i = 1; i < _nodes.size(); ++i) {
      for (auto p : predecessors(i)) {
        ways[i] = ways[p] > max - ways[i] ? max : ways[i] + ways[p];
      }
    }
    return ways.back();
  }

  namespace {
    std::vector<int> widest_table(GeodesicDag const&             dag,
                                  std::span<std::uint16_t const> weight) {
      auto             nodes = dag.nodes();
      std::vector<int> best(nodes.size(), 0);
      best[0] = weight[nodes[0]];
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        int through = 0;
        for (auto p : dag.predecessors(i)) {
          through = std::max(through, best[p]);
        }
        best[i] = std::min<int>(weight[nodes[i]], through);
      }
      return best;
    }
  }  // namespace

  int GeodesicDag::widest(std::span<std::uint16_t const> weight) const {
    return widest_table(*this, weight).back();
  }

  GeodesicPath GeodesicDag::widest_path(std::span<std::uint16_t const> weight) const {
    auto                best = widest_table(*this, weight);
    std::vector<Vertex> rev;
    std::size_t         i = _nodes.size() - 1;
    rev.push_back(_nodes[i]);
    while (i != 0) {
      auto preds = predecessors(i);
      auto pick  = preds[0];
      for (auto p : preds) {
        if (best[p] > best[pick]) {
          pick = p;
        }
      }
      i = pick;
      rev.push_back(_nodes[i]);
    }
    return {{rev.rbegin(), rev.rend()}};
  }

  GeodesicPath GeodesicDag::through(Vertex via) const {
    auto                k = node_of(via);
    std::vector<Vertex> path;
    for (std::size_t i = k; i != 0; i = predecessors(i)[0]) {
      path.push_back(_nodes[i]);
    }
    path.push_back(_nodes[0]);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = k; i + 1 != _nodes.size();) {
      i = successors(i)[0];
      path.push_back(_nodes[i]);
    }
    return {std::move(path)};
  }

  GeodesicList GeodesicDag::enumerate(std::size_t cap) const {
    GeodesicList             result;
    std::vector<std::uint32_t> stack{0};
    std::vector<std::size_t> cursor{0};
    auto const               last = _nodes.size() - 1;
    if (last == 0) {
      result.paths.push_back({{_nodes[0]}});
      return result;
    }
    while (!stack.empty()) {
      auto node = stack.back();
      if (node == last) {
        if (result.paths.size() == cap) {
          result.truncated = true;
          return result;
        }
        GeodesicPath path;
        for (auto n : stack) {
          path.vertices.push_back(_nodes[n]);
        }
        result.paths.push_back(std::move(path));
        stack.pop_back();
        cursor.pop_back();
        continue;
      }
      auto succ = successors(node);
      if (cursor.back() == succ.size()) {
        stack.pop_back();
        cursor.pop_back();
        continue;
      }
      stack.push_back(succ[cursor.back()++]);
      cursor.push_back(0);
    }
    return result;
  }

  GeodesicList enumerate_geodesics(BallGraph const&      ball,
                                   DistanceMatrix const& dist,
                                   Vertex                u,
                                   Vertex                v,
                                   std::size_t           cap) {
    if (cap == 0) {
      throw std::invalid_argument("geodesic cap must be at least 1");
    }
    return GeodesicDag(ball, dist, u, v).enumerate(cap);
  }

  void validate_polygon(Polygon const& poly) {
    auto const& s = poly.sides;
    if (s.size() < 2) {
      throw std::invalid_argument("polygon needs at least two sides");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].vertices.empty()) {
        throw std::invalid_argument("polygon side is empty");
      }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto const& next = s[(i + 1) % s.size()];
      if (s[i].back() != next.front()) {
        throw std::invalid_argument("polygon sides do not chain up");
      }
    }
  }

  int polygon_thinness(DistanceMatrix const& dist, Polygon const& poly) {
    validate_polygon(poly);
    std::vector<Vertex> z;
    for (std::size_t i = 0; i + 1 < poly.sides.size(); ++i) {
      auto const& side = poly.sides[i].vertices;
      z.insert(z.end(), side.begin(), side.end());
    }
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return one_sided_hausdorff(dist, poly.sides.back().vertices, z);
  }

}  // namespace polyhyp
