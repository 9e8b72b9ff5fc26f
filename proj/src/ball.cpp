#include "polyhyp/ball.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace polyhyp {

  BudgetExceeded::BudgetExceeded(std::size_t budget,
                                 std::size_t vertices_reached,
                                 int         completed_radius)
      : std::runtime_error("vertex budget of " + std::to_string(budget)
                           + " exceeded after " + std::to_string(vertices_reached)
                           + " vertices (complete through radius "
                           + std::to_string(completed_radius) + ")"),
        _budget(budget),
        _reached(vertices_reached),
        _radius(completed_radius) {}

  ////////////////////////////////////////////////////////////////////////
  // BallGraph
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> BallGraph::sphere_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(_radius_out) + 1, 0);
    for (auto n : _norms) {
      ++sizes[n];
    }
    return sizes;
  }

  GroupSpec const& BallGraph::group() const {
    if (!_group) {
      throw std::logic_error("ball has no group attached (imported ball)");
    }
    return *_group;
  }

  Element const& BallGraph::element(Vertex v) const {
    if (!_group) {
      throw std::logic_error("ball has no group attached (imported ball)");
    }
    return _elements[v];
  }

  std::optional<Vertex> BallGraph::find(Element const& e) const {
    auto it = _index.find(e);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Vertex> BallGraph::find_word(std::string_view word) const {
    return find(group().parse_word(word));
  }

  int BallGraph::word_distance(Vertex u, Vertex v) const {
    if (u == v) {
      return 0;
    }
    auto const& g = group();
    auto        w = find(g.multiply(g.invert(_elements[u]), _elements[v]));
    return w ? _norms[*w] : _radius_out + 1;
  }

  std::string BallGraph::path_word(std::span<Vertex const> path) const {
    if (path.size() <= 1) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto nbrs = neighbors(path[i]);
      auto it   = std::find_if(nbrs.begin(), nbrs.end(), [&](Edge const& e) {
        return e.target == path[i + 1];
      });
      if (it == nbrs.end()) {
        throw std::invalid_argument("path_word: consecutive vertices not adjacent");
      }
      if (i > 0) {
        out += '.';
      }
      out += _letter_labels[it->letter];
    }
    return out;
  }

  void BallGraph::finish_prefixes() {
    _inner = _hull = 0;
    for (auto n : _norms) {
      if (n <= _radius_in) {
        ++_inner;
      }
      if (n <= 2 * _radius_in) {
        ++_hull;
      }
    }
  }

  std::string BallGraph::export_text() const {
    std::string out = "vertices " + std::to_string(size()) + " radius_in "
                      + std::to_string(_radius_in) + " radius_out "
                      + std::to_string(_radius_out) + "\n";
    for (std::size_t v = 0; v < size(); ++v) {
      out += std::to_string(v);
      out += ' ';
      out += _labels[v];
      out += '\n';
    }
    for (std::size_t v = 0; v < size(); ++v) {
      for (auto const& e : neighbors(static_cast<Vertex>(v))) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(e.target);
        out += ' ';
        out += _letter_labels[e.letter];
        out += '\n';
      }
    }
    return out;
  }

  namespace {
    std::vector<std::string_view> split_lines(std::string_view text) {
      std::vector<std::string_view> lines;
      std::size_t                   pos = 0;
      while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
          lines.push_back(text.substr(pos));
          break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
      }
      return lines;
    }

    std::uint64_t to_uint(std::string_view s, std::size_t line) {
      std::uint64_t value = 0;
      auto [ptr, ec]      = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("ball import: expected integer, got '" + std::string(s)
                             + "'",
                         line);
      }
      return value;
    }
  }  // namespace

  // Positions reported in ParseError are line numbers here.
  BallGraph BallGraph::import_text(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) {
      throw ParseError("ball import: missing header", 0);
    }
    std::istringstream header{std::string(lines[0])};
    std::string        k1, k2, k3;
    std::string        n_s, rin_s, rout_s;
    header >> k1 >> n_s >> k2 >> rin_s >> k3 >> rout_s;
    if (k1 != "vertices" || k2 != "radius_in" || k3 != "radius_out") {
      throw ParseError("ball import: malformed header", 0);
    }
    BallGraph ball;
    auto      n     = to_uint(n_s, 0);
    ball._radius_in  = static_cast<int>(to_uint(rin_s, 0));
    ball._radius_out = static_cast<int>(to_uint(rout_s, 0));
    if (lines.size() < n + 1) {
      throw ParseError("ball import: truncated vertex list", lines.size());
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto line  = lines[v + 1];
      auto space = line.find(' ');
      if (space == std::string_view::npos
          || to_uint(line.substr(0, space), v + 1) != v) {
        throw ParseError("ball import: bad vertex line", v + 1);
      }
      ball._labels.emplace_back(line.substr(space + 1));
    }

    std::vector<std::vector<Edge>> adjacency(n);
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
      auto line = lines[i];
      if (line.empty()) {
        continue;
      }
      auto s1 = line.find(' ');
      auto s2 = s1 == std::string_view::npos ? s1 : line.find(' ', s1 + 1);
      if (s2 == std::string_view::npos) {
        throw ParseError("ball import: bad edge line", i);
      }
      auto u      = to_uint(line.substr(0, s1), i);
      auto v      = to_uint(line.substr(s1 + 1, s2 - s1 - 1), i);
      auto letter = std::string(line.substr(s2 + 1));
      if (u >= n || v >= n) {
        throw ParseError("ball import: edge endpoint out of range", i);
      }
      auto it = std::find(
          ball._letter_labels.begin(), ball._letter_labels.end(), letter);
      if (it == ball._letter_labels.end()) {
        ball._letter_labels.push_back(letter);
        it = ball._letter_labels.end() - 1;
      }
      adjacency[u].push_back(
          {static_cast<Vertex>(v),
           static_cast<std::uint16_t>(it - ball._letter_labels.begin())});
    }

    ball._offsets.push_back(0);
    for (auto const& nbrs : adjacency) {
      ball._edges.insert(ball._edges.end(), nbrs.begin(), nbrs.end());
      ball._offsets.push_back(ball._edges.size());
    }

    if (n > 0) {
      // size() reads the norm table, so give it length n before searching.
      ball._norms.assign(n, 0);
      auto d = bfs_distances(ball, 0, std::numeric_limits<std::uint16_t>::max());
      if (std::find(d.begin(), d.end(), std::numeric_limits<std::uint16_t>::max()) != d.end()) {
        throw ParseError("ball import: graph is not connected", 0);
      }
      ball._norms.assign(d.begin(), d.end());
    }
    ball.finish_prefixes();
    return ball;
  }

  BallGraph build_ball(GroupSpec const&                 spec,
                       std::span<GeneratorLetter const> letters,
                       int                              radius_in,
                       std::size_t                      vertex_budget) {
    if (radius_in < 1) {
      throw std::invalid_argument("radius_in must be at least 1");
    }
    if (letters.empty()) {
      throw std::invalid_argument("generating set is empty");
    }
    if (letters.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw std::invalid_argument("too many generators");
    }
    BallGraph ball;
    ball._group      = spec;
    ball._radius_in  = radius_in;
    ball._radius_out = 3 * radius_in;
    for (auto const& l : letters) {
      ball._letter_labels.push_back(l.label);
    }

    auto add = [&](Element e, std::uint16_t norm) {
      auto v = static_cast<Vertex>(ball._elements.size());
      ball._index.emplace(e, v);
      ball._elements.push_back(std::move(e));
      ball._norms.push_back(norm);
      return v;
    };
    add(spec.identity(), 0);

    std::vector<std::vector<Edge>> adjacency;
    for (std::size_t v = 0; v < ball._elements.size(); ++v) {
      auto norm = ball._norms[v];
      adjacency.emplace_back();
      for (std::size_t a = 0; a < letters.size(); ++a) {
        Element next = spec.multiply(ball._elements[v], letters[a].value);
        auto    it   = ball._index.find(next);
        Vertex  target;
        if (it != ball._index.end()) {
          target = it->second;
        } else if (norm < ball._radius_out) {
          if (ball._elements.size() >= vertex_budget) {
            throw BudgetExceeded(vertex_budget, ball._elements.size(), norm);
          }
          target = add(std::move(next), static_cast<std::uint16_t>(norm + 1));
        } else {
          continue;
        }
        adjacency.back().push_back({target, static_cast<std::uint16_t>(a)});
      }
    }

    ball._offsets.push_back(0);
    for (auto const& nbrs : adjacency) {
      ball._edges.insert(ball._edges.end(), nbrs.begin(), nbrs.end());
      ball._offsets.push_back(ball._edges.size());
    }
    ball._labels.reserve(ball._elements.size());
    for (auto const& e : ball._elements) {
      ball._labels.push_back(spec.format(e));
    }
    ball.finish_prefixes();
    return ball;
  }

  ////////////////////////////////////////////////////////////////////////
  // Distances
  ////////////////////////////////////////////////////////////////////////

  DistanceMatrix::DistanceMatrix(std::size_t                n,
                                 std::vector<std::uint16_t> values,
                                 int                        far)
      : _n(n), _values(std::move(values)), _far(far) {
    if (_values.size() != n * n) {
      throw std::invalid_argument("DistanceMatrix: size mismatch");
    }
  }

  std::vector<std::uint16_t>
  bfs_distances(BallGraph const& ball, Vertex source, int cap) {
    auto const                 unseen = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> dist(ball.size(), unseen);
    std::vector<Vertex>        queue;
    queue.reserve(ball.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      if (dist[u] >= cap) {
        continue;
      }
      for (auto const& e : ball.neighbors(u)) {
        if (dist[e.target] == unseen) {
          dist[e.target] = static_cast<std::uint16_t>(dist[u] + 1);
          queue.push_back(e.target);
        }
      }
    }
    auto c = static_cast<std::uint16_t>(std::min<int>(cap, unseen));
    for (auto& d : dist) {
      d = std::min(d, c);
    }
    return dist;
  }

  DistanceMatrix all_pairs_distances(BallGraph const& ball) {
    auto const                 n = ball.inner_size();
    std::vector<std::uint16_t> values(n * n);
    int const                  far = std::numeric_limits<std::uint16_t>::max();
    for (std::size_t u = 0; u < n; ++u) {
      auto d = bfs_distances(ball, static_cast<Vertex>(u), far);
      std::copy(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n),
                values.begin() + static_cast<std::ptrdiff_t>(u * n));
    }
    return DistanceMatrix(n, std::move(values), far);
  }

  DistanceMatrix hull_distances(BallGraph const& ball) {
    auto const& g   = ball.group();
    auto const  n   = ball.hull_size();
    int const   far = ball.radius_out() + 1;
    std::vector<std::uint16_t> values(n * n, 0);
    std::vector<Element>       inverses;
    inverses.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
      inverses.push_back(g.invert(ball.element(static_cast<Vertex>(u))));
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        auto w = ball.find(g.multiply(inverses[u], ball.element(static_cast<Vertex>(v))));
        auto d = static_cast<std::uint16_t>(w ? ball.norm(*w) : far);
        values[u * n + v] = d;
        values[v * n + u] = d;
      }
    }
    return DistanceMatrix(n, std::move(values), far);
  }

  int one_sided_hausdorff(DistanceMatrix const&   dist,
                          std::span<Vertex const> from,
                          std::span<Vertex const> to) {
    if (from.empty() || to.empty()) {
      throw std::invalid_argument("hausdorff: empty vertex set");
    }
    int result = 0;
    for (auto y : from) {
      int best = std::numeric_limits<int>::max();
      for (auto z : to) {
        best = std::min(best, dist(y, z));
      }
      result = std::max(result, best);
    }
    return result;
  }

  int hausdorff(DistanceMatrix const&   dist,
                std::span<Vertex const> y,
                std::span<Vertex const> z) {
    return std::max(one_sided_hausdorff(dist, y, z), one_sided_hausdorff(dist, z, y));
  }

}  // namespace polyhyp
