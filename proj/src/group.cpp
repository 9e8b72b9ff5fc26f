#include "polyhyp/group.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

namespace polyhyp {

  ParseError::ParseError(std::string const& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        _position(position) {}

  bool operator==(FreeWord const& a, FreeWord const& b) {
    return a.letters == b.letters;
  }
  bool operator==(Residue const& a, Residue const& b) {
    return a.value == b.value;
  }
  bool operator==(Permutation const& a, Permutation const& b) {
    return a.images == b.images;
  }
  bool operator==(Syllables const& a, Syllables const& b) {
    return a.factors == b.factors && a.values == b.values;
  }
  bool operator==(Components const& a, Components const& b) {
    return a.values == b.values;
  }
  bool operator==(Element const& a, Element const& b) {
    return a.form == b.form;
  }

  namespace {
    inline void mix(std::size_t& seed, std::size_t value) {
      seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }

    template <typename... Ts>
    struct Overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    Overloaded(Ts...) -> Overloaded<Ts...>;
  }  // namespace

  std::size_t hash_value(Element const& e) {
    std::size_t seed = e.form.index();
    std::visit(Overloaded{
                   [&](FreeWord const& w) {
                     for (auto l : w.letters) {
                       mix(seed, static_cast<std::size_t>(l));
                     }
                   },
                   [&](Residue const& r) {
                     mix(seed, static_cast<std::size_t>(r.value));
                   },
                   [&](Permutation const& p) {
                     for (auto i : p.images) {
                       mix(seed, i);
                     }
                   },
                   [&](Syllables const& s) {
                     for (std::size_t i = 0; i < s.values.size(); ++i) {
                       mix(seed, s.factors[i]);
                       mix(seed, hash_value(s.values[i]));
                     }
                   },
                   [&](Components const& c) {
                     for (auto const& v : c.values) {
                       mix(seed, hash_value(v));
                     }
                   }},
               e.form);
    return seed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group nodes
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using detail::GroupNode;
    using NodePtr = std::shared_ptr<GroupNode const>;

    class FreeGroupNode final : public GroupNode {
     public:
      explicit FreeGroupNode(std::vector<std::string> names)
          : _names(std::move(names)) {}

      Element identity() const override {
        return Element{FreeWord{}};
      }

      Element multiply(Element const& a, Element const& b) const override {
        auto const& x = std::get<FreeWord>(a.form).letters;
        auto const& y = std::get<FreeWord>(b.form).letters;
        std::size_t cancel = 0;
        while (cancel < x.size() && cancel < y.size()
               && x[x.size() - 1 - cancel] == -y[cancel]) {
          ++cancel;
        }
        FreeWord result;
        result.letters.reserve(x.size() + y.size() - 2 * cancel);
        result.letters.insert(
            result.letters.end(), x.begin(), x.end() - cancel);
        result.letters.insert(result.letters.end(), y.begin() + cancel, y.end());
        return Element{std::move(result)};
      }

      Element invert(Element const& a) const override {
        auto const& x = std::get<FreeWord>(a.form).letters;
        FreeWord    result;
        result.letters.reserve(x.size());
        for (auto it = x.rbegin(); it != x.rend(); ++it) {
          result.letters.push_back(-*it);
        }
        return Element{std::move(result)};
      }

      bool is_identity(Element const& a) const override {
        return std::get<FreeWord>(a.form).letters.empty();
      }

      bool is_normal_form(Element const& a) const override {
        auto const* w = std::get_if<FreeWord>(&a.form);
        if (w == nullptr) {
          return false;
        }
        auto const rank = static_cast<std::int32_t>(_names.size());
        for (std::size_t i = 0; i < w->letters.size(); ++i) {
          auto l = w->letters[i];
          if (l == 0 || l > rank || l < -rank) {
            return false;
          }
          if (i > 0 && w->letters[i - 1] == -l) {
            return false;
          }
        }
        return true;
      }

      std::size_t generator_count() const override {
        return _names.size();
      }

      Element generator(std::size_t local) const override {
        return Element{FreeWord{{static_cast<std::int32_t>(local + 1)}}};
      }

      void format(Element const& a, std::string& out) const override {
        auto const& w = std::get<FreeWord>(a.form).letters;
        if (w.empty()) {
          out += '1';
          return;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (i > 0) {
            out += '.';
          }
          out += _names[static_cast<std::size_t>(std::abs(w[i]) - 1)];
          if (w[i] < 0) {
            out += "^-1";
          }
        }
      }

      std::string structure() const override {
        std::string s = "Free(";
        for (std::size_t i = 0; i < _names.size(); ++i) {
          s += (i ? "," : "") + _names[i];
        }
        return s + ")";
      }

     private:
      std::vector<std::string> _names;
    };

    // Z when order == 0, Z/order otherwise.
    class CyclicNode final : public GroupNode {
     public:
      CyclicNode(std::int64_t order, std::string name)
          : _order(order), _name(std::move(name)) {}

      Element identity() const override {
        return Element{Residue{0}};
      }

      Element multiply(Element const& a, Element const& b) const override {
        return Element{Residue{reduce(std::get<Residue>(a.form).value
                                      + std::get<Residue>(b.form).value)}};
      }

      Element invert(Element const& a) const override {
        return Element{Residue{reduce(-std::get<Residue>(a.form).value)}};
      }

      bool is_identity(Element const& a) const override {
        return std::get<Residue>(a.form).value == 0;
      }

      bool is_normal_form(Element const& a) const override {
        auto const* r = std::get_if<Residue>(&a.form);
        return r != nullptr
               && (_order == 0 || (r->value >= 0 && r->value < _order));
      }

      std::size_t generator_count() const override {
        return 1;
      }

      Element generator(std::size_t) const override {
        return Element{Residue{1}};
      }

      void format(Element const& a, std::string& out) const override {
        auto v = std::get<Residue>(a.form).value;
        if (v == 0) {
          out += '1';
          return;
        }
        out += _name;
        if (v != 1) {
          out += '^';
          out += std::to_string(v);
        }
      }

      std::string structure() const override {
        return _order == 0 ? "Integers" : "Cyclic(" + std::to_string(_order) + ")";
      }

     private:
      std::int64_t reduce(std::int64_t v) const {
        if (_order == 0) {
          return v;
        }
        v %= _order;
        return v < 0 ? v + _order : v;
      }

      std::int64_t _order;
      std::string  _name;
    };

    class SymmetricNode final : public GroupNode {
     public:
      SymmetricNode(std::size_t degree, std::string first_name)
          : _degree(degree), _tag(std::move(first_name)) {}

      Element identity() const override {
        Permutation p;
        p.images.resize(_degree);
        std::iota(p.images.begin(), p.images.end(), std::uint16_t{0});
        return Element{std::move(p)};
      }

      // (a*b)(i) = a(b(i))
      Element multiply(Element const& a, Element const& b) const override {
        auto const& x = std::get<Permutation>(a.form).images;
        auto const& y = std::get<Permutation>(b.form).images;
        Permutation p;
        p.images.resize(_degree);
        for (std::size_t i = 0; i < _degree; ++i) {
          p.images[i] = x[y[i]];
        }
        return Element{std::move(p)};
      }

      Element invert(Element const& a) const override {
        auto const& x = std::get<Permutation>(a.form).images;
        Permutation p;
        p.images.resize(_degree);
        for (std::size_t i = 0; i < _degree; ++i) {
          p.images[x[i]] = static_cast<std::uint16_t>(i);
        }
        return Element{std::move(p)};
      }

      bool is_identity(Element const& a) const override {
        auto const& x = std::get<Permutation>(a.form).images;
        for (std::size_t i = 0; i < _degree; ++i) {
          if (x[i] != i) {
            return false;
          }
        }
        return true;
      }

      bool is_normal_form(Element const& a) const override {
        auto const* p = std::get_if<Permutation>(&a.form);
        if (p == nullptr || p->images.size() != _degree) {
          return false;
        }
        std::vector<bool> seen(_degree, false);
        for (auto i : p->images) {
          if (i >= _degree || seen[i]) {
            return false;
          }
          seen[i] = true;
        }
        return true;
      }

      std::size_t generator_count() const override {
        return _degree - 1;
      }

      Element generator(std::size_t local) const override {
        Element e  = identity();
        auto&   im = std::get<Permutation>(e.form).images;
        std::swap(im[local], im[local + 1]);
        return e;
      }

      void format(Element const& a, std::string& out) const override {
        if (is_identity(a)) {
          out += '1';
          return;
        }
        out += _tag;
        out += '[';
        auto const& x = std::get<Permutation>(a.form).images;
        for (std::size_t i = 0; i < _degree; ++i) {
          if (i > 0) {
            out += ',';
          }
          out += std::to_string(x[i]);
        }
        out += ']';
      }

      std::string structure() const override {
        return "Symmetric(" + std::to_string(_degree) + ")";
      }

     private:
      std::size_t _degree;
      std::string _tag;
    };

    // Shared bookkeeping for nodes with children.
    class CompositeNode : public GroupNode {
     public:
      explicit CompositeNode(std::vector<NodePtr> children)
          : _children(std::move(children)) {
        std::size_t offset = 0;
        for (auto const& child : _children) {
          _offsets.push_back(offset);
          offset += child->generator_count();
        }
        _count = offset;
      }

      std::size_t generator_count() const override {
        return _count;
      }

     protected:
      std::pair<std::size_t, std::size_t> locate(std::size_t local) const {
        auto it = std::upper_bound(_offsets.begin(), _offsets.end(), local);
        auto c  = static_cast<std::size_t>(it - _offsets.begin()) - 1;
        return {c, local - _offsets[c]};
      }

      std::string structure_of(std::string const& kind) const {
        std::string s = kind + "(";
        for (std::size_t i = 0; i < _children.size(); ++i) {
          s += (i ? ", " : "") + _children[i]->structure();
        }
        return s + ")";
      }

      std::vector<NodePtr>     _children;
      std::vector<std::size_t> _offsets;
      std::size_t              _count = 0;
    };

    class FreeProductNode final : public CompositeNode {
     public:
      using CompositeNode::CompositeNode;

      Element identity() const override {
        return Element{Syllables{}};
      }

      Element multiply(Element const& a, Element const& b) const override {
        Syllables   result = std::get<Syllables>(a.form);
        auto const& rhs    = std::get<Syllables>(b.form);
        for (std::size_t i = 0; i < rhs.values.size(); ++i) {
          push(result, rhs.factors[i], rhs.values[i]);
        }
        return Element{std::move(result)};
      }

      Element invert(Element const& a) const override {
        auto const& s = std::get<Syllables>(a.form);
        Syllables   result;
        for (std::size_t i = s.values.size(); i-- > 0;) {
          result.factors.push_back(s.factors[i]);
          result.values.push_back(_children[s.factors[i]]->invert(s.values[i]));
        }
        return Element{std::move(result)};
      }

      bool is_identity(Element const& a) const override {
        return std::get<Syllables>(a.form).values.empty();
      }

      bool is_normal_form(Element const& a) const override {
        auto const* s = std::get_if<Syllables>(&a.form);
        if (s == nullptr || s->factors.size() != s->values.size()) {
          return false;
        }
        for (std::size_t i = 0; i < s->values.size(); ++i) {
          auto f = s->factors[i];
          if (f >= _children.size()) {
            return false;
          }
          if (i > 0 && s->factors[i - 1] == f) {
            return false;
          }
          if (!_children[f]->is_normal_form(s->values[i])
              || _children[f]->is_identity(s->values[i])) {
            return false;
          }
        }
        return true;
      }

      Element generator(std::size_t local) const override {
        auto [c, j] = locate(local);
        Syllables s;
        s.factors.push_back(static_cast<std::uint32_t>(c));
        s.values.push_back(_children[c]->generator(j));
        return Element{std::move(s)};
      }

      void format(Element const& a, std::string& out) const override {
        auto const& s = std::get<Syllables>(a.form);
        if (s.values.empty()) {
          out += '1';
          return;
        }
        for (std::size_t i = 0; i < s.values.size(); ++i) {
          if (i > 0) {
            out += '.';
          }
          _children[s.factors[i]]->format(s.values[i], out);
        }
      }

      std::string structure() const override {
        return structure_of("FreeProduct");
      }

     private:
      void push(Syllables& s, std::uint32_t factor, Element const& value) const {
        if (!s.factors.empty() && s.factors.back() == factor) {
          Element merged = _children[factor]->multiply(s.values.back(), value);
          s.factors.pop_back();
          s.values.pop_back();
          if (!_children[factor]->is_identity(merged)) {
            s.factors.push_back(factor);
            s.values.push_back(std::move(merged));
          }
        } else {
          s.factors.push_back(factor);
          s.values.push_back(value);
        }
      }
    };

    class DirectProductNode final : public CompositeNode {
     public:
      using CompositeNode::CompositeNode;

      Element identity() const override {
        Components c;
        for (auto const& child : _children) {
          c.values.push_back(child->identity());
        }
        return Element{std::move(c)};
      }

      Element multiply(Element const& a, Element const& b) const override {
        auto const& x = std::get<Components>(a.form).values;
        auto const& y = std::get<Components>(b.form).values;
        Components  c;
        c.values.reserve(_children.size());
        for (std::size_t i = 0; i < _children.size(); ++i) {
          c.values.push_back(_children[i]->multiply(x[i], y[i]));
        }
        return Element{std::move(c)};
      }

      Element invert(Element const& a) const override {
        auto const& x = std::get<Components>(a.form).values;
        Components  c;
        c.values.reserve(_children.size());
        for (std::size_t i = 0; i < _children.size(); ++i) {
          c.values.push_back(_children[i]->invert(x[i]));
        }
        return Element{std::move(c)};
      }

      bool is_identity(Element const& a) const override {
        auto const& x = std::get<Components>(a.form).values;
        for (std::size_t i = 0; i < _children.size(); ++i) {
          if (!_children[i]->is_identity(x[i])) {
            return false;
          }
        }
        return true;
      }

      bool is_normal_form(Element const& a) const override {
        auto const* c = std::get_if<Components>(&a.form);
        if (c == nullptr || c->values.size() != _children.size()) {
          return false;
        }
        for (std::size_t i = 0; i < _children.size(); ++i) {
          if (!_children[i]->is_normal_form(c->values[i])) {
            return false;
          }
        }
        return true;
      }

      Element generator(std::size_t local) const override {
        auto [c, j]          = locate(local);
        Element e            = identity();
        std::get<Components>(e.form).values[c] = _children[c]->generator(j);
        return e;
      }

      void format(Element const& a, std::string& out) const override {
        auto const& x = std::get<Components>(a.form).values;
        out += '(';
        for (std::size_t i = 0; i < _children.size(); ++i) {
          if (i > 0) {
            out += ',';
          }
          _children[i]->format(x[i], out);
        }
        out += ')';
      }

      std::string structure() const override {
        return structure_of("DirectProduct");
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Parser
    ////////////////////////////////////////////////////////////////////////

    struct Ast {
      enum class Kind { free, integers, cyclic, symmetric, free_product, direct_product };
      Kind                     kind;
      std::size_t              position = 0;
      std::int64_t             n        = 0;
      std::vector<std::string> names{};
      std::vector<std::size_t> name_positions{};
      std::vector<Ast>         children{};
    };

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Ast parse() {
        Ast result = spec();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
        }
        return result;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("group spec: " + what, _pos);
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      Ast spec() {
        skip_space();
        auto start = _pos;
        Ast  first = term();
        if (!peek('*')) {
          return first;
        }
        Ast node{Ast::Kind::free_product, start};
        node.children.push_back(std::move(first));
        while (accept('*')) {
          node.children.push_back(term());
        }
        return node;
      }

      Ast term() {
        skip_space();
        auto start = _pos;
        Ast  first = atom();
        if (!peek('x')) {
          return first;
        }
        Ast node{Ast::Kind::direct_product, start};
        node.children.push_back(std::move(first));
        while (accept('x')) {
          node.children.push_back(atom());
        }
        return node;
      }

      bool peek(char c) {
        skip_space();
        return _pos < _text.size() && _text[_pos] == c;
      }

      std::optional<std::int64_t> integer() {
        auto start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          return std::nullopt;
        }
        if (_pos - start > 9) {
          _pos = start;
          fail("integer too large");
        }
        return std::stoll(std::string(_text.substr(start, _pos - start)));
      }

      Ast atom() {
        skip_space();
        auto start = _pos;
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          Ast inner = spec();
          expect(')');
          return inner;
        }
        if (c == 'F') {
          ++_pos;
          expect('(');
          Ast node{Ast::Kind::free, start};
          do {
            skip_space();
            node.name_positions.push_back(_pos);
            node.names.push_back(name());
          } while (accept(','));
          expect(')');
          return node;
        }
        if (c == 'Z' || c == 'S') {
          ++_pos;
          auto n = integer();
          if (!n) {
            if (c == 'S') {
              fail("S requires a degree");
            }
            return Ast{Ast::Kind::integers, start};
          }
          if (*n < 2) {
            _pos = start;
            fail(std::string(1, c) + std::to_string(*n)
                 + ": order must be at least 2");
          }
          if (c == 'S' && *n > 64) {
            _pos = start;
            fail("symmetric degree above 64 is not supported");
          }
          Ast node{c == 'Z' ? Ast::Kind::cyclic : Ast::Kind::symmetric, start};
          node.n = *n;
          return node;
        }
        fail("expected an atom (F(...), Z, Z<n>, S<n> or '(')");
      }

      std::string name() {
        auto start = _pos;
        if (_pos < _text.size()
            && (std::isalpha(static_cast<unsigned char>(_text[_pos]))
                || _text[_pos] == '_')) {
          ++_pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                     || _text[_pos] == '_')) {
            ++_pos;
          }
        }
        if (start == _pos) {
          fail("expected a generator name");
        }
        return std::string(_text.substr(start, _pos - start));
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    void collect_free_names(Ast const&                           node,
                            std::set<std::string, std::less<>>& used) {
      if (node.kind == Ast::Kind::free) {
        for (std::size_t i = 0; i < node.names.size(); ++i) {
          if (!used.insert(node.names[i]).second) {
            throw ParseError("group spec: duplicate generator name '"
                                 + node.names[i] + "'",
                             node.name_positions[i]);
          }
        }
      }
      for (auto const& child : node.children) {
        collect_free_names(child, used);
      }
    }

    class NamePool {
     public:
      explicit NamePool(std::set<std::string, std::less<>> const& taken)
          : _taken(taken) {}

      std::string next() {
        static constexpr std::string_view letters[]
            = {"s", "t", "u", "v", "w", "y", "z"};
        while (true) {
          std::string candidate
              = _cursor < std::size(letters)
                    ? std::string(letters[_cursor])
                    : "g" + std::to_string(_cursor - std::size(letters) + 1);
          ++_cursor;
          if (!_taken.contains(candidate)) {
            return candidate;
          }
        }
      }

     private:
      std::set<std::string, std::less<>> const& _taken;
      std::size_t                               _cursor = 0;
    };

    NodePtr build(Ast const&               node,
                  NamePool&                pool,
                  std::vector<std::size_t>& path,
                  std::vector<Generator>&  gens) {
      switch (node.kind) {
        case Ast::Kind::free:
          for (auto const& n : node.names) {
            gens.push_back({n, path});
          }
          return std::make_shared<FreeGroupNode>(node.names);
        case Ast::Kind::integers:
        case Ast::Kind::cyclic: {
          auto name = pool.next();
          gens.push_back({name, path});
          return std::make_shared<CyclicNode>(node.n, name);
        }
        case Ast::Kind::symmetric: {
          std::string first;
          for (std::int64_t i = 0; i + 1 < node.n; ++i) {
            auto name = pool.next();
            if (i == 0) {
              first = name;
            }
            gens.push_back({name, path});
          }
          return std::make_shared<SymmetricNode>(
              static_cast<std::size_t>(node.n), first);
        }
        case Ast::Kind::free_product:
        case Ast::Kind::direct_product: {
          std::vector<NodePtr> children;
          for (std::size_t i = 0; i < node.children.size(); ++i) {
            path.push_back(i);
            children.push_back(build(node.children[i], pool, path, gens));
            path.pop_back();
          }
          if (node.kind == Ast::Kind::free_product) {
            return std::make_shared<FreeProductNode>(std::move(children));
          }
          return std::make_shared<DirectProductNode>(std::move(children));
        }
      }
      return nullptr;
    }

    void render(Ast const& node, std::string& out, bool nested) {
      switch (node.kind) {
        case Ast::Kind::free:
          out += "F(";
          for (std::size_t i = 0; i < node.names.size(); ++i) {
            out += (i ? "," : "") + node.names[i];
          }
          out += ')';
          return;
        case Ast::Kind::integers:
          out += 'Z';
          return;
        case Ast::Kind::cyclic:
          out += 'Z' + std::to_string(node.n);
          return;
        case Ast::Kind::symmetric:
          out += 'S' + std::to_string(node.n);
          return;
        case Ast::Kind::free_product:
        case Ast::Kind::direct_product: {
          bool        product = node.kind == Ast::Kind::free_product;
          char const* sep     = product ? " * " : " x ";
          if (nested) {
            out += '(';
          }
          for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) {
              out += sep;
            }
            auto const& child   = node.children[i];
            bool        compound = child.kind == Ast::Kind::free_product
                            || child.kind == Ast::Kind::direct_product;
            // Inside a free product, a direct-product term binds tighter and
            // needs no parentheses.
            bool child_nested
                = compound
                  && !(product && child.kind == Ast::Kind::direct_product);
            render(child, out, child_nested);
          }
          if (nested) {
            out += ')';
          }
          return;
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroupSpec
  ////////////////////////////////////////////////////////////////////////

  GroupSpec GroupSpec::parse(std::string_view text) {
    Ast ast = Parser(text).parse();

    std::set<std::string, std::less<>> used;
    collect_free_names(ast, used);

    GroupSpec                spec;
    NamePool                 pool(used);
    std::vector<std::size_t> path;
    spec._root = build(ast, pool, path, spec._generators);
    render(ast, spec._text, false);
    return spec;
  }

  std::string GroupSpec::structure() const {
    return _root->structure();
  }

  std::optional<std::size_t> GroupSpec::find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      if (_generators[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  Element GroupSpec::identity() const {
    return _root->identity();
  }

  Element GroupSpec::generator(std::size_t index) const {
    if (index >= _generators.size()) {
      throw std::out_of_range("generator index out of range");
    }
    return _root->generator(index);
  }

  Element GroupSpec::multiply(Element const& a, Element const& b) const {
    return _root->multiply(a, b);
  }

  Element GroupSpec::invert(Element const& a) const {
    return _root->invert(a);
  }

  bool GroupSpec::is_identity(Element const& a) const {
    return _root->is_identity(a);
  }

  bool GroupSpec::is_normal_form(Element const& a) const {
    return _root->is_normal_form(a);
  }

  Element GroupSpec::parse_word(std::string_view word) const {
    auto trimmed_begin = word.find_first_not_of(" \t");
    if (trimmed_begin == std::string_view::npos) {
      throw ParseError("word: empty word", 0);
    }
    auto trimmed_end = word.find_last_not_of(" \t");
    auto body        = word.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
    if (body == "1") {
      return identity();
    }
    Element     result = identity();
    std::size_t pos    = 0;
    while (true) {
      auto dot   = body.find('.', pos);
      auto token = body.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
      auto where = trimmed_begin + pos;
      std::int64_t power = 1;
      if (auto caret = token.find('^'); caret != std::string_view::npos) {
        auto exponent = token.substr(caret + 1);
        auto parsed   = std::from_chars(exponent.data(), exponent.data() + exponent.size(), power);
        if (exponent.empty() || parsed.ec != std::errc()
            || parsed.ptr != exponent.data() + exponent.size()) {
          throw ParseError("word: bad exponent '" + std::string(exponent) + "'",
                           where + caret + 1);
        }
        token = token.substr(0, caret);
      }
      if (token.empty()) {
        throw ParseError("word: empty letter", where);
      }
      auto index = find_generator(token);
      if (!index) {
        throw ParseError("word: unknown generator '" + std::string(token) + "'",
                         where);
      }
      if (power > 1'000'000 || power < -1'000'000) {
        throw ParseError("word: exponent out of range", where);
      }
      Element g = _root->generator(*index);
      if (power < 0) {
        g     = invert(g);
        power = -power;
      }
      for (std::int64_t k = 0; k < power; ++k) {
        result = multiply(result, g);
      }
      if (dot == std::string_view::npos) {
        break;
      }
      pos = dot + 1;
    }
    return result;
  }

  std::string GroupSpec::format(Element const& a) const {
    std::string out;
    _root->format(a, out);
    return out;
  }

  std::vector<GeneratorLetter>
  symmetric_generating_set(GroupSpec const&             spec,
                           std::span<std::string const> words) {
    struct Base {
      std::string label;
      Element     value;
    };
    std::vector<Base> bases;
    if (words.empty()) {
      for (std::size_t i = 0; i < spec.generators().size(); ++i) {
        bases.push_back({spec.generators()[i].name, spec.generator(i)});
      }
    } else {
      for (auto const& w : words) {
        bases.push_back({"[" + w + "]", spec.parse_word(w)});
      }
    }

    std::vector<GeneratorLetter> letters;
    auto seen = [&](Element const& e) {
      return std::any_of(letters.begin(), letters.end(), [&](auto const& l) {
        return l.value == e;
      });
    };
    for (std::size_t i = 0; i < bases.size(); ++i) {
      auto const& b = bases[i];
      if (spec.is_identity(b.value) || seen(b.value)) {
        continue;
      }
      letters.push_back({b.label, b.value, i, false});
      Element inv = spec.invert(b.value);
      if (!seen(inv)) {
        letters.push_back({b.label + "^-1", std::move(inv), i, true});
      }
    }
    if (letters.empty()) {
      throw std::invalid_argument("generating set contains no nontrivial element");
    }
    return letters;
  }

}  // namespace polyhyp
