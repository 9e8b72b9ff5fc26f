// Finitely generated groups with decidable normal forms.
//
// A group is described by an expression over free groups, Z, Z/n and S_n,
// combined by free products (`*`) and direct products (`x`).  Every element
// is held in a canonical normal form, so two elements are equal exactly when
// their normal forms compare equal.

#ifndef POLYHYP_GROUP_HPP_
#define POLYHYP_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polyhyp {

  //! Thrown for malformed group specifications and words.  position() is a
  //! byte offset into the offending text.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position);

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  struct Element;

  // Reduced word in a free group.  Letter k+1 is generator k, -(k+1) is its
  // inverse; no two adjacent letters cancel.
  struct FreeWord {
    std::vector<std::int32_t> letters;
  };

  // Element of Z or Z/n.
  struct Residue {
    std::int64_t value = 0;
  };

  // One-line notation: images[i] is the image of i.
  struct Permutation {
    std::vector<std::uint16_t> images;
  };

  // Alternating syllable sequence of a free product.  factors[i] is the factor
  // index of values[i]; adjacent factors differ and no value is trivial.
  struct Syllables {
    std::vector<std::uint32_t> factors;
    std::vector<Element>       values;
  };

  // Component tuple of a direct product.
  struct Components {
    std::vector<Element> values;
  };

  bool operator==(FreeWord const&, FreeWord const&);
  bool operator==(Residue const&, Residue const&);
  bool operator==(Permutation const&, Permutation const&);
  bool operator==(Syllables const&, Syllables const&);
  bool operator==(Components const&, Components const&);

  struct Element {
    std::variant<FreeWord, Residue, Permutation, Syllables, Components> form;
  };

  bool operator==(Element const&, Element const&);

  std::size_t hash_value(Element const&);

  struct ElementHash {
    std::size_t operator()(Element const& e) const {
      return hash_value(e);
    }
  };

  namespace detail {
    // Node of the group expression tree.  Generators are numbered locally,
    // in source order, across the subtree.
    class GroupNode {
     public:
      virtual ~GroupNode() = default;

      virtual Element     identity() const                             = 0;
      virtual Element     multiply(Element const&, Element const&) const = 0;
      virtual Element     invert(Element const&) const                 = 0;
      virtual bool        is_identity(Element const&) const            = 0;
      virtual bool        is_normal_form(Element const&) const         = 0;
      virtual std::size_t generator_count() const                      = 0;
      virtual Element     generator(std::size_t local) const           = 0;
      virtual void        format(Element const&, std::string& out) const = 0;
      virtual std::string structure() const                            = 0;
    };
  }  // namespace detail

  //! A standard generator: its name and the path of child indices from the
  //! root of the expression to the atom that owns it.
  struct Generator {
    std::string              name;
    std::vector<std::size_t> atom_path;
  };

  //! A parsed group specification together with its element algebra.
  //!
  //! Grammar (whitespace is ignored between tokens):
  //!
  //!     spec := term ('*' term)*
  //!     term := atom ('x' atom)*
  //!     atom := 'F(' name (',' name)* ')' | 'Z' | 'Z' int | 'S' int
  //!           | '(' spec ')'
  //!
  //! Free generators take the names given.  Z, Z<n> and S<n> atoms receive
  //! names from the pool s, t, u, v, w, y, z, g1, g2, ... skipping any name
  //! already used by a free atom.  S<n> is generated by the adjacent
  //! transpositions (i i+1).
  //!
  //! GroupSpec is immutable and cheap to copy.
  class GroupSpec {
   public:
    static GroupSpec parse(std::string_view text);

    //! Canonical rendering of the expression, e.g. "Z2 * Z3".
    std::string const& text() const noexcept {
      return _text;
    }

    //! Structural description, e.g. "FreeProduct(Cyclic(2), Cyclic(3))".
    std::string structure() const;

    std::span<Generator const> generators() const noexcept {
      return _generators;
    }

    std::optional<std::size_t> find_generator(std::string_view name) const;

    Element identity() const;
    Element generator(std::size_t index) const;
    Element multiply(Element const& a, Element const& b) const;
    Element invert(Element const& a) const;
    bool    is_identity(Element const& a) const;
    bool    is_normal_form(Element const& a) const;

    //! Evaluates `a.b^-1.a^3`-style words over the standard generators: dot
    //! separated letters, each with an optional integer exponent.  The single
    //! token `1` denotes the identity.
    Element parse_word(std::string_view word) const;

    //! Canonical normal-form string; injective on elements.
    std::string format(Element const& a) const;

   private:
    GroupSpec() = default;

    std::shared_ptr<detail::GroupNode const> _root;
    std::vector<Generator>                   _generators;
    std::string                              _text;
  };

  inline GroupSpec parse_group_spec(std::string_view text) {
    return GroupSpec::parse(text);
  }

  //! One element of the symmetric generating set used for a Cayley graph.
  struct GeneratorLetter {
    std::string label;
    Element     value;
    std::size_t base     = 0;  // index into the list the set was built from
    bool        inverted = false;
  };

  //! Builds the generating set A ∪ A^-1.  With no words the standard
  //! generators are used; otherwise each word (over the standard generators)
  //! becomes a generator labelled `[word]`.  Trivial letters and letters equal
  //! to an earlier one are dropped, and an inverse is only added when it is a
  //! new element.  Throws std::invalid_argument if nothing nontrivial is left.
  std::vector<GeneratorLetter>
  symmetric_generating_set(GroupSpec const&                spec,
                           std::span<std::string const>    words = {});

}  // namespace polyhyp

#endif  // POLYHYP_GROUP_HPP_
