// Terms of a free non-symmetric operad: planar trees whose internal nodes
// carry generator symbols, and their evaluation inside T M.

#ifndef MONOPERAD_TERM_HPP_
#define MONOPERAD_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace monoperad {

  //! A named generator together with its realization in a target operad.
  struct GeneratorSymbol {
    std::string name;
    std::size_t arity;
    Word        image;
  };

  //! An ordered set of generator symbols sharing one target monoid.
  class Signature {
   public:
    //! Throws std::invalid_argument on duplicate or malformed names, on a
    //! symbol whose arity differs from its image's, or on mixed monoids.
    explicit Signature(std::vector<GeneratorSymbol> symbols);

    std::vector<GeneratorSymbol> const& symbols() const noexcept {
      return _symbols;
    }
    GeneratorSymbol const& operator[](std::size_t k) const {
      return _symbols.at(k);
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    std::optional<std::size_t> find(std::string_view name) const;
    Monoid const&              monoid() const;

   private:
    std::vector<GeneratorSymbol> _symbols;
  };

  //! A free-operad term stored as its preorder node sequence.
  //!
  //! Each node is (symbol index, arity); a leaf is (leaf_symbol, 0). The
  //! preorder sequence determines the tree, so it doubles as the canonical
  //! dedup key.
  class FreeTerm {
   public:
    struct Node {
      std::int32_t symbol;
      std::uint32_t arity;
      friend bool operator==(Node const&, Node const&) = default;
    };
    static constexpr std::int32_t leaf_symbol = -1;

    static FreeTerm leaf();
    //! Throws std::invalid_argument if the child count is not the arity of
    //! symbol \p k.
    static FreeTerm node(Signature const&      sig,
                         std::size_t           k,
                         std::vector<FreeTerm> children);
    //! Builds directly from a preorder sequence, which must be well formed.
    static FreeTerm from_nodes(std::vector<Node> nodes);

    //! Prefix text form: "." for a leaf and "name(t1,...,tk)" for a node.
    static FreeTerm parse(Signature const& sig, std::string_view text);
    std::string     to_string(Signature const& sig) const;

    bool is_leaf() const noexcept {
      return _nodes.size() == 1 && _nodes[0].symbol == leaf_symbol;
    }
    //! The number of leaves.
    std::size_t arity() const noexcept;
    std::vector<Node> const& nodes() const noexcept {
      return _nodes;
    }
    //! Root symbol index; the term must not be a leaf.
    std::size_t root_symbol() const {
      return static_cast<std::size_t>(_nodes.at(0).symbol);
    }
    std::vector<FreeTerm> children() const;

    //! x o_i y on terms: graft \p y onto the i-th leaf.
    FreeTerm graft(std::size_t i, FreeTerm const& y) const;

    friend bool operator==(FreeTerm const&, FreeTerm const&) = default;

   private:
    explicit FreeTerm(std::vector<Node> nodes) : _nodes(std::move(nodes)) {}
    std::vector<Node> _nodes;
  };

  struct FreeTermHash {
    std::size_t operator()(FreeTerm const& t) const noexcept;
  };

  //! Index one past the subtree rooted at position \p p of a preorder
  //! sequence.
  std::size_t subtree_end(std::span<FreeTerm::Node const> nodes,
                          std::size_t                     p);

  //! Interprets \p t in T M: a leaf is the unit word, a node is its symbol's
  //! image composed with the children's values (rightmost child first, so
  //! positions stay valid).
  Word eval_term(Signature const& sig, FreeTerm const& t);

}  // namespace monoperad

#endif  // MONOPERAD_TERM_HPP_
