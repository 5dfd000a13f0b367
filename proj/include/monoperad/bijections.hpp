// Combinatorial views of the words of several suboperads of T N, with the
// object-level substitution rules where they exist: planar rooted trees,
// Schroeder trees, k-Dyck and Motzkin paths, ribbon compositions, the
// step map of directed animals, the partial operad Per and the
// diassociative encoding.

#ifndef MONOPERAD_BIJECTIONS_HPP_
#define MONOPERAD_BIJECTIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "term.hpp"
#include "word.hpp"

namespace monoperad {

  ////////////////////////////////////////////////////////////////////////
  // Trees
  ////////////////////////////////////////////////////////////////////////

  //! A planar rooted tree: a node with an ordered list of subtrees.
  //!
  //! Serialized as balanced parentheses, one "(...)" per node, so the
  //! single node is "()" and the root with one child is "(())".
  struct PlanarTree {
    std::vector<PlanarTree> children;

    std::size_t node_count() const noexcept;
    std::size_t leaf_count() const noexcept;
    bool        is_leaf() const noexcept {
      return children.empty();
    }

    std::string       to_string() const;
    static PlanarTree parse(std::string_view text);

    friend bool operator==(PlanarTree const&, PlanarTree const&) = default;
  };

  //! Reads a PRT word as the depths of a preorder traversal.
  //! Throws std::invalid_argument for words outside PRT.
  PlanarTree word_to_tree(Word const& x);
  //! Node depths in preorder, over N.
  Word tree_to_word(PlanarTree const& t);

  //! S o_i T in PRT: the subtrees of T's root become the leftmost children
  //! of the i-th node of S in preorder. Throws std::out_of_range for a bad
  //! position.
  PlanarTree prt_graft(PlanarTree const& s, std::size_t i, PlanarTree const& t);

  //! No node has exactly one child, and the tree is not a single leaf.
  bool is_schroeder_tree(PlanarTree const& t);

  //! Labels each sector (a node with two adjacent child edges) by the depth
  //! of its node and reads the labels left to right. A tree with n + 1
  //! leaves gives a word of arity n. Throws std::invalid_argument when the
  //! tree is not a Schroeder tree.
  Word schroeder_to_word(PlanarTree const& t);
  //! Inverse of schroeder_to_word; throws std::invalid_argument when \p x
  //! is not a sector word.
  PlanarTree word_to_schroeder(Word const& x);

  ////////////////////////////////////////////////////////////////////////
  // Lattice paths
  ////////////////////////////////////////////////////////////////////////

  enum class Step : char { up = 'U', down = 'D', flat = 'S' };

  //! A step sequence over {U, D, S}. For k-Dyck paths an up step rises by
  //! k; for Motzkin paths every step moves by at most one.
  struct LatticePath {
    std::vector<Step> steps;

    std::string        to_string() const;
    static LatticePath parse(std::string_view text);

    friend bool operator==(LatticePath const&, LatticePath const&) = default;
  };

  //! n up steps (1, k) and kn down steps, never below 0, ending at 0.
  bool is_kdyck_path(LatticePath const& p, unsigned k);
  //! Unit steps, never below 0, ending at 0.
  bool is_motzkin_path(LatticePath const& p);

  //! The k-Dyck path whose up steps start at the ordinates x_1, ..., x_n.
  //! Throws std::invalid_argument for words outside FCat^k.
  LatticePath word_to_kdyck(Word const& x, unsigned k);
  Word        kdyck_to_word(LatticePath const& p, unsigned k);

  //! The Motzkin path through the points (j, x_{j+1}); length |x| - 1.
  LatticePath word_to_motzkin(Word const& x);
  Word        motzkin_to_word(LatticePath const& p);

  ////////////////////////////////////////////////////////////////////////
  // Ribbon compositions
  ////////////////////////////////////////////////////////////////////////

  //! An integer composition drawn as a ribbon diagram: parts are column
  //! heights, left to right, and the bottom box of each column touches the
  //! top box of the next one. Boxes are scanned from top to bottom and left
  //! to right. Serialized as comma-separated parts.
  struct Composition {
    std::vector<unsigned> parts;

    unsigned           size() const noexcept;
    std::string        to_string() const;
    static Composition parse(std::string_view text);

    friend bool operator==(Composition const&, Composition const&) = default;
  };

  //! The transposed ribbon diagram (rows become columns).
  Composition transpose(Composition const& c);

  //! Splits a COMP word 0 1^{c_1 - 1} 0 1^{c_2 - 1} ... into its parts.
  Composition word_to_composition(Word const& x);
  Word        composition_to_word(Composition const& c);

  //! C o_i D on ribbon diagrams: the i-th box c is replaced by D when c is
  //! the top box of its column, and by the transpose of D otherwise.
  Composition ribbon_substitute(Composition const& c,
                                std::size_t        i,
                                Composition const& d);

  ////////////////////////////////////////////////////////////////////////
  // Directed animals
  ////////////////////////////////////////////////////////////////////////

  //! Consecutive differences b - a of a word over N3, with 2 read as -1.
  //! Throws std::invalid_argument for words over another monoid.
  std::vector<int> da_phi(Word const& x);

  //! Every entry in {-1, 0, 1} and every partial sum nonnegative.
  bool is_motzkin_prefix(std::span<int const> steps);

  ////////////////////////////////////////////////////////////////////////
  // Per: twisted permutations with an absorbing zero
  ////////////////////////////////////////////////////////////////////////

  class PerElement {
   public:
    static PerElement zero() {
      return PerElement(std::nullopt);
    }
    //! Throws std::invalid_argument unless \p w is a twisted permutation.
    static PerElement of(Word w);

    bool is_zero() const noexcept {
      return !_word.has_value();
    }
    //! The underlying word; throws std::logic_error for zero.
    Word const& word() const;

    std::string to_string() const;

    friend bool operator==(PerElement const&, PerElement const&) = default;

   private:
    explicit PerElement(std::optional<Word> w) : _word(std::move(w)) {}
    std::optional<Word> _word;
  };

  //! The explicit rule: zero if an operand is zero or x_i is not max(x),
  //! the word-level x o_i y otherwise. The unit (the arity-1 word 0) is
  //! neutral on the right at every position.
  PerElement per_substitute(PerElement const& x,
                            std::size_t       i,
                            PerElement const& y);

  //! Quotient semantics: compute x o_i y in PW and send it to zero when it
  //! repeats a letter.
  PerElement per_ideal_substitute(PerElement const& x,
                                  std::size_t       i,
                                  PerElement const& y);

  ////////////////////////////////////////////////////////////////////////
  // Dias
  ////////////////////////////////////////////////////////////////////////

  //! The symbols l (left, image 10) and r (right, image 01) over B01.
  Signature dias_signature();

  //! Evaluates a term built from binary symbols named l and r through
  //! l -> 10, r -> 01. Throws std::invalid_argument for other symbols.
  Word dias_encode(Signature const& sig, FreeTerm const& t);

}  // namespace monoperad

#endif  // MONOPERAD_BIJECTIONS_HPP_
