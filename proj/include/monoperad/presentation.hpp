// Relations between free terms, their verification inside T M, and
// finite-arity congruence counts.

#ifndef MONOPERAD_PRESENTATION_HPP_
#define MONOPERAD_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "term.hpp"
#include "word.hpp"

namespace monoperad {

  //! left == right between two terms of equal arity.
  class Relation {
   public:
    //! Throws std::invalid_argument when the arities differ.
    Relation(FreeTerm left, FreeTerm right);

    FreeTerm const& left() const noexcept {
      return _left;
    }
    FreeTerm const& right() const noexcept {
      return _right;
    }
    std::size_t arity() const noexcept {
      return _left.arity();
    }

    std::string to_string(Signature const& sig) const;

   private:
    FreeTerm _left;
    FreeTerm _right;
  };

  //! "a(a(.,.),.) == a(.,b(.,.))".
  Relation parse_relation(Signature const& sig, std::string_view text);

  //! One relation per line; blank lines and text after '#' are ignored.
  std::vector<Relation> parse_relations(Signature const& sig,
                                        std::string_view text);

  //! Every term of the given arity, in a fixed order. Symbols of arity 1
  //! would make the set infinite and are rejected with
  //! std::invalid_argument; more than \p max_terms terms throws
  //! std::length_error.
  std::vector<FreeTerm> enumerate_terms(Signature const& sig,
                                        std::size_t      arity,
                                        std::size_t      max_terms = 2'000'000);

  struct RelationVerdict {
    std::size_t checked = 0;
    //! Index of the first relation whose sides evaluate differently.
    std::optional<std::size_t> failing;
    std::optional<Word>        left_value;
    std::optional<Word>        right_value;

    bool holds() const noexcept {
      return !failing.has_value();
    }
  };

  //! Evaluates both sides of every relation through eval_term.
  RelationVerdict verify_relations(Signature const&             sig,
                                   std::vector<Relation> const& rels);

  //! The number of classes of enumerate_terms(sig, arity) under the
  //! congruence generated by \p rels, applied in both directions at every
  //! subterm position.
  std::size_t congruence_class_count(Signature const&             sig,
                                     std::vector<Relation> const& rels,
                                     std::size_t                  arity);

  struct CongruenceAnalysis {
    std::size_t arity   = 0;
    std::size_t terms   = 0;
    std::size_t classes = 0;
    //! Distinct words among the evaluations of all terms.
    std::size_t images = 0;
    //! Every class evaluates to a single word.
    bool sound = true;
  };

  //! congruence_class_count together with the image of eval_term.
  CongruenceAnalysis analyze_congruence(Signature const&             sig,
                                        std::vector<Relation> const& rels,
                                        std::size_t                  arity);

}  // namespace monoperad

#endif  // MONOPERAD_PRESENTATION_HPP_
