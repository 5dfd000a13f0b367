// Suboperads of T M generated by finite sets of words, truncated at a
// maximal arity, together with the tools to compare them against
// membership predicates and morphic images.

#ifndef MONOPERAD_CLOSURE_HPP_
#define MONOPERAD_CLOSURE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoid.hpp"
#include "word.hpp"

namespace monoperad {

  struct GeneratorSet {
    Monoid            monoid;
    std::vector<Word> generators;
    //! Close under the symmetric group action as well.
    bool symmetric = false;
  };

  //! Parses "00,01,10" style generator lists. Letters above 9 are not
  //! expressible in this short form; use one Word::parse per generator.
  std::vector<Word> parse_generators(Monoid const& m, std::string_view text);

  //! An arity-graded finite set of words: per arity, sorted and without
  //! duplicates.
  class GradedFamily {
   public:
    GradedFamily(Monoid monoid, std::size_t max_arity);

    Monoid const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t max_arity() const noexcept {
      return _levels.size();
    }

    //! Words of arity \p n, sorted. Throws std::out_of_range unless
    //! 1 <= n <= max_arity().
    std::vector<Word> const& at(std::size_t n) const;

    bool contains(Word const& w) const;
    std::size_t size() const noexcept;

    //! Replaces the words of arity \p n; sorts and deduplicates them and
    //! checks that every one has arity n over the right monoid.
    void assign(std::size_t n, std::vector<Word> words);

    //! The same family restricted to arities <= m.
    GradedFamily truncated(std::size_t m) const;

    friend bool operator==(GradedFamily const&, GradedFamily const&) = default;

   private:
    Monoid                         _monoid;
    std::vector<std::vector<Word>> _levels;
  };

  //! Worker threads for closure generation: the hardware concurrency, capped
  //! by the OPERAD_THREADS environment variable when set.
  unsigned default_threads();

  //! The smallest family containing the unit and the generators of arity at
  //! most \p max_arity that is closed under o_i (and the symmetric group
  //! action if requested) within the bound.
  //!
  //! Levels are built in increasing arity: level n collects x o_i y over all
  //! stored x, y with |x| + |y| - 1 = n, |x|, |y| >= 2, plus the generators
  //! of arity n, then closes under composition with arity-1 elements and,
  //! when symmetric, under permutation orbits. Pairs of a level are split
  //! across \p threads workers and merged; the result is sorted and hence
  //! schedule independent.
  //!
  //! Throws std::invalid_argument when a generator has arity above
  //! \p max_arity, when generators use different monoids, or when the
  //! arity-1 component would be infinite (a non-unit unary generator over N).
  GradedFamily generate_closure(GeneratorSet const& g,
                                std::size_t         max_arity,
                                unsigned            threads = 0);

  std::vector<std::size_t> dimension_sequence(GradedFamily const& f);

  //! A first word that witnesses that \p f is not closed under o_i (or the
  //! action, if \p symmetric), searching pairs whose composite stays within
  //! max_arity. nullopt when closed.
  std::optional<std::string> closure_defect(GradedFamily const& f,
                                            bool                symmetric);

  //! A membership test on raw letter sequences, with the information needed
  //! to enumerate its satisfying words at each arity by brute force.
  struct MembershipPredicate {
    std::string name;
    Monoid      monoid = Monoid::naturals();
    //! The full test.
    std::function<bool(std::span<Letter const>)> accepts;
    //! Largest letter any accepted word of arity n can contain; nullopt
    //! when the accepted set is not finite at that arity.
    std::function<std::optional<Letter>(std::size_t)> max_letter;
    //! Optional pruning test on proper prefixes; must be implied by
    //! acceptance of any extension. Empty means no pruning.
    std::function<bool(std::span<Letter const>)> prefix_viable;
  };

  //! All words of arity \p n accepted by \p p, sorted. Throws
  //! std::domain_error when p has no finite letter bound at that arity.
  std::vector<Word> enumerate_predicate(MembershipPredicate const& p,
                                        std::size_t                n);

  //! Per-arity counts of enumerate_predicate for n = 1..max_arity.
  std::vector<std::size_t> predicate_dimensions(MembershipPredicate const& p,
                                                std::size_t max_arity);

  struct PredicateVerdict {
    enum class Status { equal, mismatch, non_enumerable };
    Status status = Status::equal;
    //! Set on mismatch.
    std::optional<Word> witness;
    //! True when the witness lies in the family but fails the predicate.
    bool in_family = false;
    std::size_t arity = 0;

    bool equal() const noexcept {
      return status == Status::equal;
    }
    std::string describe() const;
  };

  //! Compares each level of \p f with the brute-force enumeration of \p p.
  PredicateVerdict equals_predicate(GradedFamily const&        f,
                                    MembershipPredicate const& p);

  //! The letterwise image of every word of \p f under theta, deduplicated.
  //! Throws std::domain_error when f is not over theta's source.
  GradedFamily quotient_image(GradedFamily const&   f,
                              MonoidMorphism const& theta);

}  // namespace monoperad

#endif  // MONOPERAD_CLOSURE_HPP_
