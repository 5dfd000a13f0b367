// The operad T M: nonempty words over a monoid M. The arity of a word is its
// length; x o_i y splices y into position i of x, multiplying each spliced
// letter on the left by x_i; permutations act on the right by permuting
// letters.

#ifndef MONOPERAD_WORD_HPP_
#define MONOPERAD_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoid.hpp"

namespace monoperad {

  //! An element of T M. Never empty; every letter lies in the carrier of M.
  class Word {
   public:
    //! Throws std::invalid_argument if \p letters is empty and
    //! std::domain_error if a letter is outside the carrier.
    Word(Monoid monoid, std::vector<Letter> letters);
    Word(Monoid monoid, std::initializer_list<Letter> letters)
        : Word(monoid, std::vector<Letter>(letters)) {}

    //! Parses the canonical text form: digits without separators
    //! ("002413") or comma-separated letters ("10,0,3").
    static Word parse(Monoid monoid, std::string_view text);

    //! Skips validation; the caller guarantees the invariants.
    static Word make_unchecked(Monoid monoid, std::vector<Letter> letters) {
      return Word(monoid, std::move(letters), unchecked_tag{});
    }

    Monoid const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t arity() const noexcept {
      return _letters.size();
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    //! 1-based letter access, matching the usual x_1 ... x_n indexing.
    Letter operator[](std::size_t i) const {
      return _letters.at(i - 1);
    }

    //! Letters joined without separators when all are at most 9, else
    //! joined with commas.
    std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;
    //! Orders by monoid, then arity, then lexicographically.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    struct unchecked_tag {};
    Word(Monoid monoid, std::vector<Letter> letters, unchecked_tag)
        : _monoid(monoid), _letters(std::move(letters)) {}

    Monoid              _monoid;
    std::vector<Letter> _letters;
  };

  std::ostream& operator<<(std::ostream& os, Word const& w);

  struct WordHash {
    std::size_t operator()(std::vector<Letter> const& letters) const noexcept;
    std::size_t operator()(Word const& w) const noexcept {
      return (*this)(w.letters());
    }
  };

  //! A permutation of [n] in one-line notation, images 1-based.
  class Permutation {
   public:
    //! Throws std::invalid_argument unless \p images rearranges 1..n, n >= 1.
    explicit Permutation(std::vector<std::uint32_t> images);
    Permutation(std::initializer_list<std::uint32_t> images)
        : Permutation(std::vector<std::uint32_t>(images)) {}

    static Permutation identity(std::size_t degree);
    //! Same text conventions as Word::parse.
    static Permutation parse(std::string_view text);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    //! sigma_j for 1 <= j <= degree.
    std::uint32_t operator[](std::size_t j) const {
      return _images.at(j - 1);
    }
    std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    Permutation inverse() const;
    //! (this o tau)_j = this_{tau_j}. With this convention the action on
    //! words is a right action: x . (s o t) = (x . s) . t.
    Permutation compose(Permutation const& tau) const;

    //! Advances to the lexicographically next permutation; false after the
    //! last one (and the permutation wraps to the identity).
    bool next();

    std::string to_string() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::uint32_t> _images;
  };

  std::ostream& operator<<(std::ostream& os, Permutation const& p);

  //! x o_i y. Throws std::out_of_range unless 1 <= i <= |x| and
  //! std::invalid_argument if the monoids differ.
  Word substitute(Word const& x, std::size_t i, Word const& y);

  //! Raw splice used by the closure engine. \p i is 1-based and valid; the
  //! result is written to \p out (which is cleared first).
  void substitute_into(Monoid const&        m,
                       std::span<Letter const> x,
                       std::size_t             i,
                       std::span<Letter const> y,
                       std::vector<Letter>&    out);

  //! x . sigma = (x_{sigma_1}, ..., x_{sigma_n}). Throws
  //! std::invalid_argument if the degree is not |x|.
  Word act(Word const& x, Permutation const& sigma);

  //! The one-letter word holding the unit of \p m.
  Word unit_element(Monoid const& m);

  //! The block substitution B_i(sigma, nu) of nu into sigma.
  //! Throws std::out_of_range unless 1 <= i <= degree(sigma).
  Permutation perm_block_substitute(Permutation const& sigma,
                                    std::size_t        i,
                                    Permutation const& nu);

  //! T theta: the letterwise image of \p x.
  Word lift_morphism(MonoidMorphism const& theta, Word const& x);

  //! Signature of a partial composition, so alternative (or deliberately
  //! broken) implementations can be fed to the axiom checker.
  using SubstitutionFn
      = std::function<Word(Word const&, std::size_t, Word const&)>;

}  // namespace monoperad

#endif  // MONOPERAD_WORD_HPP_
