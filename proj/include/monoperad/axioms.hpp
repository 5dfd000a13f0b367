// Exhaustive verification of the set-operad axioms on T M over small
// arities.

#ifndef MONOPERAD_AXIOMS_HPP_
#define MONOPERAD_AXIOMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoid.hpp"
#include "word.hpp"

namespace monoperad {

  enum class Axiom : std::uint8_t {
    series_associativity,
    parallel_associativity,
    unit,
    equivariance
  };

  std::string axiom_name(Axiom a);

  struct AxiomReport {
    Axiom                      axiom;
    std::uint64_t              checks = 0;
    std::optional<std::string> counterexample;

    bool passed() const noexcept {
      return !counterexample.has_value();
    }
  };

  //! Largest arities of x, y and z that are enumerated.
  struct ArityBounds {
    std::size_t x = 3;
    std::size_t y = 3;
    std::size_t z = 3;
  };

  //! Every word of arity 1..max_arity over the carrier of \p m, letters
  //! capped at \p letter_cap for the naturals. Ordered by arity then
  //! lexicographically.
  std::vector<Word> all_words(Monoid const& m,
                              std::size_t   max_arity,
                              Letter        letter_cap = 3);

  //! Checks series and parallel associativity, the unit laws and
  //! equivariance over every word within \p bounds (letters of N capped at
  //! \p letter_cap), every position and every pair of permutations. The
  //! composition under test defaults to monoperad::substitute.
  std::vector<AxiomReport> check_axioms(Monoid const&  m,
                                        ArityBounds    bounds,
                                        SubstitutionFn compose = {},
                                        Letter         letter_cap = 3);

}  // namespace monoperad

#endif  // MONOPERAD_AXIOMS_HPP_
