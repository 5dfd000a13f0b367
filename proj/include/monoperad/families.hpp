// Membership tests for the combinatorial suboperads and quotients of T N.

#ifndef MONOPERAD_FAMILIES_HPP_
#define MONOPERAD_FAMILIES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "closure.hpp"
#include "word.hpp"

namespace monoperad {

  enum class Family : std::uint8_t {
    end,    // twisted endofunctions
    pf,     // twisted parking functions
    pw,     // twisted packed words
    per,    // twisted permutations
    prt,    // planar rooted trees
    fcat,   // k-Dyck paths, parameter k
    schr,   // Schroeder trees
    motz,   // Motzkin paths
    comp,   // integer compositions
    da,     // directed animals
    scomp,  // segmented integer compositions
    d       // the diassociative realization
  };

  struct FamilyTag {
    Family   family;
    unsigned k = 0;  // only meaningful for fcat

    //! "END", "PF", ..., "FCAT2", ..., "D" (case-insensitive).
    static FamilyTag parse(std::string_view text);
    std::string      name() const;

    friend bool operator==(FamilyTag const&, FamilyTag const&) = default;
  };

  //! The monoid a family lives in: N up to MOTZ, N2 for COMP, N3 for DA and
  //! SCOMP, B01 for D.
  Monoid family_monoid(FamilyTag tag);

  //! Throws std::invalid_argument when \p x is not over family_monoid(tag).
  //! DA membership is membership in the closure of {00, 01} over N3.
  bool is_member(FamilyTag tag, Word const& x);

  //! The same test as a brute-force-enumerable predicate.
  MembershipPredicate membership_predicate(FamilyTag tag);

  //! Raw-letter tests behind is_member.
  namespace predicate {
    bool twisted_endofunction(std::span<Letter const> u);
    bool twisted_parking_function(std::span<Letter const> u);
    bool twisted_packed_word(std::span<Letter const> u);
    bool twisted_permutation(std::span<Letter const> u);
    bool planar_rooted_tree(std::span<Letter const> u);
    bool fuss_catalan(std::span<Letter const> u, unsigned k);
    bool schroeder(std::span<Letter const> u);
    bool motzkin(std::span<Letter const> u);
    bool composition(std::span<Letter const> u);
    bool segmented_composition(std::span<Letter const> u);
    bool diassociative(std::span<Letter const> u);
  }  // namespace predicate

  //! The closure of {00, 01} over N3, up to arity \p n; cached.
  GradedFamily const& directed_animal_closure(std::size_t n);

  //! Candidate characterization of DA: x_1 = 0 and da_phi(x) is a Motzkin
  //! prefix. Reported against the closure, never used as the definition.
  bool da_conjectured_member(Word const& x);
  MembershipPredicate da_conjectured_predicate();

}  // namespace monoperad

#endif  // MONOPERAD_FAMILIES_HPP_
