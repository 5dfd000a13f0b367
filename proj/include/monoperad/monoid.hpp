// Monoids consumed by the word-operad construction, and morphisms between
// them. Every supported monoid embeds in the naturals, so elements are
// plain unsigned integers in canonical form.

#ifndef MONOPERAD_MONOID_HPP_
#define MONOPERAD_MONOID_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monoperad {

  //! A monoid element in canonical form.
  using Letter = std::uint32_t;

  enum class MonoidKind : std::uint8_t {
    additive_naturals,
    cyclic,
    boolean_multiplicative
  };

  //! One of (N, +, 0), (N_l, + mod l, 0) or ({0,1}, *, 1).
  //!
  //! Config strings are "N", "N<l>" (for instance "N2", "N3") and "B01".
  class Monoid {
   public:
    static Monoid naturals() noexcept {
      return Monoid(MonoidKind::additive_naturals, 0);
    }
    //! Throws std::invalid_argument when \p modulus is zero.
    static Monoid cyclic(std::uint32_t modulus);
    static Monoid boolean() noexcept {
      return Monoid(MonoidKind::boolean_multiplicative, 2);
    }

    //! Parses "N", "N<l>" or "B01"; throws std::invalid_argument otherwise.
    static Monoid parse(std::string_view text);

    MonoidKind kind() const noexcept {
      return _kind;
    }
    //! The modulus of a cyclic monoid; 0 for the naturals, 2 for B01.
    std::uint32_t modulus() const noexcept {
      return _modulus;
    }

    Letter identity() const noexcept {
      return _kind == MonoidKind::boolean_multiplicative ? 1 : 0;
    }

    bool contains(Letter a) const noexcept {
      return _kind == MonoidKind::additive_naturals || a < _modulus;
    }

    //! Number of elements, or nullopt for the naturals.
    std::optional<std::uint32_t> carrier_size() const noexcept {
      if (_kind == MonoidKind::additive_naturals) {
        return std::nullopt;
      }
      return _modulus;
    }

    //! Throws std::domain_error when \p a is outside the carrier.
    void validate(Letter a) const;

    //! The product a * b. Throws std::domain_error for letters outside the
    //! carrier and std::overflow_error if a sum of naturals does not fit.
    Letter combine(Letter a, Letter b) const;

    //! combine() without the carrier check; both letters must be valid.
    Letter combine_unchecked(Letter a, Letter b) const noexcept {
      switch (_kind) {
        case MonoidKind::additive_naturals:
          return a + b;
        case MonoidKind::cyclic:
          return (a + b) % _modulus;
        case MonoidKind::boolean_multiplicative:
          return a & b;
      }
      return 0;
    }

    std::string name() const;

    friend bool operator==(Monoid const&, Monoid const&) = default;
    friend auto operator<=>(Monoid const&, Monoid const&) = default;

   private:
    Monoid(MonoidKind kind, std::uint32_t modulus) noexcept
        : _kind(kind), _modulus(modulus) {}

    MonoidKind    _kind;
    std::uint32_t _modulus;
  };

  //! A monoid morphism built from identities and reductions modulo l.
  //!
  //! Internally a chain of elementary maps, applied first to last.
  //! Reduction modulo l is defined from N, and from N_m whenever l divides m.
  class MonoidMorphism {
   public:
    static MonoidMorphism identity(Monoid m);
    //! Throws std::invalid_argument if \p source does not map onto N_l.
    static MonoidMorphism reduce_mod(Monoid source, std::uint32_t modulus);
    //! The composite outer o inner (apply \p inner first). Throws
    //! std::invalid_argument when inner's target is not outer's source.
    static MonoidMorphism compose(MonoidMorphism const& outer,
                                  MonoidMorphism const& inner);

    Monoid const& source() const noexcept {
      return _source;
    }
    Monoid const& target() const noexcept {
      return _target;
    }

    //! Throws std::domain_error when \p a is not in the source carrier.
    Letter apply(Letter a) const;
    Letter apply_unchecked(Letter a) const noexcept;

    std::string name() const;

   private:
    struct Step {
      Monoid        target;
      std::uint32_t modulus;  // 0 means identity
    };

    MonoidMorphism(Monoid source, Monoid target, std::vector<Step> steps)
        : _source(source), _target(target), _steps(std::move(steps)) {}

    Monoid            _source;
    Monoid            _target;
    std::vector<Step> _steps;
  };

  //! Free-function spelling of Monoid::combine.
  inline Letter combine(Monoid const& m, Letter a, Letter b) {
    return m.combine(a, b);
  }

  inline Letter morphism_apply(MonoidMorphism const& theta, Letter a) {
    return theta.apply(a);
  }

}  // namespace monoperad

#endif  // MONOPERAD_MONOID_HPP_
