#include "monoperad/monoid.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace monoperad {

  Monoid Monoid::cyclic(std::uint32_t modulus) {
    if (modulus == 0) {
      throw std::invalid_argument("cyclic monoid needs a positive modulus");
    }
    return Monoid(MonoidKind::cyclic, modulus);
  }

  Monoid Monoid::parse(std::string_view text) {
    if (text == "N") {
      return naturals();
    }
    if (text == "B01") {
      return boolean();
    }
    if (text.size() >= 2 && text.front() == 'N') {
      std::uint32_t l    = 0;
      auto          body = text.substr(1);
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), l);
      if (ec == std::errc() && ptr == body.data() + body.size() && l > 0
          && body.front() != '0') {
        return cyclic(l);
      }
    }
    throw std::invalid_argument("unknown monoid \"" + std::string(text)
                                + "\" (expected N, N<l> or B01)");
  }

  void Monoid::validate(Letter a) const {
    if (!contains(a)) {
      throw std::domain_error("letter " + std::to_string(a)
                              + " is not in the carrier of " + name());
    }
  }

  Letter Monoid::combine(Letter a, Letter b) const {
    validate(a);
    validate(b);
    if (_kind == MonoidKind::additive_naturals
        && a > std::numeric_limits<Letter>::max() - b) {
      throw std::overflow_error("letter overflow in N");
    }
    return combine_unchecked(a, b);
  }

  std::string Monoid::name() const {
    switch (_kind) {
      case MonoidKind::additive_naturals:
        return "N";
      case MonoidKind::cyclic:
        return "N" + std::to_string(_modulus);
      case MonoidKind::boolean_multiplicative:
        return "B01";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidMorphism
  ////////////////////////////////////////////////////////////////////////

  MonoidMorphism MonoidMorphism::identity(Monoid m) {
    return MonoidMorphism(m, m, {});
  }

  MonoidMorphism MonoidMorphism::reduce_mod(Monoid source,
                                            std::uint32_t modulus) {
    Monoid target = Monoid::cyclic(modulus);
    bool   ok     = source.kind() == MonoidKind::additive_naturals
              || (source.kind() == MonoidKind::cyclic
                  && source.modulus() % modulus == 0);
    if (!ok) {
      throw std::invalid_argument("reduction modulo " + std::to_string(modulus)
                                  + " is not a morphism from "
                                  + source.name());
    }
    return MonoidMorphism(source, target, {Step{target, modulus}});
  }

  MonoidMorphism MonoidMorphism::compose(MonoidMorphism const& outer,
                                         MonoidMorphism const& inner) {
    if (inner._target != outer._source) {
      throw std::invalid_argument("cannot compose " + outer.name() + " after "
                                  + inner.name());
    }
    std::vector<Step> steps = inner._steps;
    steps.insert(steps.end(), outer._steps.begin(), outer._steps.end());
    return MonoidMorphism(inner._source, outer._target, std::move(steps));
  }

  Letter MonoidMorphism::apply(Letter a) const {
    _source.validate(a);
    return apply_unchecked(a);
  }

  Letter MonoidMorphism::apply_unchecked(Letter a) const noexcept {
    for (auto const& step : _steps) {
      if (step.modulus != 0) {
        a %= step.modulus;
      }
    }
    return a;
  }

  std::string MonoidMorphism::name() const {
    if (_steps.empty()) {
      return "id_" + _source.name();
    }
    std::string out = _source.name();
    for (auto const& step : _steps) {
      out += "->" + step.target.name();
    }
    return out;
  }

}  // namespace monoperad
