// Named operads: generator sets, reference dimensions and presentations.

#ifndef MONOPERAD_PRESETS_HPP_
#define MONOPERAD_PRESETS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "closure.hpp"
#include "families.hpp"
#include "presentation.hpp"
#include "term.hpp"

namespace monoperad {

  struct OperadPreset {
    std::string       name;
    Monoid            monoid;
    std::vector<Word> generators;  // empty: not finitely generated
    bool              symmetric = false;
    FamilyTag         family;
    //! First dimensions as printed in the reference table, if listed.
    std::optional<std::vector<std::uint64_t>> table_row;
    //! The printed row disagrees with the family's own count formula.
    bool        table_row_suspect = false;
    std::string objects;
    //! For a suspect row: the first dimensions given by the count formula.
    std::optional<std::vector<std::uint64_t>> corrected_row;

    bool finitely_generated() const noexcept {
      return !generators.empty();
    }
    GeneratorSet generator_set() const {
      return {monoid, generators, symmetric};
    }
  };

  //! end, pf, pw, per, prt, fcat0..fcat3, schr, motz, comp, da, scomp, dias.
  std::vector<std::string> const& preset_names();
  //! Throws std::invalid_argument for an unknown name. Any "fcat<k>" is
  //! accepted.
  OperadPreset operad_preset(std::string_view name);

  struct PresentationPreset {
    std::string name;
    Signature   signature;
    std::string relations_text;
    //! The relations are claimed to present the operad, not only to hold.
    bool complete = false;

    std::vector<Relation> relations() const {
      return parse_relations(signature, relations_text);
    }
  };

  //! prt, fcat1, comp, schr, motz, dias.
  std::vector<std::string> const& presentation_names();
  std::optional<PresentationPreset> presentation_preset(std::string_view name);

  //! {"monoid":"N","letters":[0,1]}
  std::string word_json(Word const& w);
  //! One record per word, by arity then word order.
  void write_jsonl(GradedFamily const& f, std::ostream& os);

}  // namespace monoperad

#endif  // MONOPERAD_PRESETS_HPP_
