#include "monoperad/presets.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "monoperad/bijections.hpp"

namespace monoperad {

  namespace {
    std::string lower(std::string_view s) {
      std::string out(s);
      std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
      });
      return out;
    }

    std::vector<std::uint64_t> fuss_catalan_row(unsigned k, std::size_t n) {
      // C((k+1)m, m) / (km + 1), exact in 64 bits for the lengths used
      std::vector<std::uint64_t> row;
      for (std::size_t m = 1; m <= n; ++m) {
        std::uint64_t binom = 1;
        for (std::size_t j = 1; j <= m; ++j) {
          binom = binom * ((k + 1) * m - m + j) / j;
        }
        row.push_back(binom / (k * m + 1));
      }
      return row;
    }
  }  // namespace

  std::vector<std::string> const& preset_names() {
    static std::vector<std::string> const names{
        "end",   "pf",    "pw",    "per",  "prt",  "fcat0", "fcat1", "fcat2",
        "fcat3", "schr",  "motz",  "comp", "da",   "scomp", "dias"};
    return names;
  }

  OperadPreset operad_preset(std::string_view name) {
    std::string const key = lower(name);
    Monoid const      n   = Monoid::naturals();
    auto gens = [](Monoid const& m, std::string_view text) {
      return parse_generators(m, text);
    };
    using Row = std::vector<std::uint64_t>;

    if (key == "end") {
      return {"end", n, {}, false, {Family::end}, Row{1, 4, 27, 256, 3125},
              false, "endofunctions", std::nullopt};
    }
    if (key == "pf") {
      return {"pf", n, {}, false, {Family::pf}, Row{1, 3, 16, 125, 1296},
              false, "parking functions", std::nullopt};
    }
    if (key == "pw") {
      return {"pw", n, gens(n, "00,01"), true, {Family::pw},
              Row{1, 3, 13, 75, 541}, false, "packed words", std::nullopt};
    }
    if (key == "per") {
      return {"per", n, {}, false, {Family::per}, Row{1, 2, 6, 24, 120}, false,
              "permutations", std::nullopt};
    }
    if (key == "prt") {
      return {"prt", n, gens(n, "01"), false, {Family::prt},
              Row{1, 1, 2, 5, 14, 42}, false, "planar rooted trees", std::nullopt};
    }
    if (key.size() > 4 && key.compare(0, 4, "fcat") == 0) {
      FamilyTag const tag = FamilyTag::parse(key);
      std::vector<Word> g;
      for (Letter a = 0; a <= tag.k; ++a) {
        g.push_back(Word(n, {0, a}));
      }
      return {key, n, std::move(g), false, tag, fuss_catalan_row(tag.k, 6),
              false, std::to_string(tag.k) + "-Dyck paths", std::nullopt};
    }
    if (key == "schr") {
      return {"schr", n, gens(n, "00,01,10"), false, {Family::schr},
              Row{1, 3, 11, 45, 197}, false, "Schroeder trees", std::nullopt};
    }
    if (key == "motz") {
      return {"motz", n, gens(n, "00,010"), false, {Family::motz},
              Row{1, 1, 2, 4, 9, 21, 51}, false, "Motzkin paths", std::nullopt};
    }
    if (key == "comp") {
      Monoid const m = Monoid::cyclic(2);
      return {"comp", m, gens(m, "00,01"), false, {Family::comp},
              Row{1, 2, 4, 8, 16, 32}, false, "integer compositions", std::nullopt};
    }
    if (key == "da") {
      Monoid const m = Monoid::cyclic(3);
      return {"da", m, gens(m, "00,01"), false, {Family::da},
              Row{1, 2, 5, 13, 35, 96}, false, "directed animals", std::nullopt};
    }
    if (key == "scomp") {
      Monoid const m = Monoid::cyclic(3);
      return {"scomp", m, gens(m, "00,01,02"), false, {Family::scomp},
              Row{1, 3, 27, 81, 243}, true, "segmented integer compositions",
              Row{1, 3, 9, 27, 81, 243, 729}};
    }
    if (key == "dias") {
      Monoid const m = Monoid::boolean();
      return {"dias", m, gens(m, "01,10"), false, {Family::d}, std::nullopt,
              false, "words with exactly one 1", std::nullopt};
    }
    throw std::invalid_argument("unknown operad \"" + std::string(name) + "\"");
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const& presentation_names() {
    static std::vector<std::string> const names{"prt",  "fcat1", "comp",
                                                "schr", "motz",  "dias"};
    return names;
  }

  std::optional<PresentationPreset> presentation_preset(std::string_view name) {
    std::string const key = lower(name);
    Monoid const      n   = Monoid::naturals();
    if (key == "prt") {
      return PresentationPreset{"prt", Signature({{"a", 2, Word(n, {0, 1})}}),
                                "", true};
    }
    if (key == "fcat1") {
      return PresentationPreset{
          "fcat1",
          Signature({{"a", 2, Word(n, {0, 1})}, {"b", 2, Word(n, {0, 0})}}),
          "b(b(.,.),.) == b(.,b(.,.))\n"
          "a(b(.,.),.) == b(.,a(.,.))\n"
          "a(a(.,.),.) == a(.,b(.,.))\n",
          true};
    }
    if (key == "comp") {
      Monoid const m = Monoid::cyclic(2);
      return PresentationPreset{
          "comp",
          Signature({{"a", 2, Word(m, {0, 0})}, {"b", 2, Word(m, {0, 1})}}),
          "a(a(.,.),.) == a(.,a(.,.))\n"
          "b(a(.,.),.) == a(.,b(.,.))\n"
          "b(b(.,.),.) == b(.,a(.,.))\n"
          "a(b(.,.),.) == b(.,b(.,.))\n",
          true};
    }
    if (key == "schr") {
      return PresentationPreset{
          "schr",
          Signature({{"a", 2, Word(n, {0, 0})},
                     {"b", 2, Word(n, {0, 1})},
                     {"c", 2, Word(n, {1, 0})}}),
          "a(a(.,.),.) == a(.,a(.,.))\n"
          "b(c(.,.),.) == c(.,b(.,.))\n"
          "a(b(.,.),.) == a(.,c(.,.))\n"
          "b(a(.,.),.) == a(.,b(.,.))\n"
          "a(c(.,.),.) == c(.,a(.,.))\n"
          "b(b(.,.),.) == b(.,a(.,.))\n"
          "c(a(.,.),.) == c(.,c(.,.))\n",
          false};
    }
    if (key == "motz") {
      return PresentationPreset{
          "motz",
          Signature({{"a", 2, Word(n, {0, 0})}, {"b", 3, Word(n, {0, 1, 0})}}),
          "a(a(.,.),.) == a(.,a(.,.))\n"
          "b(a(.,.),.,.) == a(.,b(.,.,.))\n"
          "a(b(.,.,.),.) == b(.,.,a(.,.))\n"
          "b(b(.,.,.),.,.) == b(.,.,b(.,.,.))\n",
          false};
    }
    if (key == "dias") {
      return PresentationPreset{"dias", dias_signature(),
                                "l(l(.,.),.) == l(.,l(.,.))\n"
                                "l(.,l(.,.)) == l(.,r(.,.))\n"
                                "r(.,r(.,.)) == r(r(.,.),.)\n"
                                "r(r(.,.),.) == r(l(.,.),.)\n"
                                "l(r(.,.),.) == r(.,l(.,.))\n",
                                true};
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  std::string word_json(Word const& w) {
    nlohmann::ordered_json j;
    j["monoid"]  = w.monoid().name();
    j["letters"] = w.letters();
    return j.dump();
  }

  void write_jsonl(GradedFamily const& f, std::ostream& os) {
    for (std::size_t n = 1; n <= f.max_arity(); ++n) {
      for (auto const& w : f.at(n)) {
        os << word_json(w) << '\n';
      }
    }
  }

}  // namespace monoperad
