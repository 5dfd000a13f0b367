#include "monoperad/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "monoperad/bijections.hpp"

namespace monoperad {

  namespace {
    struct TagName {
      Family           family;
      std::string_view name;
    };
    constexpr TagName tag_names[] = {
        {Family::end, "END"},   {Family::pf, "PF"},       {Family::pw, "PW"},
        {Family::per, "PER"},   {Family::prt, "PRT"},     {Family::schr, "SCHR"},
        {Family::motz, "MOTZ"}, {Family::comp, "COMP"},   {Family::da, "DA"},
        {Family::scomp, "SCOMP"}, {Family::d, "D"}};
  }  // namespace

  FamilyTag FamilyTag::parse(std::string_view text) {
    std::string up(text);
    for (char& c : up) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (auto const& t : tag_names) {
      if (up == t.name) {
        return {t.family, 0};
      }
    }
    if (up.size() > 4 && up.starts_with("FCAT")) {
      auto digits = up.substr(4);
      if (std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        return {Family::fcat, static_cast<unsigned>(std::stoul(digits))};
      }
    }
    throw std::invalid_argument("unknown family \"" + std::string(text) + "\"");
  }

  std::string FamilyTag::name() const {
    if (family == Family::fcat) {
      return "FCAT" + std::to_string(k);
    }
    for (auto const& t : tag_names) {
      if (t.family == family) {
        return std::string(t.name);
      }
    }
    return "?";
  }

  Monoid family_monoid(FamilyTag tag) {
    switch (tag.family) {
      case Family::comp:
        return Monoid::cyclic(2);
      case Family::da:
      case Family::scomp:
        return Monoid::cyclic(3);
      case Family::d:
        return Monoid::boolean();
      default:
        return Monoid::naturals();
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Raw predicates
  ////////////////////////////////////////////////////////////////////////

  namespace predicate {

    bool twisted_endofunction(std::span<Letter const> u) {
      return std::all_of(u.begin(), u.end(),
                         [n = u.size()](Letter a) { return a < n; });
    }

    bool twisted_parking_function(std::span<Letter const> u) {
      std::vector<Letter> sorted(u.begin(), u.end());
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > i) {
          return false;
        }
      }
      return true;
    }

    bool twisted_packed_word(std::span<Letter const> u) {
      if (u.empty()) {
        return false;
      }
      Letter const      top = *std::max_element(u.begin(), u.end());
      std::vector<bool> present(top + 1, false);
      for (Letter a : u) {
        present[a] = true;
      }
      return std::all_of(present.begin(), present.end(),
                         [](bool b) { return b; });
    }

    bool twisted_permutation(std::span<Letter const> u) {
      std::vector<bool> present(u.size(), false);
      for (Letter a : u) {
        if (a >= u.size() || present[a]) {
          return false;
        }
        present[a] = true;
      }
      return true;
    }

    bool planar_rooted_tree(std::span<Letter const> u) {
      if (u.empty() || u[0] != 0) {
        return false;
      }
      for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] < 1 || u[i] > u[i - 1] + 1) {
          return false;
        }
      }
      return true;
    }

    bool fuss_catalan(std::span<Letter const> u, unsigned k) {
      if (u.empty() || u[0] != 0) {
        return false;
      }
      for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] > u[i - 1] + k) {
          return false;
        }
      }
      return true;
    }

    bool schroeder(std::span<Letter const> u) {
      if (std::find(u.begin(), u.end(), Letter(0)) == u.end()) {
        return false;
      }
      std::size_t const n = u.size();
      for (std::size_t p = 0; p < n; ++p) {
        Letter const b = u[p];
        if (b == 0) {
          continue;
        }
        // factor (b-1) w b or b w (b-1) with all letters of w at least b
        bool ok = false;
        for (std::size_t q = p; q-- > 0;) {
          if (u[q] < b) {
            ok = u[q] == b - 1;
            break;
          }
        }
        if (!ok) {
          for (std::size_t q = p + 1; q < n; ++q) {
            if (u[q] < b) {
              ok = u[q] == b - 1;
              break;
            }
          }
        }
        if (!ok) {
          return false;
        }
      }
      return true;
    }

    bool motzkin(std::span<Letter const> u) {
      if (u.empty() || u.front() != 0 || u.back() != 0) {
        return false;
      }
      for (std::size_t i = 1; i < u.size(); ++i) {
        Letter const a = u[i - 1], b = u[i];
        if ((a > b ? a - b : b - a) > 1) {
          return false;
        }
      }
      return true;
    }

    bool composition(std::span<Letter const> u) {
      return !u.empty() && u[0] == 0
             && std::all_of(u.begin(), u.end(), [](Letter a) { return a <= 1; });
    }

    bool segmented_composition(std::span<Letter const> u) {
      return !u.empty() && u[0] == 0
             && std::all_of(u.begin(), u.end(), [](Letter a) { return a <= 2; });
    }

    bool diassociative(std::span<Letter const> u) {
      return std::count(u.begin(), u.end(), Letter(1)) == 1
             && std::all_of(u.begin(), u.end(), [](Letter a) { return a <= 1; });
    }

  }  // namespace predicate

  GradedFamily const& directed_animal_closure(std::size_t n) {
    static std::mutex                              lock;
    static std::map<std::size_t, GradedFamily>     cache;
    std::lock_guard<std::mutex>                    guard(lock);
    auto it = cache.lower_bound(n);
    if (it != cache.end()) {
      return it->second;
    }
    Monoid const m = Monoid::cyclic(3);
    GeneratorSet g{m, {Word(m, {0, 0}), Word(m, {0, 1})}, false};
    // never cache tiny bounds, so small queries share one closure
    std::size_t bound = std::max<std::size_t>(n, 8);
    return cache.emplace(bound, generate_closure(g, bound)).first->second;
  }

  namespace {
    bool accepts(FamilyTag tag, std::span<Letter const> u) {
      using namespace predicate;
      switch (tag.family) {
        case Family::end:
          return twisted_endofunction(u);
        case Family::pf:
          return twisted_parking_function(u);
        case Family::pw:
          return twisted_packed_word(u);
        case Family::per:
          return twisted_permutation(u);
        case Family::prt:
          return planar_rooted_tree(u);
        case Family::fcat:
          return fuss_catalan(u, tag.k);
        case Family::schr:
          return schroeder(u);
        case Family::motz:
          return motzkin(u);
        case Family::comp:
          return composition(u);
        case Family::scomp:
          return segmented_composition(u);
        case Family::d:
          return diassociative(u);
        case Family::da: {
          if (u.empty()) {
            return false;
          }
          Word w = Word::make_unchecked(Monoid::cyclic(3),
                                        std::vector<Letter>(u.begin(), u.end()));
          return directed_animal_closure(u.size()).contains(w);
        }
      }
      return false;
    }
  }  // namespace

  bool is_member(FamilyTag tag, Word const& x) {
    Monoid const m = family_monoid(tag);
    if (x.monoid() != m) {
      throw std::invalid_argument("family " + tag.name() + " lives in "
                                  + m.name() + ", word " + x.to_string()
                                  + " is over " + x.monoid().name());
    }
    return accepts(tag, x.letters());
  }

  MembershipPredicate membership_predicate(FamilyTag tag) {
    MembershipPredicate p;
    p.name    = tag.name();
    p.monoid  = family_monoid(tag);
    p.accepts = [tag](std::span<Letter const> u) { return accepts(tag, u); };
    auto n_minus_1 = [](std::size_t n) -> std::optional<Letter> {
      return static_cast<Letter>(n - 1);
    };
    switch (tag.family) {
      case Family::end:
      case Family::pf:
      case Family::pw:
      case Family::schr:
        p.max_letter = n_minus_1;
        break;
      case Family::per:
        p.max_letter    = n_minus_1;
        p.prefix_viable = [](std::span<Letter const> u) {
          std::vector<Letter> s(u.begin(), u.end());
          std::sort(s.begin(), s.end());
          return std::adjacent_find(s.begin(), s.end()) == s.end();
        };
        break;
      case Family::prt:
        p.max_letter    = n_minus_1;
        p.prefix_viable = predicate::planar_rooted_tree;
        break;
      case Family::fcat: {
        unsigned k   = tag.k;
        p.max_letter = [k](std::size_t n) -> std::optional<Letter> {
          return static_cast<Letter>(k * (n - 1));
        };
        p.prefix_viable = [k](std::span<Letter const> u) {
          return predicate::fuss_catalan(u, k);
        };
        break;
      }
      case Family::motz:
        p.max_letter = [](std::size_t n) -> std::optional<Letter> {
          return static_cast<Letter>(n / 2);
        };
        p.prefix_viable = [](std::span<Letter const> u) {
          if (u[0] != 0) {
            return false;
          }
          for (std::size_t i = 1; i < u.size(); ++i) {
            Letter const a = u[i - 1], b = u[i];
            if ((a > b ? a - b : b - a) > 1) {
              return false;
            }
          }
          return true;
        };
        break;
      case Family::comp:
        p.max_letter = [](std::size_t) -> std::optional<Letter> { return 1; };
        p.prefix_viable = [](std::span<Letter const> u) { return u[0] == 0; };
        break;
      case Family::d:
        p.max_letter = [](std::size_t) -> std::optional<Letter> { return 1; };
        p.prefix_viable = [](std::span<Letter const> u) {
          return std::count(u.begin(), u.end(), Letter(1)) <= 1;
        };
        break;
      case Family::da:
      case Family::scomp:
        p.max_letter = [](std::size_t) -> std::optional<Letter> { return 2; };
        p.prefix_viable = [](std::span<Letter const> u) { return u[0] == 0; };
        break;
    }
    return p;
  }

  bool da_conjectured_member(Word const& x) {
    if (x.monoid() != Monoid::cyclic(3)) {
      throw std::invalid_argument("DA words live in N3");
    }
    if (x[1] != 0) {
      return false;
    }
    auto steps = da_phi(x);
    return is_motzkin_prefix(steps);
  }

  MembershipPredicate da_conjectured_predicate() {
    MembershipPredicate p;
    p.name    = "DA-phi-prefix";
    p.monoid  = Monoid::cyclic(3);
    p.accepts = [](std::span<Letter const> u) {
      return da_conjectured_member(Word::make_unchecked(
          Monoid::cyclic(3), std::vector<Letter>(u.begin(), u.end())));
    };
    p.max_letter = [](std::size_t) -> std::optional<Letter> { return 2; };
    p.prefix_viable = [](std::span<Letter const> u) { return u[0] == 0; };
    return p;
  }

}  // namespace monoperad
