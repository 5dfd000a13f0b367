#include <catch_amalgamated.hpp>

#include "monoperad/bijections.hpp"
#include "monoperad/families.hpp"
#include "monoperad/presets.hpp"
#include "oracles.hpp"

using namespace monoperad;

namespace {
  Monoid const N = Monoid::naturals();

  Word nat(std::string_view s) {
    return Word::parse(N, s);
  }

  std::uint64_t factorial(std::uint64_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }
}  // namespace

TEST_CASE("family tags") {
  CHECK(FamilyTag::parse("prt") == FamilyTag{Family::prt});
  CHECK(FamilyTag::parse("FCAT2") == FamilyTag{Family::fcat, 2});
  CHECK(FamilyTag::parse("fcat0") == FamilyTag{Family::fcat, 0});
  CHECK(FamilyTag{Family::fcat, 3}.name() == "FCAT3");
  CHECK(FamilyTag{Family::scomp}.name() == "SCOMP");
  CHECK_THROWS_AS(FamilyTag::parse("fcat"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyTag::parse("trees"), std::invalid_argument);
  CHECK(family_monoid({Family::comp}) == Monoid::cyclic(2));
  CHECK(family_monoid({Family::da}) == Monoid::cyclic(3));
  CHECK(family_monoid({Family::d}) == Monoid::boolean());
  CHECK(family_monoid({Family::motz}) == N);
}

TEST_CASE("membership of the figure words") {
  CHECK(is_member({Family::prt}, nat("0112333212")));
  CHECK(is_member({Family::fcat, 2}, nat("002413")));
  CHECK(is_member({Family::motz}, nat("001123221010")));
  CHECK(is_member({Family::schr}, nat("1132002122")));
  CHECK_FALSE(is_member({Family::prt}, nat("02")));
  CHECK_FALSE(is_member({Family::fcat, 1}, nat("002413")));
  CHECK_FALSE(is_member({Family::motz}, nat("01")));
  CHECK_FALSE(is_member({Family::schr}, nat("11")));
  CHECK_FALSE(is_member({Family::schr}, nat("020")));
  CHECK_THROWS_AS(is_member({Family::comp}, nat("01")), std::invalid_argument);
  CHECK(is_member({Family::comp}, Word::parse(Monoid::cyclic(2), "0110")));
  CHECK_FALSE(is_member({Family::comp}, Word::parse(Monoid::cyclic(2), "10")));
  CHECK(is_member({Family::d}, Word::parse(Monoid::boolean(), "0010")));
  CHECK_FALSE(is_member({Family::d}, Word::parse(Monoid::boolean(), "0110")));
  CHECK(is_member({Family::da}, Word::parse(Monoid::cyclic(3), "011220201")));
}

TEST_CASE("twisted predicates agree with the shift definitions") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& u : oracle::sequences(n, static_cast<Letter>(n))) {
      auto const v = oracle::shift(u);
      CHECK(predicate::twisted_endofunction(u) == oracle::endofunction(v));
      CHECK(predicate::twisted_parking_function(u)
            == oracle::parking_function(v));
      CHECK(predicate::twisted_packed_word(u) == oracle::packed_word(v));
      CHECK(predicate::twisted_permutation(u) == oracle::permutation(v));
    }
  }
}

TEST_CASE("the twisted families are nested") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& u : oracle::sequences(n, static_cast<Letter>(n))) {
      if (predicate::twisted_permutation(u)) {
        CHECK(predicate::twisted_packed_word(u));
      }
      if (predicate::twisted_packed_word(u)) {
        CHECK(predicate::twisted_parking_function(u));
      }
      if (predicate::twisted_parking_function(u)) {
        CHECK(predicate::twisted_endofunction(u));
      }
      if (predicate::planar_rooted_tree(u)) {
        CHECK(predicate::fuss_catalan(u, 1));
      }
      if (predicate::motzkin(u)) {
        CHECK(predicate::schroeder(u));
      }
    }
  }
}

TEST_CASE("predicate counts match closed forms") {
  auto dims = [](FamilyTag t, std::size_t n) {
    return predicate_dimensions(membership_predicate(t), n);
  };
  auto const end  = dims({Family::end}, 5);
  auto const pf   = dims({Family::pf}, 5);
  auto const pw   = dims({Family::pw}, 5);
  auto const per  = dims({Family::per}, 6);
  auto const prt  = dims({Family::prt}, 7);
  auto const schr = dims({Family::schr}, 6);
  auto const motz = dims({Family::motz}, 8);
  auto const comp = dims({Family::comp}, 8);
  auto const sc   = dims({Family::scomp}, 6);
  auto const d    = dims({Family::d}, 8);
  auto const schr_ref = oracle::little_schroeder(6);
  auto const motz_ref = oracle::motzkin_numbers(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    if (n <= 5) {
      CHECK(end[n - 1] == oracle::power(n, n));
      CHECK(pf[n - 1] == oracle::power(n + 1, n - 1));
      CHECK(pw[n - 1] == oracle::fubini(n));
    }
    if (n <= 6) {
      CHECK(per[n - 1] == factorial(n));
      CHECK(schr[n - 1] == schr_ref[n - 1]);
      CHECK(sc[n - 1] == oracle::power(3, n - 1));
    }
    if (n <= 7) {
      CHECK(prt[n - 1] == oracle::catalan(n - 1));
    }
    CHECK(motz[n - 1] == motz_ref[n - 1]);
    CHECK(comp[n - 1] == oracle::power(2, n - 1));
    CHECK(d[n - 1] == n);
  }
  for (unsigned k = 0; k <= 3; ++k) {
    auto const fc = dims({Family::fcat, k}, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(fc[n - 1] == oracle::fuss_catalan(k, n));
    }
  }
}

TEST_CASE("pruned enumeration agrees with filtering every word") {
  for (FamilyTag t : {FamilyTag{Family::prt}, FamilyTag{Family::fcat, 2},
                      FamilyTag{Family::motz}, FamilyTag{Family::per},
                      FamilyTag{Family::schr}}) {
    auto const p = membership_predicate(t);
    for (std::size_t n = 1; n <= 5; ++n) {
      Letter const cap = *p.max_letter(n);
      std::vector<Word> filtered;
      for (auto const& u : oracle::sequences(n, cap)) {
        if (p.accepts(u)) {
          filtered.push_back(Word(N, u));
        }
      }
      CHECK(enumerate_predicate(p, n) == filtered);
    }
  }
}

TEST_CASE("generated families equal their word characterizations") {
  for (std::string name : {"prt", "fcat0", "fcat1", "fcat2", "motz", "comp",
                           "dias", "schr", "scomp"}) {
    OperadPreset const p = operad_preset(name);
    std::size_t const  n = (name == "schr" || name == "scomp") ? 6 : 7;
    GradedFamily const f = generate_closure(p.generator_set(), n);
    INFO(name);
    auto const v = equals_predicate(f, membership_predicate(p.family));
    INFO(v.describe());
    CHECK(v.equal());
  }
}

TEST_CASE("directed animals") {
  auto const& f = directed_animal_closure(7);
  REQUIRE(f.max_arity() >= 7);
  std::vector<std::size_t> expected{1, 2, 5, 13, 35, 96};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(f.at(n).size() == oracle::motzkin_prefix_count(n - 1));
    if (n <= 6) {
      CHECK(f.at(n).size() == expected[n - 1]);
    }
  }
  // Observed at the bounds tested; the step-map test is a candidate only.
  auto const v = equals_predicate(f.truncated(7), da_conjectured_predicate());
  INFO(v.describe());
  CHECK(v.equal());
  CHECK(da_conjectured_member(Word::parse(Monoid::cyclic(3), "011220201")));
  CHECK_FALSE(da_conjectured_member(Word::parse(Monoid::cyclic(3), "02")));
  CHECK_FALSE(da_conjectured_member(Word::parse(Monoid::cyclic(3), "10")));
}

TEST_CASE("predicates over the wrong monoid") {
  CHECK_THROWS_AS(is_member({Family::prt}, Word::parse(Monoid::cyclic(2), "0")),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_member({Family::d}, nat("01")), std::invalid_argument);
}
