#include <catch_amalgamated.hpp>

#include "monoperad/word.hpp"
#include "oracles.hpp"

using namespace monoperad;

namespace {
  Word nat(std::string_view s) {
    return Word::parse(Monoid::naturals(), s);
  }
}  // namespace

TEST_CASE("word text form") {
  CHECK(nat("002413").to_string() == "002413");
  CHECK(nat("10,0,3").letters() == std::vector<Letter>{10, 0, 3});
  CHECK(nat("10,0,3").to_string() == "10,0,3");
  CHECK(nat("1,2").to_string() == "12");
  CHECK(nat("0112")[3] == 1);
  CHECK(nat("0112").arity() == 4);
  CHECK_THROWS_AS(nat(""), std::invalid_argument);
  CHECK_THROWS_AS(nat("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(nat("1a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(Monoid::cyclic(2), "012"), std::domain_error);
  CHECK_THROWS_AS(Word(Monoid::naturals(), std::vector<Letter>{}),
                  std::invalid_argument);
}

TEST_CASE("word order is by arity, then lexicographic") {
  CHECK(nat("9") < nat("00"));
  CHECK(nat("01") < nat("10"));
  CHECK(nat("010") < nat("011"));
  CHECK(nat("0") == nat("0"));
  CHECK(Word::parse(Monoid::cyclic(2), "0") != nat("0"));
}

TEST_CASE("substitution examples") {
  CHECK(substitute(nat("2123"), 2, nat("30313")) == nat("24142423"));
  CHECK(substitute(nat("12"), 2, nat("12")) == nat("134"));
  CHECK(substitute(nat("0112"), 3, nat("0")) == nat("0112"));
  CHECK(substitute(Word::parse(Monoid::cyclic(2), "01"), 2,
                   Word::parse(Monoid::cyclic(2), "011"))
        == Word::parse(Monoid::cyclic(2), "0100"));
  CHECK(substitute(Word::parse(Monoid::boolean(), "10"), 1,
                   Word::parse(Monoid::boolean(), "01"))
        == Word::parse(Monoid::boolean(), "010"));
}

TEST_CASE("substitution errors") {
  CHECK_THROWS_AS(substitute(nat("01"), 0, nat("0")), std::out_of_range);
  CHECK_THROWS_AS(substitute(nat("01"), 3, nat("0")), std::out_of_range);
  CHECK_THROWS_AS(substitute(nat("01"), 1, Word::parse(Monoid::cyclic(2), "0")),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute(Word(Monoid::naturals(), {0xFFFFFFFFu}), 1,
                             nat("1")),
                  std::overflow_error);
}

TEST_CASE("substitution agrees with the plain splice on random words") {
  oracle::Random rnd(20260101);
  for (Monoid m : {Monoid::naturals(), Monoid::cyclic(2), Monoid::cyclic(3),
                   Monoid::boolean()}) {
    for (int trial = 0; trial < 500; ++trial) {
      Word const        x = rnd.word(m, rnd.between(1, 6));
      Word const        y = rnd.word(m, rnd.between(1, 6));
      std::size_t const i = rnd.between(1, x.arity());
      Word const        w = substitute(x, i, y);
      CHECK(w.letters() == oracle::splice(m, x.letters(), i, y.letters()));
      CHECK(w.arity() == x.arity() + y.arity() - 1);
      std::vector<Letter> raw;
      substitute_into(m, x.letters(), i, y.letters(), raw);
      CHECK(raw == w.letters());
    }
  }
}

TEST_CASE("unit element") {
  CHECK(unit_element(Monoid::naturals()) == nat("0"));
  CHECK(unit_element(Monoid::cyclic(2)) == Word::parse(Monoid::cyclic(2), "0"));
  CHECK(unit_element(Monoid::boolean()) == Word::parse(Monoid::boolean(), "1"));
}

TEST_CASE("permutations") {
  Permutation const s{2, 3, 1};
  CHECK(s.to_string() == "231");
  CHECK(Permutation::parse("231") == s);
  CHECK(s.inverse() == Permutation{3, 1, 2});
  CHECK(s.compose(s.inverse()) == Permutation::identity(3));
  CHECK(s.compose(Permutation{2, 1, 3}) == Permutation{3, 2, 1});
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{}),
                  std::invalid_argument);

  Permutation p      = Permutation::identity(4);
  std::size_t count  = 0;
  do {
    ++count;
  } while (p.next());
  CHECK(count == 24);
  CHECK(p == Permutation::identity(4));
}

TEST_CASE("symmetric group action") {
  CHECK(act(nat("11210"), Permutation::parse("23514")) == nat("12011"));
  CHECK(act(nat("002413"), Permutation::identity(6)) == nat("002413"));
  Permutation const s = Permutation::parse("231");
  CHECK(act(act(nat("011"), s), s.inverse()) == nat("011"));
  CHECK_THROWS_AS(act(nat("01"), s), std::invalid_argument);
}

TEST_CASE("the action is a right action") {
  oracle::Random rnd(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = rnd.between(1, 7);
    Word const        x = rnd.word(Monoid::naturals(), n, 9);
    Permutation const s = rnd.permutation(n);
    Permutation const t = rnd.permutation(n);
    CHECK(act(x, s.compose(t)) == act(act(x, s), t));
  }
}

TEST_CASE("block substitution examples") {
  CHECK(perm_block_substitute(Permutation::parse("7415623"), 4,
                              Permutation::parse("231"))
        == Permutation::parse("941675823"));
  CHECK(perm_block_substitute(Permutation::identity(1), 1,
                              Permutation::parse("312"))
        == Permutation::parse("312"));
  // Direct evaluation of the block rule; see the equivariance check below.
  CHECK(perm_block_substitute(Permutation::parse("21"), 2,
                              Permutation::parse("12"))
        == Permutation::parse("312"));
  CHECK_THROWS_AS(perm_block_substitute(Permutation::parse("21"), 3,
                                        Permutation::parse("1")),
                  std::out_of_range);
}

TEST_CASE("block substitution is the unique permutation making equivariance "
          "hold") {
  // With pairwise distinct letters in x o y, the permutation tau satisfying
  // (x . s) o_i (y . v) = (x o_{s_i} y) . tau is unique; find it by search.
  Monoid const n = Monoid::naturals();
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      std::vector<Letter> xl, yl;
      for (std::size_t j = 0; j < p; ++j) {
        xl.push_back(static_cast<Letter>(10 * j));
      }
      for (std::size_t j = 0; j < q; ++j) {
        yl.push_back(static_cast<Letter>(j));
      }
      Word const  x(n, xl), y(n, yl);
      Permutation s = Permutation::identity(p);
      do {
        Permutation v = Permutation::identity(q);
        do {
          for (std::size_t i = 1; i <= p; ++i) {
            Word const lhs = substitute(act(x, s), i, act(y, v));
            Word const base = substitute(x, s[i], y);
            std::vector<Permutation> found;
            Permutation tau = Permutation::identity(p + q - 1);
            do {
              if (act(base, tau) == lhs) {
                found.push_back(tau);
              }
            } while (tau.next());
            REQUIRE(found.size() == 1);
            CHECK(perm_block_substitute(s, i, v) == found.front());
          }
        } while (v.next());
      } while (s.next());
    }
  }
}

TEST_CASE("letterwise morphisms") {
  auto const mod2 = MonoidMorphism::reduce_mod(Monoid::naturals(), 2);
  auto const mod3 = MonoidMorphism::reduce_mod(Monoid::naturals(), 3);
  CHECK(lift_morphism(mod2, nat("002413"))
        == Word::parse(Monoid::cyclic(2), "000011"));
  CHECK(lift_morphism(mod3, nat("002413"))
        == Word::parse(Monoid::cyclic(3), "002110"));
  CHECK(lift_morphism(MonoidMorphism::identity(Monoid::naturals()),
                      nat("0112"))
        == nat("0112"));
  CHECK_THROWS_AS(lift_morphism(mod2, Word::parse(Monoid::cyclic(3), "0")),
                  std::domain_error);

  oracle::Random rnd(99);
  for (int trial = 0; trial < 300; ++trial) {
    Word const        x = rnd.word(Monoid::naturals(), rnd.between(1, 5), 8);
    Word const        y = rnd.word(Monoid::naturals(), rnd.between(1, 5), 8);
    std::size_t const i = rnd.between(1, x.arity());
    CHECK(lift_morphism(mod3, substitute(x, i, y))
          == substitute(lift_morphism(mod3, x), i, lift_morphism(mod3, y)));
  }
}

TEST_CASE("word hash respects equality") {
  WordHash h;
  CHECK(h(nat("0112")) == h(nat("0112")));
  CHECK(h(nat("0112")) != h(nat("0121")));
}
