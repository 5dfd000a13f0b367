#include <catch_amalgamated.hpp>

#include "monoperad/bijections.hpp"
#include "monoperad/closure.hpp"
#include "monoperad/families.hpp"
#include "oracles.hpp"

using namespace monoperad;

namespace {
  Monoid const N = Monoid::naturals();

  Word nat(std::string_view s) {
    return Word::parse(N, s);
  }
  Word bin(std::string_view s) {
    return Word::parse(Monoid::cyclic(2), s);
  }
  Composition comp(std::string_view s) {
    return Composition::parse(s);
  }
  PerElement per(std::string_view s) {
    return PerElement::of(nat(s));
  }
}  // namespace

TEST_CASE("planar trees from depth words") {
  CHECK(word_to_tree(nat("0112333212")).to_string()
        == "(()((()()())())(()))");
  CHECK(word_to_tree(nat("0112333212")).node_count() == 10);
  CHECK(word_to_tree(nat("0")).to_string() == "()");
  CHECK(word_to_tree(nat("01")).to_string() == "(())");
  CHECK(tree_to_word(PlanarTree::parse("(()((()()())())(()))"))
        == nat("0112333212"));
  CHECK_THROWS_AS(word_to_tree(nat("02")), std::invalid_argument);
  CHECK_THROWS_AS(PlanarTree::parse("(()"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarTree::parse("()()"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarTree::parse(""), std::invalid_argument);
}

TEST_CASE("tree grafting") {
  auto const s = word_to_tree(nat("0121"));
  auto const t = word_to_tree(nat("01121"));
  CHECK(tree_to_word(prt_graft(s, 2, t)) == nat("01223221"));
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(prt_graft(s, i, PlanarTree{}) == s);
  }
  auto const chain = word_to_tree(nat("01"));
  CHECK(tree_to_word(prt_graft(chain, 1, chain)) == nat("011"));
  CHECK_THROWS_AS(prt_graft(s, 5, t), std::out_of_range);
  CHECK_THROWS_AS(prt_graft(s, 0, t), std::out_of_range);
}

TEST_CASE("grafting agrees with substitution on random trees") {
  oracle::Random rnd(314);
  for (int trial = 0; trial < 400; ++trial) {
    Word const        x = rnd.prt_word(rnd.between(1, 8));
    Word const        y = rnd.prt_word(rnd.between(1, 8));
    std::size_t const i = rnd.between(1, x.arity());
    CHECK(tree_to_word(prt_graft(word_to_tree(x), i, word_to_tree(y)))
          == substitute(x, i, y));
  }
}

TEST_CASE("Schroeder trees and sector words") {
  CHECK(tree_to_word(PlanarTree{}) == nat("0"));
  CHECK(word_to_schroeder(nat("0")).to_string() == "(()())");
  CHECK(word_to_schroeder(nat("00")).to_string() == "(()()())");
  CHECK(word_to_schroeder(nat("01")).to_string() == "(()(()()))");
  CHECK(word_to_schroeder(nat("10")).to_string() == "((()())())");
  auto const big = word_to_schroeder(nat("1132002122"));
  CHECK(is_schroeder_tree(big));
  CHECK(big.leaf_count() == 11);
  CHECK(schroeder_to_word(big) == nat("1132002122"));
  CHECK_FALSE(is_schroeder_tree(PlanarTree::parse("(())")));
  CHECK_FALSE(is_schroeder_tree(PlanarTree::parse("()")));
  CHECK_THROWS_AS(schroeder_to_word(PlanarTree::parse("((()()))")),
                  std::invalid_argument);
  CHECK_THROWS_AS(word_to_schroeder(nat("11")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_schroeder(nat("020")), std::invalid_argument);
}

TEST_CASE("k-Dyck paths") {
  CHECK(word_to_kdyck(nat("002413"), 2).to_string() == "UDDUUUDDDDDUUDDDDD");
  CHECK(kdyck_to_word(LatticePath::parse("UDDUUUDDDDDUUDDDDD"), 2)
        == nat("002413"));
  CHECK(word_to_kdyck(nat("000"), 0).to_string() == "UUU");
  CHECK(word_to_kdyck(nat("00"), 1).to_string() == "UDUD");
  CHECK(is_kdyck_path(LatticePath::parse("UUDD"), 1));
  CHECK_FALSE(is_kdyck_path(LatticePath::parse("UDDU"), 1));
  CHECK_FALSE(is_kdyck_path(LatticePath::parse("UD"), 2));
  CHECK_FALSE(is_kdyck_path(LatticePath::parse(""), 1));
  CHECK_THROWS_AS(word_to_kdyck(nat("02"), 1), std::invalid_argument);
  CHECK_THROWS_AS(kdyck_to_word(LatticePath::parse("UD"), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticePath::parse("UX"), std::invalid_argument);
}

TEST_CASE("Motzkin paths") {
  CHECK(word_to_motzkin(nat("001123221010")).to_string() == "SUSUUDSDDUD");
  CHECK(motzkin_to_word(LatticePath::parse("SUSUUDSDDUD"))
        == nat("001123221010"));
  CHECK(word_to_motzkin(nat("0")).to_string().empty());
  CHECK(word_to_motzkin(nat("00")).to_string() == "S");
  CHECK(is_motzkin_path(LatticePath::parse("")));
  CHECK_FALSE(is_motzkin_path(LatticePath::parse("D")));
  CHECK_FALSE(is_motzkin_path(LatticePath::parse("U")));
  CHECK_THROWS_AS(word_to_motzkin(nat("01")), std::invalid_argument);
  CHECK_THROWS_AS(motzkin_to_word(LatticePath::parse("DU")),
                  std::invalid_argument);
}

TEST_CASE("path bijections round trip through every path") {
  // Enumerate step strings directly, independently of the closure.
  for (std::size_t len = 0; len <= 8; ++len) {
    std::size_t count = 0;
    for (auto const& code : oracle::sequences(len == 0 ? 1 : len, 2)) {
      if (len == 0 && count > 0) {
        break;
      }
      LatticePath p;
      for (std::size_t j = 0; j < len; ++j) {
        p.steps.push_back(code[j] == 0 ? Step::up
                          : code[j] == 1 ? Step::down
                                         : Step::flat);
      }
      if (is_motzkin_path(p)) {
        ++count;
        CHECK(word_to_motzkin(motzkin_to_word(p)) == p);
      }
      if (is_kdyck_path(p, 1)) {
        CHECK(word_to_kdyck(kdyck_to_word(p, 1), 1) == p);
      }
      if (is_kdyck_path(p, 2)) {
        CHECK(word_to_kdyck(kdyck_to_word(p, 2), 2) == p);
      }
    }
    CHECK(count == oracle::motzkin_numbers(9)[len]);
  }
}

TEST_CASE("compositions") {
  CHECK(word_to_composition(bin("0")) == comp("1"));
  CHECK(word_to_composition(bin("011")) == comp("3"));
  CHECK(word_to_composition(bin("0100")) == comp("2,1,1"));
  CHECK(composition_to_word(comp("2,1,1")) == bin("0100"));
  CHECK(comp("2,1,1").to_string() == "2,1,1");
  CHECK(comp("2,1,1").size() == 4);
  CHECK_THROWS_AS(comp("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(comp("0"), std::invalid_argument);
  CHECK_THROWS_AS(comp(""), std::invalid_argument);
  CHECK_THROWS_AS(word_to_composition(bin("10")), std::invalid_argument);
}

TEST_CASE("ribbon transpose") {
  CHECK(transpose(comp("3")) == comp("1,1,1"));
  CHECK(transpose(comp("1,1")) == comp("2"));
  CHECK(transpose(comp("1")) == comp("1"));
  CHECK(transpose(comp("2,1")) == comp("1,2"));
  auto const f = generate_closure(
      {Monoid::cyclic(2), parse_generators(Monoid::cyclic(2), "00,01"), false},
      8);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto const& w : f.at(n)) {
      Composition const c = word_to_composition(w);
      CHECK(transpose(transpose(c)) == c);
      CHECK(transpose(c).size() == c.size());
      CHECK(transpose(c).parts.size() == c.size() + 1 - c.parts.size());
    }
  }
}

TEST_CASE("ribbon substitution") {
  CHECK(ribbon_substitute(comp("2,1,3,2,1"), 4, comp("1,1,2,3,1"))
        == comp("2,1,1,1,2,3,3,2,1"));
  CHECK(ribbon_substitute(comp("1"), 1, comp("2,1,3")) == comp("2,1,3"));
  for (std::size_t i = 1; i <= 9; ++i) {
    CHECK(ribbon_substitute(comp("2,1,3,2,1"), i, comp("1"))
          == comp("2,1,3,2,1"));
  }
  CHECK_THROWS_AS(ribbon_substitute(comp("2"), 3, comp("1")),
                  std::out_of_range);

  oracle::Random rnd(2718);
  for (int trial = 0; trial < 400; ++trial) {
    Word x = rnd.word(Monoid::cyclic(2), rnd.between(1, 8));
    Word y = rnd.word(Monoid::cyclic(2), rnd.between(1, 8));
    std::vector<Letter> xl = x.letters(), yl = y.letters();
    xl[0] = yl[0] = 0;
    x = Word(Monoid::cyclic(2), xl);
    y = Word(Monoid::cyclic(2), yl);
    std::size_t const i = rnd.between(1, x.arity());
    CHECK(ribbon_substitute(word_to_composition(x), i, word_to_composition(y))
          == word_to_composition(substitute(x, i, y)));
  }
}

TEST_CASE("step map of directed animals") {
  auto const phi = da_phi(Word::parse(Monoid::cyclic(3), "011220201"));
  CHECK(phi == std::vector<int>{1, 0, 1, 0, 1, -1, 1, 1});
  CHECK(is_motzkin_prefix(phi));
  CHECK(da_phi(Word::parse(Monoid::cyclic(3), "2")).empty());
  CHECK(da_phi(Word::parse(Monoid::cyclic(3), "0000"))
        == std::vector<int>{0, 0, 0});
  CHECK(is_motzkin_prefix(std::vector<int>{}));
  CHECK_FALSE(is_motzkin_prefix(std::vector<int>{-1}));
  CHECK_FALSE(is_motzkin_prefix(std::vector<int>{2, -1}));
  CHECK_THROWS_AS(da_phi(nat("01")), std::invalid_argument);
}

TEST_CASE("Per substitution examples") {
  CHECK(per_substitute(per("01"), 2, per("01")) == per("012"));
  CHECK(per_substitute(per("01"), 1, per("01")).is_zero());
  CHECK(per_substitute(PerElement::zero(), 1, per("01")).is_zero());
  CHECK(per_substitute(per("01"), 1, PerElement::zero()).is_zero());
  CHECK(per_substitute(per("120"), 2, per("0")) == per("120"));
  CHECK(per_substitute(per("120"), 2, per("10")) == per("1320"));
  CHECK(PerElement::zero().to_string() == "0_K");
  CHECK_THROWS_AS(PerElement::zero().word(), std::logic_error);
  CHECK_THROWS_AS(per("011"), std::invalid_argument);
  CHECK_THROWS_AS(per_substitute(per("01"), 3, per("01")), std::out_of_range);
}

namespace {
  std::vector<PerElement> per_elements(std::size_t n) {
    std::vector<PerElement> out;
    std::vector<Letter>     u(n);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = static_cast<Letter>(j);
    }
    do {
      out.push_back(PerElement::of(Word(N, u)));
    } while (std::next_permutation(u.begin(), u.end()));
    return out;
  }
}  // namespace

TEST_CASE("Per's explicit rule matches the ideal quotient") {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (auto const& x : per_elements(a)) {
        for (auto const& y : per_elements(b)) {
          for (std::size_t i = 1; i <= a; ++i) {
            CHECK(per_substitute(x, i, y) == per_ideal_substitute(x, i, y));
          }
        }
      }
    }
  }
}

TEST_CASE("Per is associative with an absorbing zero") {
  std::vector<PerElement> all{PerElement::zero()};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const e = per_elements(n);
    all.insert(all.end(), e.begin(), e.end());
  }
  auto arity = [](PerElement const& p) {
    return p.is_zero() ? std::size_t{0} : p.word().arity();
  };
  for (auto const& x : all) {
    if (x.is_zero()) {
      continue;
    }
    for (auto const& y : all) {
      for (auto const& z : all) {
        std::size_t const p = arity(x), q = arity(y);
        for (std::size_t i = 1; i <= p; ++i) {
          if (q > 0) {
            for (std::size_t j = 1; j <= q; ++j) {
              auto const lhs = per_substitute(per_substitute(x, i, y),
                                              i + j - 1, z);
              auto const rhs = per_substitute(x, i, per_substitute(y, j, z));
              CHECK(lhs == rhs);
            }
          }
          for (std::size_t j = i + 1; j <= p && q > 0; ++j) {
            auto const lhs = per_substitute(per_substitute(x, i, y),
                                            j + q - 1, z);
            auto const xz  = per_substitute(x, j, z);
            auto const rhs = per_substitute(xz, i, y);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("repeated-letter packed words form an ideal") {
  auto const pw = membership_predicate({Family::pw});
  auto repeats = [](Word const& w) {
    return !predicate::twisted_permutation(w.letters());
  };
  std::vector<std::vector<Word>> sets(6);
  for (std::size_t n = 1; n <= 5; ++n) {
    sets[n] = enumerate_predicate(pw, n);
  }
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = 1; a + b - 1 <= 5; ++b) {
      for (auto const& x : sets[a]) {
        for (auto const& y : sets[b]) {
          if (!repeats(x) && !repeats(y)) {
            continue;
          }
          for (std::size_t i = 1; i <= a; ++i) {
            CHECK(repeats(substitute(x, i, y)));
          }
        }
      }
    }
    for (auto const& x : sets[a]) {
      if (repeats(x)) {
        Permutation s = Permutation::identity(a);
        do {
          CHECK(repeats(act(x, s)));
        } while (s.next());
      }
    }
  }
}

TEST_CASE("diassociative encoding") {
  Signature const sig = dias_signature();
  CHECK(dias_encode(sig, FreeTerm::parse(sig, "l(.,.)"))
        == Word::parse(Monoid::boolean(), "10"));
  CHECK(dias_encode(sig, FreeTerm::parse(sig, "r(.,.)"))
        == Word::parse(Monoid::boolean(), "01"));
  CHECK(dias_encode(sig, FreeTerm::parse(sig, "l(r(.,.),.)"))
        == Word::parse(Monoid::boolean(), "010"));
  CHECK(dias_encode(sig, FreeTerm::parse(sig, "r(.,l(.,.))"))
        == Word::parse(Monoid::boolean(), "010"));

  // Symbols are matched by name, whatever their images.
  Monoid const    b = Monoid::boolean();
  Signature const renamed({{"r", 2, Word(b, {0, 0})}, {"l", 2, Word(b, {0, 0})}});
  CHECK(dias_encode(renamed, FreeTerm::parse(renamed, "l(.,.)"))
        == Word::parse(b, "10"));
  Signature const other({{"m", 2, Word(b, {1, 1})}});
  CHECK_THROWS_AS(dias_encode(other, FreeTerm::parse(other, "m(.,.)")),
                  std::invalid_argument);
}
