#include "monoperad/axioms.hpp"

#include <algorithm>

namespace monoperad {

  std::string axiom_name(Axiom a) {
    switch (a) {
      case Axiom::series_associativity:
        return "series-associativity";
      case Axiom::parallel_associativity:
        return "parallel-associativity";
      case Axiom::unit:
        return "unit";
      case Axiom::equivariance:
        return "equivariance";
    }
    return "?";
  }

  std::vector<Word> all_words(Monoid const& m,
                              std::size_t   max_arity,
                              Letter        letter_cap) {
    Letter const alphabet
        = m.carrier_size() ? *m.carrier_size() : letter_cap + 1;
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_arity; ++n) {
      std::vector<Letter> w(n, 0);
      while (true) {
        out.push_back(Word::make_unchecked(m, w));
        std::size_t j = n;
        while (j > 0 && w[j - 1] + 1 == alphabet) {
          w[j - 1] = 0;
          --j;
        }
        if (j == 0) {
          break;
        }
        ++w[j - 1];
      }
    }
    return out;
  }

  namespace {
    std::vector<Permutation> all_permutations(std::size_t n) {
      std::vector<Permutation> out;
      Permutation              p = Permutation::identity(n);
      do {
        out.push_back(p);
      } while (p.next());
      return out;
    }

    std::string show(Word const& w) {
      return "(" + w.to_string() + ")";
    }
  }  // namespace

  std::vector<AxiomReport> check_axioms(Monoid const&  m,
                                        ArityBounds    bounds,
                                        SubstitutionFn compose,
                                        Letter         letter_cap) {
    if (!compose) {
      compose = [](Word const& x, std::size_t i, Word const& y) {
        return substitute(x, i, y);
      };
    }
    std::size_t const biggest = std::max({bounds.x, bounds.y, bounds.z});
    auto const        words   = all_words(m, biggest, letter_cap);
    auto within = [&](std::size_t bound) {
      std::vector<Word const*> out;
      for (auto const& w : words) {
        if (w.arity() <= bound) {
          out.push_back(&w);
        }
      }
      return out;
    };
    auto const xs = within(bounds.x);
    auto const ys = within(bounds.y);
    auto const zs = within(bounds.z);

    AxiomReport series{Axiom::series_associativity, 0, std::nullopt};
    AxiomReport parallel{Axiom::parallel_associativity, 0, std::nullopt};
    AxiomReport unit{Axiom::unit, 0, std::nullopt};
    AxiomReport equiv{Axiom::equivariance, 0, std::nullopt};

    for (Word const* x : xs) {
      std::size_t const n = x->arity();
      for (Word const* y : ys) {
        std::size_t const mm = y->arity();
        for (Word const* z : zs) {
          // (x o_i y) o_{i+j-1} z = x o_i (y o_j z)
          for (std::size_t i = 1; i <= n && series.passed(); ++i) {
            Word const xy = compose(*x, i, *y);
            for (std::size_t j = 1; j <= mm; ++j) {
              ++series.checks;
              Word lhs = compose(xy, i + j - 1, *z);
              Word rhs = compose(*x, i, compose(*y, j, *z));
              if (lhs != rhs) {
                series.counterexample = "x=" + show(*x) + " y=" + show(*y)
                                        + " z=" + show(*z) + " i="
                                        + std::to_string(i) + " j="
                                        + std::to_string(j) + ": "
                                        + show(lhs) + " != " + show(rhs);
                break;
              }
            }
          }
          // (x o_i y) o_{j+m-1} z = (x o_j z) o_i y, i < j
          for (std::size_t i = 1; i <= n && parallel.passed(); ++i) {
            Word const xy = compose(*x, i, *y);
            for (std::size_t j = i + 1; j <= n; ++j) {
              ++parallel.checks;
              Word lhs = compose(xy, j + mm - 1, *z);
              Word rhs = compose(compose(*x, j, *z), i, *y);
              if (lhs != rhs) {
                parallel.counterexample = "x=" + show(*x) + " y=" + show(*y)
                                          + " z=" + show(*z) + " i="
                                          + std::to_string(i) + " j="
                                          + std::to_string(j) + ": "
                                          + show(lhs) + " != " + show(rhs);
                break;
              }
            }
          }
        }
      }
    }

    Word const one = unit_element(m);
    for (Word const* x : xs) {
      ++unit.checks;
      if (Word left = compose(one, 1, *x); left != *x) {
        unit.counterexample
            = "1 o_1 " + show(*x) + " = " + show(left) + " != " + show(*x);
        break;
      }
      bool ok = true;
      for (std::size_t i = 1; i <= x->arity(); ++i) {
        ++unit.checks;
        if (Word right = compose(*x, i, one); right != *x) {
          unit.counterexample = show(*x) + " o_" + std::to_string(i)
                                + " 1 = " + show(right);
          ok = false;
          break;
        }
      }
      if (!ok) {
        break;
      }
    }

    // (x . s) o_i (y . v) = (x o_{s_i} y) . B_i(s, v)
    std::vector<std::vector<Permutation>> perms(biggest + 1);
    for (std::size_t n = 1; n <= biggest; ++n) {
      perms[n] = all_permutations(n);
    }
    for (Word const* x : xs) {
      if (!equiv.passed()) {
        break;
      }
      std::size_t const n = x->arity();
      for (Word const* y : ys) {
        if (!equiv.passed()) {
          break;
        }
        std::size_t const mm = y->arity();
        for (auto const& s : perms[n]) {
          if (!equiv.passed()) {
            break;
          }
          Word const xs_ = act(*x, s);
          for (auto const& v : perms[mm]) {
            if (!equiv.passed()) {
              break;
            }
            Word const yv = act(*y, v);
            for (std::size_t i = 1; i <= n; ++i) {
              ++equiv.checks;
              Word lhs = compose(xs_, i, yv);
              Word rhs = act(compose(*x, s[i], *y),
                             perm_block_substitute(s, i, v));
              if (lhs != rhs) {
                equiv.counterexample
                    = "x=" + show(*x) + " y=" + show(*y)
                      + " sigma=" + s.to_string() + " nu=" + v.to_string()
                      + " i=" + std::to_string(i) + ": " + show(lhs)
                      + " != " + show(rhs);
                break;
              }
            }
          }
        }
      }
    }
    return {series, parallel, unit, equiv};
  }

}  // namespace monoperad
