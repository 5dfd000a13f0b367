#include "monoperad/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace monoperad {

  using LetterSet = std::unordered_set<std::vector<Letter>, WordHash>;

  std::vector<Word> parse_generators(Monoid const& m, std::string_view text) {
    std::vector<Word> out;
    std::size_t       pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(',', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto field = text.substr(pos, end - pos);
      while (!field.empty() && field.front() == ' ') {
        field.remove_prefix(1);
      }
      while (!field.empty() && field.back() == ' ') {
        field.remove_suffix(1);
      }
      if (field.empty()) {
        throw std::invalid_argument("empty generator in \"" + std::string(text)
                                    + "\"");
      }
      out.push_back(Word::parse(m, field));
      pos = end + 1;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GradedFamily
  ////////////////////////////////////////////////////////////////////////

  GradedFamily::GradedFamily(Monoid monoid, std::size_t max_arity)
      : _monoid(monoid), _levels(max_arity) {}

  std::vector<Word> const& GradedFamily::at(std::size_t n) const {
    if (n < 1 || n > _levels.size()) {
      throw std::out_of_range("arity " + std::to_string(n)
                              + " outside the family bound "
                              + std::to_string(_levels.size()));
    }
    return _levels[n - 1];
  }

  bool GradedFamily::contains(Word const& w) const {
    if (w.monoid() != _monoid || w.arity() > _levels.size()) {
      return false;
    }
    auto const& level = _levels[w.arity() - 1];
    return std::binary_search(level.begin(), level.end(), w);
  }

  std::size_t GradedFamily::size() const noexcept {
    std::size_t total = 0;
    for (auto const& level : _levels) {
      total += level.size();
    }
    return total;
  }

  void GradedFamily::assign(std::size_t n, std::vector<Word> words) {
    if (n < 1 || n > _levels.size()) {
      throw std::out_of_range("arity " + std::to_string(n)
                              + " outside the family bound");
    }
    for (auto const& w : words) {
      if (w.arity() != n || w.monoid() != _monoid) {
        throw std::invalid_argument("word " + w.to_string()
                                    + " does not belong at arity "
                                    + std::to_string(n) + " over "
                                    + _monoid.name());
      }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    _levels[n - 1] = std::move(words);
  }

  GradedFamily GradedFamily::truncated(std::size_t m) const {
    GradedFamily out(_monoid, std::min(m, _levels.size()));
    for (std::size_t n = 0; n < out._levels.size(); ++n) {
      out._levels[n] = _levels[n];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  unsigned default_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("OPERAD_THREADS")) {
      char*         end = nullptr;
      unsigned long cap = std::strtoul(env, &end, 10);
      if (end != env && cap > 0) {
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
      }
    }
    return n;
  }

  namespace {
    using Level = std::vector<std::vector<Letter>>;

    // x o_i y for every x in xs[begin, end), y in ys and every position.
    void compose_range(Monoid const& m,
                       Level const&  xs,
                       std::size_t   begin,
                       std::size_t   end,
                       Level const&  ys,
                       LetterSet&    out) {
      std::vector<Letter> buffer;
      for (std::size_t a = begin; a < end; ++a) {
        auto const& x = xs[a];
        for (auto const& y : ys) {
          for (std::size_t i = 1; i <= x.size(); ++i) {
            substitute_into(m, x, i, y, buffer);
            if (!out.contains(buffer)) {
              out.insert(buffer);
            }
          }
        }
      }
    }

    void check_no_overflow(Monoid const& m, std::size_t max_arity,
                           std::vector<Word> const& gens) {
      if (m.kind() != MonoidKind::additive_naturals) {
        return;
      }
      // letters at arity n never exceed (n - 1) * (largest generator letter)
      Letter top = 0;
      for (auto const& g : gens) {
        for (Letter a : g.letters()) {
          top = std::max(top, a);
        }
      }
      if (top != 0 && max_arity > 1
          && (max_arity - 1) > std::numeric_limits<Letter>::max() / top) {
        throw std::overflow_error("letters would overflow at this arity");
      }
    }
  }  // namespace

  GradedFamily generate_closure(GeneratorSet const& g,
                                std::size_t         max_arity,
                                unsigned            threads) {
    Monoid const& m = g.monoid;
    if (max_arity < 1) {
      throw std::invalid_argument("max_arity must be at least 1");
    }
    for (auto const& w : g.generators) {
      if (w.monoid() != m) {
        throw std::invalid_argument("generator " + w.to_string() + " is over "
                                    + w.monoid().name() + ", not "
                                    + m.name());
      }
      if (w.arity() > max_arity) {
        throw std::invalid_argument(
            "generator " + w.to_string() + " has arity "
            + std::to_string(w.arity()) + " above the bound "
            + std::to_string(max_arity));
      }
    }
    check_no_overflow(m, max_arity, g.generators);
    if (threads == 0) {
      threads = default_threads();
    }

    std::vector<Level>     levels(max_arity + 1);
    std::vector<LetterSet> seen(max_arity + 1);

    // Arity 1: the submonoid generated by the unary generators.
    std::vector<Letter> unary{m.identity()};
    for (auto const& w : g.generators) {
      if (w.arity() == 1 && w[1] != m.identity()) {
        if (m.kind() == MonoidKind::additive_naturals) {
          throw std::invalid_argument(
              "unary generator " + w.to_string()
              + " over N generates an infinite arity-1 component");
        }
        unary.push_back(w[1]);
      }
    }
    {
      std::deque<Letter> todo(unary.begin(), unary.end());
      std::vector<Letter> gens = unary;
      std::sort(unary.begin(), unary.end());
      unary.erase(std::unique(unary.begin(), unary.end()), unary.end());
      while (!todo.empty()) {
        Letter a = todo.front();
        todo.pop_front();
        for (Letter b : gens) {
          Letter c = m.combine_unchecked(a, b);
          if (!std::binary_search(unary.begin(), unary.end(), c)) {
            unary.insert(std::lower_bound(unary.begin(), unary.end(), c), c);
            todo.push_back(c);
          }
        }
      }
    }
    for (Letter a : unary) {
      levels[1].push_back({a});
      seen[1].insert({a});
    }
    bool const nontrivial_unary = unary.size() > 1;

    for (std::size_t n = 2; n <= max_arity; ++n) {
      LetterSet& current = seen[n];
      for (auto const& w : g.generators) {
        if (w.arity() == n) {
          current.insert(w.letters());
        }
      }
      // Work items: (arity of x, index of x).
      std::vector<std::pair<std::size_t, std::size_t>> items;
      for (std::size_t a = 2; a < n; ++a) {
        for (std::size_t k = 0; k < levels[a].size(); ++k) {
          items.emplace_back(a, k);
        }
      }
      auto run = [&](std::size_t begin, std::size_t end, LetterSet& out) {
        for (std::size_t t = begin; t < end; ++t) {
          auto [a, k]           = items[t];
          std::size_t const b   = n + 1 - a;
          compose_range(m, levels[a], k, k + 1, levels[b], out);
        }
      };
      unsigned const workers = static_cast<unsigned>(
          std::min<std::size_t>(threads, std::max<std::size_t>(1, items.size() / 64)));
      if (workers <= 1) {
        run(0, items.size(), current);
      } else {
        std::vector<LetterSet>   partial(workers);
        std::vector<std::thread> pool;
        std::size_t const        chunk = (items.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
          std::size_t begin = std::min(items.size(), w * chunk);
          std::size_t end   = std::min(items.size(), begin + chunk);
          pool.emplace_back(run, begin, end, std::ref(partial[w]));
        }
        for (auto& t : pool) {
          t.join();
        }
        for (auto& part : partial) {
          current.merge(part);
        }
      }

      // Close the level under unary composition and permutation orbits.
      if (nontrivial_unary || g.symmetric) {
        std::deque<std::vector<Letter>> todo(current.begin(), current.end());
        std::vector<Letter>             buffer;
        auto visit = [&](std::vector<Letter> const& w) {
          if (!current.contains(w)) {
            current.insert(w);
            todo.push_back(w);
          }
        };
        while (!todo.empty()) {
          std::vector<Letter> w = std::move(todo.front());
          todo.pop_front();
          if (nontrivial_unary) {
            for (Letter u : unary) {
              std::vector<Letter> left(w.size());
              for (std::size_t j = 0; j < w.size(); ++j) {
                left[j] = m.combine_unchecked(u, w[j]);
              }
              visit(left);
              for (std::size_t i = 0; i < w.size(); ++i) {
                buffer    = w;
                buffer[i] = m.combine_unchecked(w[i], u);
                visit(buffer);
              }
            }
          }
          if (g.symmetric) {
            buffer = w;
            std::sort(buffer.begin(), buffer.end());
            do {
              visit(buffer);
            } while (std::next_permutation(buffer.begin(), buffer.end()));
          }
        }
      }
      levels[n].assign(current.begin(), current.end());
      std::sort(levels[n].begin(), levels[n].end());
    }

    GradedFamily out(m, max_arity);
    for (std::size_t n = 1; n <= max_arity; ++n) {
      std::vector<Word> words;
      words.reserve(levels[n].size());
      for (auto& w : levels[n]) {
        words.push_back(Word::make_unchecked(m, std::move(w)));
      }
      out.assign(n, std::move(words));
    }
    return out;
  }

  std::vector<std::size_t> dimension_sequence(GradedFamily const& f) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= f.max_arity(); ++n) {
      out.push_back(f.at(n).size());
    }
    return out;
  }

  std::optional<std::string> closure_defect(GradedFamily const& f,
                                            bool                symmetric) {
    std::size_t const N = f.max_arity();
    for (std::size_t a = 1; a <= N; ++a) {
      for (std::size_t b = 1; a + b - 1 <= N; ++b) {
        for (auto const& x : f.at(a)) {
          for (auto const& y : f.at(b)) {
            for (std::size_t i = 1; i <= a; ++i) {
              Word z = substitute(x, i, y);
              if (!f.contains(z)) {
                return x.to_string() + " o_" + std::to_string(i) + " "
                       + y.to_string() + " = " + z.to_string()
                       + " is missing";
              }
            }
          }
        }
      }
    }
    if (symmetric) {
      for (std::size_t n = 1; n <= N; ++n) {
        for (auto const& x : f.at(n)) {
          Permutation s = Permutation::identity(n);
          do {
            Word z = act(x, s);
            if (!f.contains(z)) {
              return x.to_string() + " . " + s.to_string() + " = "
                     + z.to_string() + " is missing";
            }
          } while (s.next());
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> enumerate_predicate(MembershipPredicate const& p,
                                        std::size_t                n) {
    std::optional<Letter> top = p.max_letter(n);
    if (!top) {
      throw std::domain_error("predicate " + p.name
                              + " is not enumerable at arity "
                              + std::to_string(n));
    }
    if (auto size = p.monoid.carrier_size()) {
      top = std::min<Letter>(*top, *size - 1);
    }
    std::vector<Word>   out;
    std::vector<Letter> w;
    w.reserve(n);
    std::function<void()> dfs = [&]() {
      if (w.size() == n) {
        if (p.accepts(w)) {
          out.push_back(Word::make_unchecked(p.monoid, w));
        }
        return;
      }
      for (Letter a = 0; a <= *top; ++a) {
        w.push_back(a);
        if (w.size() == n || !p.prefix_viable || p.prefix_viable(w)) {
          dfs();
        }
        w.pop_back();
      }
    };
    dfs();
    return out;
  }

  std::vector<std::size_t> predicate_dimensions(MembershipPredicate const& p,
                                                std::size_t max_arity) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= max_arity; ++n) {
      out.push_back(enumerate_predicate(p, n).size());
    }
    return out;
  }

  std::string PredicateVerdict::describe() const {
    switch (status) {
      case Status::equal:
        return "equal";
      case Status::non_enumerable:
        return "predicate not enumerable at arity " + std::to_string(arity);
      case Status::mismatch:
        break;
    }
    std::string w = witness ? witness->to_string() : "?";
    return "arity " + std::to_string(arity) + ": " + w
           + (in_family ? " is generated but fails the predicate"
                        : " satisfies the predicate but is not generated");
  }

  PredicateVerdict equals_predicate(GradedFamily const&        f,
                                    MembershipPredicate const& p) {
    PredicateVerdict v;
    if (p.monoid != f.monoid()) {
      throw std::invalid_argument("predicate " + p.name + " is over "
                                  + p.monoid.name() + ", family over "
                                  + f.monoid().name());
    }
    for (std::size_t n = 1; n <= f.max_arity(); ++n) {
      std::vector<Word> expected;
      try {
        expected = enumerate_predicate(p, n);
      } catch (std::domain_error const&) {
        v.status = PredicateVerdict::Status::non_enumerable;
        v.arity  = n;
        return v;
      }
      auto const& got = f.at(n);
      if (got == expected) {
        continue;
      }
      v.status = PredicateVerdict::Status::mismatch;
      v.arity  = n;
      std::vector<Word> diff;
      std::set_difference(got.begin(), got.end(), expected.begin(),
                          expected.end(), std::back_inserter(diff));
      if (!diff.empty()) {
        v.witness   = diff.front();
        v.in_family = true;
        return v;
      }
      std::set_difference(expected.begin(), expected.end(), got.begin(),
                          got.end(), std::back_inserter(diff));
      v.witness = diff.front();
      return v;
    }
    return v;
  }

  GradedFamily quotient_image(GradedFamily const&   f,
                              MonoidMorphism const& theta) {
    if (f.monoid() != theta.source()) {
      throw std::domain_error("family over " + f.monoid().name()
                              + " is not in the domain of " + theta.name());
    }
    GradedFamily out(theta.target(), f.max_arity());
    for (std::size_t n = 1; n <= f.max_arity(); ++n) {
      std::vector<Word> image;
      image.reserve(f.at(n).size());
      for (auto const& w : f.at(n)) {
        image.push_back(lift_morphism(theta, w));
      }
      out.assign(n, std::move(image));
    }
    return out;
  }

}  // namespace monoperad
