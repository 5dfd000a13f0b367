#include "monoperad/presentation.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace monoperad {

  Relation::Relation(FreeTerm left, FreeTerm right)
      : _left(std::move(left)), _right(std::move(right)) {
    if (_left.arity() != _right.arity()) {
      throw std::invalid_argument(
          "relation sides have arities " + std::to_string(_left.arity())
          + " and " + std::to_string(_right.arity()));
    }
  }

  std::string Relation::to_string(Signature const& sig) const {
    return _left.to_string(sig) + " == " + _right.to_string(sig);
  }

  Relation parse_relation(Signature const& sig, std::string_view text) {
    auto const sep = text.find("==");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("relation \"" + std::string(text)
                                  + "\" has no '=='");
    }
    return Relation(FreeTerm::parse(sig, text.substr(0, sep)),
                    FreeTerm::parse(sig, text.substr(sep + 2)));
  }

  std::vector<Relation> parse_relations(Signature const& sig,
                                        std::string_view text) {
    std::vector<Relation> out;
    std::size_t           pos = 0;
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        out.push_back(parse_relation(sig, line));
      }
      pos = end + 1;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Nodes = std::vector<FreeTerm::Node>;

    struct TermEnumerator {
      Signature const&                sig;
      std::size_t                     max_terms;
      std::vector<std::vector<Nodes>> memo;  // memo[n]: terms of arity n

      std::vector<Nodes> const& of_arity(std::size_t n) {
        if (memo.size() <= n) {
          memo.resize(n + 1);
        }
        if (!memo[n].empty()) {
          return memo[n];
        }
        std::vector<Nodes> out;
        if (n == 1) {
          out.push_back({{FreeTerm::leaf_symbol, 0}});
        }
        for (std::size_t k = 0; k < sig.size(); ++k) {
          std::size_t const a = sig[k].arity;
          if (a > n) {
            continue;
          }
          Nodes prefix{{static_cast<std::int32_t>(k),
                        static_cast<std::uint32_t>(a)}};
          fill(prefix, n, a, out);
        }
        memo[n] = std::move(out);
        return memo[n];
      }

      // Appends \p slots subterms of total arity \p n to \p prefix in every
      // possible way, leftmost subterm varying slowest.
      void fill(Nodes const&        prefix,
                std::size_t         n,
                std::size_t         slots,
                std::vector<Nodes>& out) {
        if (slots == 0) {
          if (n == 0) {
            out.push_back(prefix);
            if (out.size() > max_terms) {
              throw std::length_error("more than " + std::to_string(max_terms)
                                      + " terms");
            }
          }
          return;
        }
        for (std::size_t m = 1; m + (slots - 1) <= n; ++m) {
          // memo already spans arity n, so this reference stays valid
          std::vector<Nodes> const& subs = of_arity(m);
          for (auto const& sub : subs) {
            Nodes next = prefix;
            next.insert(next.end(), sub.begin(), sub.end());
            fill(next, n - m, slots - 1, out);
          }
        }
      }
    };
  }  // namespace

  std::vector<FreeTerm> enumerate_terms(Signature const& sig,
                                        std::size_t      arity,
                                        std::size_t      max_terms) {
    if (arity < 1) {
      throw std::invalid_argument("term arity must be positive");
    }
    for (auto const& s : sig.symbols()) {
      if (s.arity < 2) {
        throw std::invalid_argument("symbol " + s.name + " has arity "
                                    + std::to_string(s.arity)
                                    + "; terms of a fixed arity would be "
                                      "infinite");
      }
    }
    TermEnumerator        e{sig, max_terms, {}};
    std::vector<FreeTerm> out;
    for (auto const& nodes : e.of_arity(arity)) {
      out.push_back(FreeTerm::from_nodes(nodes));
    }
    return out;
  }

  RelationVerdict verify_relations(Signature const&             sig,
                                   std::vector<Relation> const& rels) {
    RelationVerdict v;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      Word l = eval_term(sig, rels[r].left());
      Word rr = eval_term(sig, rels[r].right());
      ++v.checked;
      if (l != rr) {
        v.failing     = r;
        v.left_value  = std::move(l);
        v.right_value = std::move(rr);
        return v;
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t a) {
        while (parent[a] != a) {
          parent[a] = parent[parent[a]];
          a         = parent[a];
        }
        return a;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    struct Span {
      std::size_t begin, end;
    };

    // Matches \p pattern at node p of \p nodes; pattern leaves bind to the
    // subterms they cover, in leaf order.
    bool match(Nodes const&       pattern,
               Nodes const&       nodes,
               std::size_t        p,
               std::vector<Span>& binding) {
      binding.clear();
      std::size_t q = p;
      for (auto const& pn : pattern) {
        if (q >= nodes.size()) {
          return false;
        }
        if (pn.symbol == FreeTerm::leaf_symbol) {
          std::size_t const end = subtree_end(nodes, q);
          binding.push_back({q, end});
          q = end;
        } else {
          if (nodes[q].symbol != pn.symbol) {
            return false;
          }
          ++q;
        }
      }
      return true;
    }

    Nodes rewrite(Nodes const&             nodes,
                  std::size_t              p,
                  std::size_t              end,
                  Nodes const&             replacement,
                  std::vector<Span> const& binding) {
      Nodes out(nodes.begin(), nodes.begin() + p);
      std::size_t leaf = 0;
      for (auto const& rn : replacement) {
        if (rn.symbol == FreeTerm::leaf_symbol) {
          auto const& b = binding[leaf++];
          out.insert(out.end(), nodes.begin() + b.begin, nodes.begin() + b.end);
        } else {
          out.push_back(rn);
        }
      }
      out.insert(out.end(), nodes.begin() + end, nodes.end());
      return out;
    }

    struct NodesHash {
      std::size_t operator()(Nodes const& n) const noexcept {
        std::uint64_t h = 14695981039346656037ULL;
        for (auto const& nd : n) {
          h ^= static_cast<std::uint32_t>(nd.symbol + 1);
          h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
      }
    };

    struct Classes {
      std::vector<FreeTerm>    terms;
      UnionFind                uf{0};
      std::size_t              count = 0;
    };

    Classes compute_classes(Signature const&             sig,
                            std::vector<Relation> const& rels,
                            std::size_t                  arity) {
      Classes c;
      c.terms = enumerate_terms(sig, arity);
      std::unordered_map<Nodes, std::size_t, NodesHash> index;
      index.reserve(c.terms.size());
      for (std::size_t t = 0; t < c.terms.size(); ++t) {
        index.emplace(c.terms[t].nodes(), t);
      }
      c.uf    = UnionFind(c.terms.size());
      c.count = c.terms.size();

      // Every rewrite preserves arity, so its target is itself enumerated;
      // one pass over all terms yields every generating edge.
      std::vector<Span> binding;
      for (std::size_t t = 0; t < c.terms.size(); ++t) {
        Nodes const& nodes = c.terms[t].nodes();
        for (std::size_t p = 0; p < nodes.size(); ++p) {
          if (nodes[p].symbol == FreeTerm::leaf_symbol) {
            continue;
          }
          for (auto const& rel : rels) {
            for (int side = 0; side < 2; ++side) {
              Nodes const& from = (side == 0 ? rel.left() : rel.right()).nodes();
              Nodes const& to   = (side == 0 ? rel.right() : rel.left()).nodes();
              if (!match(from, nodes, p, binding)) {
                continue;
              }
              std::size_t const end = subtree_end(nodes, p);
              auto it = index.find(rewrite(nodes, p, end, to, binding));
              if (it == index.end()) {
                throw std::logic_error("rewrite left the enumerated terms");
              }
              if (c.uf.unite(t, it->second)) {
                --c.count;
              }
            }
          }
        }
      }
      return c;
    }
  }  // namespace

  std::size_t congruence_class_count(Signature const&             sig,
                                     std::vector<Relation> const& rels,
                                     std::size_t                  arity) {
    return compute_classes(sig, rels, arity).count;
  }

  CongruenceAnalysis analyze_congruence(Signature const&             sig,
                                        std::vector<Relation> const& rels,
                                        std::size_t                  arity) {
    Classes            c = compute_classes(sig, rels, arity);
    CongruenceAnalysis a;
    a.arity   = arity;
    a.terms   = c.terms.size();
    a.classes = c.count;
    std::unordered_set<Word, WordHash>         images;
    std::unordered_map<std::size_t, Word>      class_image;
    for (std::size_t t = 0; t < c.terms.size(); ++t) {
      Word w = eval_term(sig, c.terms[t]);
      images.insert(w);
      auto [it, fresh] = class_image.emplace(c.uf.find(t), w);
      if (!fresh && it->second != w) {
        a.sound = false;
      }
    }
    a.images = images.size();
    return a;
  }

}  // namespace monoperad
