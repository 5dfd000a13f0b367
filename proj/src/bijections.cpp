#include "monoperad/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "monoperad/families.hpp"

namespace monoperad {

  namespace {
    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw std::invalid_argument(what);
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PlanarTree
  ////////////////////////////////////////////////////////////////////////

  std::size_t PlanarTree::node_count() const noexcept {
    std::size_t total = 1;
    for (auto const& c : children) {
      total += c.node_count();
    }
    return total;
  }

  std::size_t PlanarTree::leaf_count() const noexcept {
    if (children.empty()) {
      return 1;
    }
    std::size_t total = 0;
    for (auto const& c : children) {
      total += c.leaf_count();
    }
    return total;
  }

  std::string PlanarTree::to_string() const {
    std::string out = "(";
    for (auto const& c : children) {
      out += c.to_string();
    }
    return out + ")";
  }

  PlanarTree PlanarTree::parse(std::string_view text) {
    std::size_t pos = 0;
    auto rec        = [&](auto&& self) -> PlanarTree {
      require(pos < text.size() && text[pos] == '(',
              "tree \"" + std::string(text) + "\": expected '('");
      ++pos;
      PlanarTree t;
      while (pos < text.size() && text[pos] == '(') {
        t.children.push_back(self(self));
      }
      require(pos < text.size() && text[pos] == ')',
              "tree \"" + std::string(text) + "\": expected ')'");
      ++pos;
      return t;
    };
    PlanarTree t = rec(rec);
    require(pos == text.size(),
            "tree \"" + std::string(text) + "\": trailing characters");
    return t;
  }

  PlanarTree word_to_tree(Word const& x) {
    require(x.monoid() == Monoid::naturals()
                && predicate::planar_rooted_tree(x.letters()),
            "word " + x.to_string() + " is not in PRT");
    auto const& u   = x.letters();
    std::size_t pos = 0;
    auto rec        = [&](auto&& self) -> PlanarTree {
      Letter const depth = u[pos++];
      PlanarTree   t;
      while (pos < u.size() && u[pos] == depth + 1) {
        t.children.push_back(self(self));
      }
      return t;
    };
    return rec(rec);
  }

  Word tree_to_word(PlanarTree const& t) {
    std::vector<Letter> out;
    auto rec = [&](auto&& self, PlanarTree const& node, Letter depth) -> void {
      out.push_back(depth);
      for (auto const& c : node.children) {
        self(self, c, depth + 1);
      }
    };
    rec(rec, t, 0);
    return Word::make_unchecked(Monoid::naturals(), std::move(out));
  }

  PlanarTree prt_graft(PlanarTree const& s,
                       std::size_t        i,
                       PlanarTree const&  t) {
    if (i < 1 || i > s.node_count()) {
      throw std::out_of_range("node " + std::to_string(i)
                              + " out of range for a tree with "
                              + std::to_string(s.node_count()) + " nodes");
    }
    PlanarTree  out     = s;
    std::size_t visited = 0;
    auto rec = [&](auto&& self, PlanarTree& node) -> bool {
      if (++visited == i) {
        node.children.insert(node.children.begin(), t.children.begin(),
                             t.children.end());
        return true;
      }
      for (auto& c : node.children) {
        if (self(self, c)) {
          return true;
        }
      }
      return false;
    };
    rec(rec, out);
    return out;
  }

  bool is_schroeder_tree(PlanarTree const& t) {
    if (t.is_leaf()) {
      return false;
    }
    auto rec = [](auto&& self, PlanarTree const& node) -> bool {
      if (node.children.size() == 1) {
        return false;
      }
      return std::all_of(node.children.begin(), node.children.end(),
                         [&](PlanarTree const& c) { return self(self, c); });
    };
    return rec(rec, t);
  }

  Word schroeder_to_word(PlanarTree const& t) {
    require(is_schroeder_tree(t),
            "tree " + t.to_string() + " is not a Schroeder tree");
    std::vector<Letter> out;
    auto rec = [&](auto&& self, PlanarTree const& node, Letter depth) -> void {
      for (std::size_t c = 0; c < node.children.size(); ++c) {
        if (c > 0) {
          out.push_back(depth);
        }
        self(self, node.children[c], depth + 1);
      }
    };
    rec(rec, t, 0);
    return Word::make_unchecked(Monoid::naturals(), std::move(out));
  }

  PlanarTree word_to_schroeder(Word const& x) {
    require(x.monoid() == Monoid::naturals(),
            "Schroeder words live in N, not " + x.monoid().name());
    auto const& u = x.letters();
    // The sectors of a node at depth d are the letters equal to d in its
    // span; the gaps between them are its subtrees (empty gap = leaf).
    auto rec = [&](auto&& self, std::size_t begin, std::size_t end,
                   Letter depth) -> PlanarTree {
      PlanarTree  node;
      std::size_t gap = begin;
      bool        any = false;
      auto        child = [&](std::size_t a, std::size_t b) {
        if (a == b) {
          node.children.emplace_back();
        } else {
          node.children.push_back(self(self, a, b, depth + 1));
        }
      };
      for (std::size_t p = begin; p < end; ++p) {
        require(u[p] >= depth,
                "word " + x.to_string() + " is not a Schroeder sector word");
        if (u[p] == depth) {
          child(gap, p);
          gap = p + 1;
          any = true;
        }
      }
      require(any, "word " + x.to_string() + " is not a Schroeder sector word");
      child(gap, end);
      return node;
    };
    return rec(rec, 0, u.size(), 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice paths
  ////////////////////////////////////////////////////////////////////////

  std::string LatticePath::to_string() const {
    std::string out;
    for (Step s : steps) {
      out += static_cast<char>(s);
    }
    return out;
  }

  LatticePath LatticePath::parse(std::string_view text) {
    LatticePath p;
    for (char c : text) {
      require(c == 'U' || c == 'D' || c == 'S',
              "bad step '" + std::string(1, c) + "' in path \""
                  + std::string(text) + "\"");
      p.steps.push_back(static_cast<Step>(c));
    }
    return p;
  }

  bool is_kdyck_path(LatticePath const& p, unsigned k) {
    long long   height = 0;
    std::size_t ups = 0, downs = 0;
    for (Step s : p.steps) {
      switch (s) {
        case Step::up:
          height += k;
          ++ups;
          break;
        case Step::down:
          if (--height < 0) {
            return false;
          }
          ++downs;
          break;
        case Step::flat:
          return false;
      }
    }
    return ups >= 1 && height == 0 && downs == k * ups;
  }

  bool is_motzkin_path(LatticePath const& p) {
    long long height = 0;
    for (Step s : p.steps) {
      height += s == Step::up ? 1 : s == Step::down ? -1 : 0;
      if (height < 0) {
        return false;
      }
    }
    return height == 0;
  }

  LatticePath word_to_kdyck(Word const& x, unsigned k) {
    require(x.monoid() == Monoid::naturals()
                && predicate::fuss_catalan(x.letters(), k),
            "word " + x.to_string() + " is not in FCAT" + std::to_string(k));
    LatticePath p;
    std::size_t const n = x.arity();
    for (std::size_t i = 1; i <= n; ++i) {
      p.steps.push_back(Step::up);
      Letter const top  = x[i] + k;
      Letter const next = i < n ? x[i + 1] : 0;
      p.steps.insert(p.steps.end(), top - next, Step::down);
    }
    return p;
  }

  Word kdyck_to_word(LatticePath const& p, unsigned k) {
    require(is_kdyck_path(p, k),
            "path " + p.to_string() + " is not a " + std::to_string(k)
                + "-Dyck path");
    std::vector<Letter> out;
    Letter              height = 0;
    for (Step s : p.steps) {
      if (s == Step::up) {
        out.push_back(height);
        height += k;
      } else {
        --height;
      }
    }
    return Word::make_unchecked(Monoid::naturals(), std::move(out));
  }

  LatticePath word_to_motzkin(Word const& x) {
    require(x.monoid() == Monoid::naturals()
                && predicate::motzkin(x.letters()),
            "word " + x.to_string() + " is not in MOTZ");
    LatticePath p;
    for (std::size_t i = 1; i < x.arity(); ++i) {
      Letter const a = x[i], b = x[i + 1];
      p.steps.push_back(b > a ? Step::up : b < a ? Step::down : Step::flat);
    }
    return p;
  }

  Word motzkin_to_word(LatticePath const& p) {
    require(is_motzkin_path(p),
            "path " + p.to_string() + " is not a Motzkin path");
    std::vector<Letter> out{0};
    for (Step s : p.steps) {
      Letter h = out.back();
      out.push_back(s == Step::up ? h + 1 : s == Step::down ? h - 1 : h);
    }
    return Word::make_unchecked(Monoid::naturals(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Compositions
  ////////////////////////////////////////////////////////////////////////

  unsigned Composition::size() const noexcept {
    unsigned total = 0;
    for (unsigned c : parts) {
      total += c;
    }
    return total;
  }

  std::string Composition::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += std::to_string(parts[j]);
    }
    return out;
  }

  Composition Composition::parse(std::string_view text) {
    Composition c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(',', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto     field = text.substr(pos, end - pos);
      unsigned value = 0;
      auto [ptr, ec]
          = std::from_chars(field.data(), field.data() + field.size(), value);
      require(!field.empty() && ec == std::errc()
                  && ptr == field.data() + field.size() && value > 0,
              "bad composition \"" + std::string(text) + "\"");
      c.parts.push_back(value);
      pos = end + 1;
    }
    return c;
  }

  Composition transpose(Composition const& c) {
    // Walk the ribbon: inside a column the next box is below, between
    // columns it is to the right. Transposing swaps the two moves.
    Composition out;
    out.parts.push_back(1);
    for (std::size_t k = 0; k < c.parts.size(); ++k) {
      if (k > 0) {
        ++out.parts.back();  // a right move becomes a down move
      }
      for (unsigned r = 1; r < c.parts[k]; ++r) {
        out.parts.push_back(1);  // a down move becomes a right move
      }
    }
    return out;
  }

  Composition word_to_composition(Word const& x) {
    require(x.monoid() == Monoid::cyclic(2)
                && predicate::composition(x.letters()),
            "word " + x.to_string() + " is not in COMP");
    Composition c;
    for (Letter a : x.letters()) {
      if (a == 0) {
        c.parts.push_back(1);
      } else {
        ++c.parts.back();
      }
    }
    return c;
  }

  Word composition_to_word(Composition const& c) {
    require(!c.parts.empty(), "empty composition");
    std::vector<Letter> out;
    for (unsigned part : c.parts) {
      require(part > 0, "composition parts must be positive");
      out.push_back(0);
      out.insert(out.end(), part - 1, 1);
    }
    return Word::make_unchecked(Monoid::cyclic(2), std::move(out));
  }

  Composition ribbon_substitute(Composition const& c,
                                std::size_t        i,
                                Composition const& d) {
    if (i < 1 || i > c.size()) {
      throw std::out_of_range("box " + std::to_string(i)
                              + " out of range for a ribbon of size "
                              + std::to_string(c.size()));
    }
    // Locate box i: column k, r boxes above it inside the column.
    std::size_t k = 0;
    std::size_t r = i - 1;
    while (r >= c.parts[k]) {
      r -= c.parts[k];
      ++k;
    }
    Composition inserted = r == 0 ? d : transpose(d);
    inserted.parts.front() += static_cast<unsigned>(r);
    inserted.parts.back() += c.parts[k] - static_cast<unsigned>(r) - 1;

    Composition out;
    out.parts.assign(c.parts.begin(), c.parts.begin() + k);
    out.parts.insert(out.parts.end(), inserted.parts.begin(),
                     inserted.parts.end());
    out.parts.insert(out.parts.end(), c.parts.begin() + k + 1, c.parts.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Directed animals
  ////////////////////////////////////////////////////////////////////////

  std::vector<int> da_phi(Word const& x) {
    require(x.monoid() == Monoid::cyclic(3),
            "da_phi expects a word over N3, got " + x.monoid().name());
    std::vector<int> out;
    for (std::size_t i = 1; i < x.arity(); ++i) {
      int const diff = static_cast<int>((x[i + 1] + 3 - x[i]) % 3);
      out.push_back(diff == 2 ? -1 : diff);
    }
    return out;
  }

  bool is_motzkin_prefix(std::span<int const> steps) {
    long long height = 0;
    for (int s : steps) {
      if (s < -1 || s > 1) {
        return false;
      }
      height += s;
      if (height < 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Per
  ////////////////////////////////////////////////////////////////////////

  PerElement PerElement::of(Word w) {
    require(w.monoid() == Monoid::naturals()
                && predicate::twisted_permutation(w.letters()),
            "word " + w.to_string() + " is not a twisted permutation");
    return PerElement(std::move(w));
  }

  Word const& PerElement::word() const {
    if (!_word) {
      throw std::logic_error("the zero of Per has no word");
    }
    return *_word;
  }

  std::string PerElement::to_string() const {
    return _word ? _word->to_string() : "0_K";
  }

  PerElement per_substitute(PerElement const& x,
                            std::size_t       i,
                            PerElement const& y) {
    if (x.is_zero() || y.is_zero()) {
      return PerElement::zero();
    }
    Word const& u = x.word();
    if (i < 1 || i > u.arity()) {
      throw std::out_of_range("position " + std::to_string(i)
                              + " out of range for arity "
                              + std::to_string(u.arity()));
    }
    if (y.word().arity() == 1) {
      return x;
    }
    Letter const top = *std::max_element(u.letters().begin(), u.letters().end());
    if (u[i] != top) {
      return PerElement::zero();
    }
    return PerElement::of(substitute(u, i, y.word()));
  }

  PerElement per_ideal_substitute(PerElement const& x,
                                  std::size_t       i,
                                  PerElement const& y) {
    if (x.is_zero() || y.is_zero()) {
      return PerElement::zero();
    }
    Word w = substitute(x.word(), i, y.word());
    if (!predicate::twisted_permutation(w.letters())) {
      return PerElement::zero();
    }
    return PerElement::of(std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Dias
  ////////////////////////////////////////////////////////////////////////

  Signature dias_signature() {
    Monoid const b = Monoid::boolean();
    return Signature({{"l", 2, Word(b, {1, 0})}, {"r", 2, Word(b, {0, 1})}});
  }

  Word dias_encode(Signature const& sig, FreeTerm const& t) {
    static Signature const canonical = dias_signature();
    std::vector<FreeTerm::Node> nodes = t.nodes();
    for (auto& nd : nodes) {
      if (nd.symbol == FreeTerm::leaf_symbol) {
        continue;
      }
      auto const& s = sig[static_cast<std::size_t>(nd.symbol)];
      require(s.arity == 2 && (s.name == "l" || s.name == "r"),
              "dias terms use only the binary symbols l and r, found "
                  + s.name);
      nd.symbol = s.name == "l" ? 0 : 1;
    }
    return eval_term(canonical, FreeTerm::from_nodes(std::move(nodes)));
  }

}  // namespace monoperad
