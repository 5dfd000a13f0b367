#include "monoperad/term.hpp"

#include <cctype>
#include <stdexcept>

namespace monoperad {

  namespace {
    bool valid_name(std::string_view name) {
      if (name.empty()
          || !(std::isalpha(static_cast<unsigned char>(name[0]))
               || name[0] == '_')) {
        return false;
      }
      for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Signature::Signature(std::vector<GeneratorSymbol> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.empty()) {
      throw std::invalid_argument("a signature needs at least one symbol");
    }
    for (std::size_t k = 0; k < _symbols.size(); ++k) {
      auto const& s = _symbols[k];
      if (!valid_name(s.name)) {
        throw std::invalid_argument("bad symbol name \"" + s.name + "\"");
      }
      if (s.arity != s.image.arity()) {
        throw std::invalid_argument("symbol " + s.name + " has arity "
                                    + std::to_string(s.arity)
                                    + " but its image has arity "
                                    + std::to_string(s.image.arity()));
      }
      if (s.image.monoid() != _symbols[0].image.monoid()) {
        throw std::invalid_argument("symbols of one signature must share a "
                                    "monoid");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (_symbols[j].name == s.name) {
          throw std::invalid_argument("duplicate symbol " + s.name);
        }
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t k = 0; k < _symbols.size(); ++k) {
      if (_symbols[k].name == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  Monoid const& Signature::monoid() const {
    return _symbols.front().image.monoid();
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeTerm
  ////////////////////////////////////////////////////////////////////////

  std::size_t subtree_end(std::span<FreeTerm::Node const> nodes,
                          std::size_t                     p) {
    std::size_t open = 1;
    while (open > 0) {
      open += nodes[p].arity;
      --open;
      ++p;
    }
    return p;
  }

  FreeTerm FreeTerm::leaf() {
    return FreeTerm({Node{leaf_symbol, 0}});
  }

  FreeTerm FreeTerm::node(Signature const&      sig,
                          std::size_t           k,
                          std::vector<FreeTerm> children) {
    auto const& s = sig[k];
    if (children.size() != s.arity) {
      throw std::invalid_argument("symbol " + s.name + " expects "
                                  + std::to_string(s.arity)
                                  + " children, got "
                                  + std::to_string(children.size()));
    }
    std::vector<Node> nodes{
        Node{static_cast<std::int32_t>(k), static_cast<std::uint32_t>(s.arity)}};
    for (auto const& c : children) {
      nodes.insert(nodes.end(), c._nodes.begin(), c._nodes.end());
    }
    return FreeTerm(std::move(nodes));
  }

  FreeTerm FreeTerm::from_nodes(std::vector<Node> nodes) {
    return FreeTerm(std::move(nodes));
  }

  std::size_t FreeTerm::arity() const noexcept {
    std::size_t leaves = 0;
    for (auto const& nd : _nodes) {
      leaves += nd.symbol == leaf_symbol;
    }
    return leaves;
  }

  std::vector<FreeTerm> FreeTerm::children() const {
    std::vector<FreeTerm> out;
    if (is_leaf()) {
      return out;
    }
    std::size_t p = 1;
    for (std::uint32_t c = 0; c < _nodes[0].arity; ++c) {
      std::size_t end = subtree_end(_nodes, p);
      out.push_back(FreeTerm(std::vector<Node>(_nodes.begin() + p,
                                               _nodes.begin() + end)));
      p = end;
    }
    return out;
  }

  FreeTerm FreeTerm::graft(std::size_t i, FreeTerm const& y) const {
    std::size_t seen = 0;
    for (std::size_t p = 0; p < _nodes.size(); ++p) {
      if (_nodes[p].symbol == leaf_symbol && ++seen == i) {
        std::vector<Node> out(_nodes.begin(), _nodes.begin() + p);
        out.insert(out.end(), y._nodes.begin(), y._nodes.end());
        out.insert(out.end(), _nodes.begin() + p + 1, _nodes.end());
        return FreeTerm(std::move(out));
      }
    }
    throw std::out_of_range("leaf " + std::to_string(i)
                            + " out of range for a term of arity "
                            + std::to_string(arity()));
  }

  namespace {
    struct TermParser {
      Signature const& sig;
      std::string_view text;
      std::size_t      pos = 0;

      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("term \"" + std::string(text)
                                    + "\": " + what + " at offset "
                                    + std::to_string(pos));
      }

      void skip_space() {
        while (pos < text.size()
               && std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
      }

      void expect(char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos;
      }

      void term(std::vector<FreeTerm::Node>& out) {
        skip_space();
        if (pos < text.size() && text[pos] == '.') {
          ++pos;
          out.push_back({FreeTerm::leaf_symbol, 0});
          return;
        }
        std::size_t start = pos;
        while (pos < text.size()
               && (std::isalnum(static_cast<unsigned char>(text[pos]))
                   || text[pos] == '_')) {
          ++pos;
        }
        if (start == pos) {
          fail("expected '.' or a symbol name");
        }
        auto name = text.substr(start, pos - start);
        auto k    = sig.find(name);
        if (!k) {
          fail("unknown symbol " + std::string(name));
        }
        std::size_t const arity = sig[*k].arity;
        out.push_back({static_cast<std::int32_t>(*k),
                       static_cast<std::uint32_t>(arity)});
        expect('(');
        for (std::size_t c = 0; c < arity; ++c) {
          if (c > 0) {
            expect(',');
          }
          term(out);
        }
        expect(')');
      }
    };
  }  // namespace

  FreeTerm FreeTerm::parse(Signature const& sig, std::string_view text) {
    TermParser                parser{sig, text};
    std::vector<Node>         nodes;
    parser.term(nodes);
    parser.skip_space();
    if (parser.pos != text.size()) {
      parser.fail("trailing characters");
    }
    return FreeTerm(std::move(nodes));
  }

  std::string FreeTerm::to_string(Signature const& sig) const {
    std::string out;
    auto        rec = [&](auto&& self, std::size_t p) -> std::size_t {
      auto const& nd = _nodes[p];
      if (nd.symbol == leaf_symbol) {
        out += '.';
        return p + 1;
      }
      out += sig[static_cast<std::size_t>(nd.symbol)].name;
      out += '(';
      ++p;
      for (std::uint32_t c = 0; c < nd.arity; ++c) {
        if (c > 0) {
          out += ',';
        }
        p = self(self, p);
      }
      out += ')';
      return p;
    };
    rec(rec, 0);
    return out;
  }

  std::size_t FreeTermHash::operator()(FreeTerm const& t) const noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto const& nd : t.nodes()) {
      h ^= static_cast<std::uint32_t>(nd.symbol + 1);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  Word eval_term(Signature const& sig, FreeTerm const& t) {
    auto const& nodes = t.nodes();
    auto        rec   = [&](auto&& self, std::size_t p, std::size_t& end)
        -> Word {
      auto const& nd = nodes[p];
      if (nd.symbol == FreeTerm::leaf_symbol) {
        end = p + 1;
        return unit_element(sig.monoid());
      }
      std::vector<Word> values;
      std::size_t       q = p + 1;
      for (std::uint32_t c = 0; c < nd.arity; ++c) {
        values.push_back(self(self, q, q));
      }
      end         = q;
      Word result = sig[static_cast<std::size_t>(nd.symbol)].image;
      for (std::size_t j = values.size(); j >= 1; --j) {
        result = substitute(result, j, values[j - 1]);
      }
      return result;
    };
    std::size_t end = 0;
    return rec(rec, 0, end);
  }

}  // namespace monoperad
