#include "monoperad/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace monoperad {

  namespace {
    std::vector<std::uint32_t> parse_letters(std::string_view text) {
      std::vector<std::uint32_t> out;
      if (text.empty()) {
        return out;
      }
      if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
          if (c < '0' || c > '9') {
            throw std::invalid_argument("bad letter '" + std::string(1, c)
                                        + "' in \"" + std::string(text)
                                        + "\"");
          }
          out.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        return out;
      }
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto          field = text.substr(pos, end - pos);
        std::uint32_t value = 0;
        auto [ptr, ec]
            = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc()
            || ptr != field.data() + field.size()) {
          throw std::invalid_argument("bad letter \"" + std::string(field)
                                      + "\" in \"" + std::string(text) + "\"");
        }
        out.push_back(value);
        pos = end + 1;
      }
      return out;
    }

    template <typename T>
    std::string join_letters(std::vector<T> const& letters) {
      bool short_form
          = std::all_of(letters.begin(), letters.end(), [](T v) {
              return v <= 9;
            });
      std::string out;
      for (std::size_t j = 0; j < letters.size(); ++j) {
        if (!short_form && j > 0) {
          out += ',';
        }
        out += std::to_string(letters[j]);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(Monoid monoid, std::vector<Letter> letters)
      : _monoid(monoid), _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw std::invalid_argument("a word of T M must be nonempty");
    }
    for (Letter a : _letters) {
      _monoid.validate(a);
    }
  }

  Word Word::parse(Monoid monoid, std::string_view text) {
    return Word(monoid, parse_letters(text));
  }

  std::string Word::to_string() const {
    return join_letters(_letters);
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a._monoid <=> b._monoid; c != 0) {
      return c;
    }
    if (auto c = a._letters.size() <=> b._letters.size(); c != 0) {
      return c;
    }
    return a._letters <=> b._letters;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.to_string();
  }

  std::size_t WordHash::operator()(
      std::vector<Letter> const& letters) const noexcept {
    // FNV-1a over the letters
    std::uint64_t h = 14695981039346656037ULL;
    for (Letter a : letters) {
      h ^= a;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    std::size_t const  n = _images.size();
    std::vector<bool> seen(n + 1, false);
    if (n == 0) {
      throw std::invalid_argument("a permutation has degree at least 1");
    }
    for (auto v : _images) {
      if (v < 1 || v > n || seen[v]) {
        throw std::invalid_argument("not a permutation of [" + std::to_string(n)
                                    + "]: " + join_letters(_images));
      }
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t j = 0; j < degree; ++j) {
      images[j] = static_cast<std::uint32_t>(j + 1);
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::parse(std::string_view text) {
    return Permutation(parse_letters(text));
  }

  Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(_images.size());
    for (std::size_t j = 0; j < _images.size(); ++j) {
      inv[_images[j] - 1] = static_cast<std::uint32_t>(j + 1);
    }
    return Permutation(std::move(inv));
  }

  Permutation Permutation::compose(Permutation const& tau) const {
    if (tau.degree() != degree()) {
      throw std::invalid_argument("cannot compose permutations of degrees "
                                  + std::to_string(degree()) + " and "
                                  + std::to_string(tau.degree()));
    }
    std::vector<std::uint32_t> out(degree());
    for (std::size_t j = 0; j < degree(); ++j) {
      out[j] = _images[tau._images[j] - 1];
    }
    return Permutation(std::move(out));
  }

  bool Permutation::next() {
    return std::next_permutation(_images.begin(), _images.end());
  }

  std::string Permutation::to_string() const {
    return join_letters(_images);
  }

  std::ostream& operator<<(std::ostream& os, Permutation const& p) {
    return os << p.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Operad structure
  ////////////////////////////////////////////////////////////////////////

  void substitute_into(Monoid const&           m,
                       std::span<Letter const> x,
                       std::size_t             i,
                       std::span<Letter const> y,
                       std::vector<Letter>&    out) {
    out.clear();
    out.reserve(x.size() + y.size() - 1);
    out.insert(out.end(), x.begin(), x.begin() + (i - 1));
    Letter const xi = x[i - 1];
    for (Letter b : y) {
      out.push_back(m.combine_unchecked(xi, b));
    }
    out.insert(out.end(), x.begin() + i, x.end());
  }

  Word substitute(Word const& x, std::size_t i, Word const& y) {
    if (x.monoid() != y.monoid()) {
      throw std::invalid_argument("cannot substitute a word over "
                                  + y.monoid().name() + " into one over "
                                  + x.monoid().name());
    }
    if (i < 1 || i > x.arity()) {
      throw std::out_of_range("position " + std::to_string(i)
                              + " out of range for arity "
                              + std::to_string(x.arity()));
    }
    Letter const xi = x[i];
    if (x.monoid().kind() == MonoidKind::additive_naturals) {
      // checked path: combine() guards against overflow
      for (Letter b : y.letters()) {
        (void) x.monoid().combine(xi, b);
      }
    }
    std::vector<Letter> out;
    substitute_into(x.monoid(), x.letters(), i, y.letters(), out);
    return Word::make_unchecked(x.monoid(), std::move(out));
  }

  Word act(Word const& x, Permutation const& sigma) {
    if (sigma.degree() != x.arity()) {
      throw std::invalid_argument("permutation of degree "
                                  + std::to_string(sigma.degree())
                                  + " cannot act on a word of arity "
                                  + std::to_string(x.arity()));
    }
    std::vector<Letter> out(x.arity());
    for (std::size_t j = 1; j <= x.arity(); ++j) {
      out[j - 1] = x[sigma[j]];
    }
    return Word::make_unchecked(x.monoid(), std::move(out));
  }

  Word unit_element(Monoid const& m) {
    return Word::make_unchecked(m, {m.identity()});
  }

  Permutation perm_block_substitute(Permutation const& sigma,
                                    std::size_t        i,
                                    Permutation const& nu) {
    std::size_t const n = sigma.degree();
    std::size_t const m = nu.degree();
    if (i < 1 || i > n) {
      throw std::out_of_range("block position " + std::to_string(i)
                              + " out of range for degree "
                              + std::to_string(n));
    }
    std::uint32_t const pivot = sigma[i];
    auto shift = [&](std::uint32_t v) -> std::uint32_t {
      return v < pivot ? v : static_cast<std::uint32_t>(v + m - 1);
    };
    std::vector<std::uint32_t> out;
    out.reserve(n + m - 1);
    for (std::size_t j = 1; j < i; ++j) {
      out.push_back(shift(sigma[j]));
    }
    for (std::size_t j = 1; j <= m; ++j) {
      out.push_back(nu[j] + pivot - 1);
    }
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.push_back(shift(sigma[j]));
    }
    return Permutation(std::move(out));
  }

  Word lift_morphism(MonoidMorphism const& theta, Word const& x) {
    if (x.monoid() != theta.source()) {
      throw std::domain_error("word over " + x.monoid().name()
                              + " is not in the domain of " + theta.name());
    }
    std::vector<Letter> out;
    out.reserve(x.arity());
    for (Letter a : x.letters()) {
      out.push_back(theta.apply_unchecked(a));
    }
    return Word::make_unchecked(theta.target(), std::move(out));
  }

}  // namespace monoperad
