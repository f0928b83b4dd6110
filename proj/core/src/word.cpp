#include "fim/word.hpp"

#include <algorithm>  // for lexicographical_compare
#include <cctype>     // for isdigit, isspace, islower
#include <charconv>   // for from_chars

#include "fim/error.hpp"
#include "fim/syntax.hpp"

namespace fim {

  namespace {
    constexpr std::size_t max_exponent = 1'000'000;

    bool is_lower(char c) {
      return c >= 'a' && c <= 'z';
    }

    bool is_upper(char c) {
      return c >= 'A' && c <= 'Z';
    }

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }
  }  // namespace

  std::string expand_word_syntax(std::string_view text) {
    std::string result;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
    };
    while (true) {
      skip_space();
      if (i == text.size()) {
        break;
      }
      char c = text[i++];
      if (c == '^') {
        throw ParseError("exponent without a letter in \"" + std::string(text)
                         + "\"");
      }
      if (c == '1') {
        continue;
      }
      if (is_digit(c)) {
        throw ParseError("unexpected digit '" + std::string(1, c) + "' in \""
                         + std::string(text) + "\"");
      }
      std::size_t exponent = 1;
      skip_space();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_space();
        std::size_t start = i;
        while (i < text.size() && is_digit(text[i])) {
          ++i;
        }
        if (start == i) {
          throw ParseError("missing exponent after '^' in \""
                           + std::string(text) + "\"");
        }
        auto [ptr, ec] = std::from_chars(text.data() + start,
                                         text.data() + i,
                                         exponent);
        if (ec != std::errc() || exponent > max_exponent) {
          throw ParseError("exponent out of range in \"" + std::string(text)
                           + "\"");
        }
      }
      result.append(exponent, c);
    }
    return result;
  }

  Alphabet::Alphabet(std::string_view generators) : _generators(generators) {
    if (_generators.empty()) {
      throw ParseError("the alphabet must be non-empty");
    }
    if (_generators.size() > 26) {
      throw ParseError("an alphabet has at most 26 generators");
    }
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      char c = _generators[i];
      if (!is_lower(c)) {
        throw ParseError("generators must be lowercase letters, found '"
                         + std::string(1, c) + "'");
      }
      if (_generators.find(c) != i) {
        throw ParseError("duplicate generator '" + std::string(1, c) + "'");
      }
    }
  }

  bool Alphabet::contains(char generator) const noexcept {
    return is_lower(generator)
           && _generators.find(generator) != std::string::npos;
  }

  Letter Alphabet::letter(char c) const {
    bool inv   = is_upper(c);
    char lower = inv ? static_cast<char>(c - 'A' + 'a') : c;
    if (!is_lower(lower)) {
      throw ParseError("invalid letter '" + std::string(1, c) + "'");
    }
    auto pos = _generators.find(lower);
    if (pos == std::string::npos) {
      throw ParseError("unknown generator '" + std::string(1, c)
                       + "' for alphabet \"" + _generators + "\"");
    }
    return Letter{static_cast<std::uint8_t>(pos), inv};
  }

  char Alphabet::symbol(Letter l) const {
    if (l.gen >= _generators.size()) {
      throw Error("generator index " + std::to_string(l.gen)
                  + " is outside the alphabet \"" + _generators + "\"");
    }
    char c = _generators[l.gen];
    return l.inverse ? static_cast<char>(c - 'a' + 'A') : c;
  }

  void Alphabet::validate(Word const& w) const {
    for (auto const& l : w) {
      symbol(l);
    }
  }

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    Word result;
    for (char c : expand_word_syntax(text)) {
      result.push_back(alphabet.letter(c));
    }
    return result;
  }

  std::string to_string(Alphabet const& alphabet, Word const& w) {
    std::string result;
    result.reserve(w.size());
    for (auto const& l : w) {
      result.push_back(alphabet.symbol(l));
    }
    return result;
  }

  Word formal_inverse(Word const& w) {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(inverse(*it));
    }
    return result;
  }

  bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == inverse(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  Word reduce(Word const& w) {
    Word stack;
    stack.reserve(w.size());
    for (auto const& l : w) {
      if (!stack.empty() && stack.back() == inverse(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return stack;
  }

  Word multiply_reduced(Word const& u, Word const& v) {
    std::size_t cancel = 0;
    while (cancel < u.size() && cancel < v.size()
           && u[u.size() - 1 - cancel] == inverse(v[cancel])) {
      ++cancel;
    }
    Word result(u.begin(), u.end() - static_cast<std::ptrdiff_t>(cancel));
    result.insert(
        result.end(), v.begin() + static_cast<std::ptrdiff_t>(cancel), v.end());
    return result;
  }

  Word retract_to_monogenic(Alphabet const& alphabet,
                            Word const&     w,
                            char            generator) {
    if (!alphabet.contains(generator)) {
      throw Error("generator '" + std::string(1, generator)
                  + "' is not in the alphabet \"" + alphabet.generators()
                  + "\"");
    }
    auto  gen = alphabet.letter(generator).gen;
    Word  result;
    for (auto const& l : w) {
      if (l.gen == gen) {
        result.push_back(l);
      }
    }
    return result;
  }

  bool ShortLex::operator()(Word const& u, Word const& v) const noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

}  // namespace fim
