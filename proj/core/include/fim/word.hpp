#ifndef FIM_WORD_HPP_
#define FIM_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace fim {

  //! A signed generator: generator index plus a flag for the formal inverse.
  //!
  //! Letters are ordered by generator index first, then positive before
  //! inverse, so that with alphabet "ab" the order is a < A < b < B.
  struct Letter {
    std::uint8_t gen     = 0;
    bool         inverse = false;

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  constexpr Letter inverse(Letter l) noexcept {
    return Letter{l.gen, !l.inverse};
  }

  using Word = std::vector<Letter>;

  //! A finite alphabet X of generators written as distinct lowercase ASCII
  //! letters. The inverse of generator `c` is written as the uppercase letter.
  class Alphabet {
   public:
    //! Throws ParseError unless `generators` is a non-empty string of
    //! distinct lowercase letters.
    explicit Alphabet(std::string_view generators);

    std::size_t size() const noexcept {
      return _generators.size();
    }

    std::string const& generators() const noexcept {
      return _generators;
    }

    bool contains(char generator) const noexcept;

    // Letter for the symbol `c` (lowercase or uppercase); throws ParseError.
    Letter letter(char c) const;

    char symbol(Letter l) const;

    // Throws Error if some letter names a generator outside the alphabet.
    void validate(Word const& w) const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::string _generators;
  };

  //! Parses a word over `alphabet`. Whitespace is ignored, `1` denotes the
  //! empty word, and a letter may carry an exponent as in `a^5` or `B^2`.
  Word parse_word(Alphabet const& alphabet, std::string_view text);

  std::string to_string(Alphabet const& alphabet, Word const& w);

  //! The formal inverse: letters inverted, order reversed.
  Word formal_inverse(Word const& w);

  bool is_reduced(Word const& w) noexcept;

  //! Free reduction; the unique reduced word equal to `w` in FG(X).
  Word reduce(Word const& w);

  //! reduce(u ++ v) for reduced `u` and `v`, without materialising u ++ v.
  Word multiply_reduced(Word const& u, Word const& v);

  //! Deletes every letter whose generator is not `generator`. This is the
  //! retraction of FIM(X) onto the free monogenic inverse monoid on
  //! `generator`. Throws Error if `generator` is not in the alphabet.
  Word retract_to_monogenic(Alphabet const& alphabet,
                            Word const&     w,
                            char            generator);

  //! Length first, then lexicographic with respect to Letter's ordering.
  struct ShortLex {
    bool operator()(Word const& u, Word const& v) const noexcept;
  };

}  // namespace fim

#endif  // FIM_WORD_HPP_
