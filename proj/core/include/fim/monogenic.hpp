#ifndef FIM_MONOGENIC_HPP_
#define FIM_MONOGENIC_HPP_

// The free monogenic inverse monoid M = FIM({x}) with y = x^-1.
//
// An element of M is a Munn tree inside the Cayley graph of Z, i.e. an
// interval [a, b] containing the in-vertex 0 together with an out-vertex t.

#include <compare>      // for strong_ordering
#include <cstdint>      // for uint8_t
#include <iosfwd>       // for ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <tuple>        // for tuple
#include <vector>       // for vector

#include "fim/report.hpp"

namespace fim::mono {

  enum class Gen : std::uint8_t { x, y };

  constexpr Gen inverse(Gen g) noexcept {
    return g == Gen::x ? Gen::y : Gen::x;
  }

  constexpr char symbol(Gen g) noexcept {
    return g == Gen::x ? 'x' : 'y';
  }

  inline constexpr Gen generators[] = {Gen::x, Gen::y};

  using MonoWord = std::vector<Gen>;

  //! Accepts raw letter strings ("xxy") and exponent syntax ("x^2 y");
  //! `1` is the empty word. Throws ParseError on any letter other than x, y.
  MonoWord parse_word(std::string_view text);

  //! Plain letters, e.g. "xxy"; the empty word is "".
  std::string to_letters(MonoWord const& w);

  //! Exponent syntax with runs collapsed, e.g. "x^2 y^1"; the empty word is
  //! "1".
  std::string to_exponent_string(MonoWord const& w);

  //! All words of length exactly `length`, x before y.
  std::vector<MonoWord> all_words(std::size_t length);

  //! Element of M as (leftmost vertex, rightmost vertex, out-vertex).
  struct Interval {
    int a = 0;
    int b = 0;
    int t = 0;

    //! Throws Error unless a <= 0 <= b and a <= t <= b.
    static Interval make(int a, int b, int t);

    static constexpr Interval identity() noexcept {
      return Interval{};
    }

    constexpr bool valid() const noexcept {
      return a <= 0 && 0 <= b && a <= t && t <= b;
    }

    //! Number of edges of the Munn tree.
    constexpr int size() const noexcept {
      return b - a;
    }

    friend constexpr bool operator==(Interval const&, Interval const&)
        = default;

    //! Canonical order: size, then a, then t.
    friend constexpr std::strong_ordering operator<=>(Interval const& l,
                                                      Interval const& r) {
      return std::tuple(l.size(), l.a, l.t) <=> std::tuple(r.size(), r.a, r.t);
    }
  };

  std::string to_string(Interval const& m);
  std::ostream& operator<<(std::ostream& os, Interval const& m);

  enum class NfType : std::uint8_t { I, II };

  //! Type I: x^n y^k with 0 <= k <= n (no edge left of the in-vertex).
  //! Type II: x^n y^k x^j with 0 <= n < k and 0 <= j <= k.
  struct NormalForm {
    NfType type = NfType::I;
    int    n    = 0;
    int    k    = 0;
    int    j    = 0;

    //! These throw Error if the parameters violate the constraints above.
    static NormalForm type_i(int n, int k);
    static NormalForm type_ii(int n, int k, int j);

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  //! e.g. "x^5 y^3", "x^4 y^6 x^3", "y^1 x^1"; zero exponents are omitted and
  //! the identity is "1". Parsing the string yields the same element.
  std::string to_string(NormalForm const& f);
  std::ostream& operator<<(std::ostream& os, NormalForm const& f);

  Interval eval_word(MonoWord const& w);

  NormalForm normal_form(Interval const& m);

  MonoWord nf_word(NormalForm const& f);

  //! Element represented by `f` without spelling out the word.
  Interval to_interval(NormalForm const& f);

  //! Shorthand for to_string(normal_form(m)).
  std::string nf_string(Interval const& m);

  //! Parses a word in either syntax and evaluates it.
  Interval parse_element(std::string_view text);

  constexpr Interval generator(Gen g) noexcept {
    return g == Gen::x ? Interval{0, 1, 1} : Interval{-1, 0, -1};
  }

  //! Product in M: union of the first interval with the second translated to
  //! the first out-vertex.
  constexpr Interval operator*(Interval const& l, Interval const& r) noexcept {
    return Interval{l.a < l.t + r.a ? l.a : l.t + r.a,
                    l.b > l.t + r.b ? l.b : l.t + r.b,
                    l.t + r.t};
  }

  constexpr Interval left_mult(Gen z, Interval const& m) noexcept {
    return generator(z) * m;
  }

  constexpr Interval right_mult(Interval const& m, Gen z) noexcept {
    return m * generator(z);
  }

  //! Normal form of the normal-form word of `f` with its last letter
  //! removed. Throws Error for the identity.
  NormalForm nf_parent(NormalForm const& f);

  //! All elements of size at most `max_size`, in canonical order.
  std::vector<Interval> enumerate_ball(int max_size);

  //! Number of elements of size at most `max_size`: sum of (s+1)^2.
  long long ball_count(int max_size) noexcept;

  //! Checks, for all admissible parameters up to `n_max`,
  //!   (1) x^n y^k x^(k+1) = x^(n+1) y^(k+1) x^(k+1)   for k > n,
  //!   (2) y x^n y^k = x^(n-1) y^n x^(n-k)             for n >= 1, k <= n,
  //!   (3) y x^n y^k = x^(n-1) y^k                     for 0 < n < k,
  //! by evaluating both sides.
  VerificationReport verify_identities(int n_max);

  //! Checks that normal forms are a prefix-closed transversal: the map
  //! m -> nf_word(normal_form(m)) is a bijection from the ball of size
  //! `max_size` onto the normal-form words of those elements, every prefix
  //! of such a word is itself a normal-form word, and every word of length
  //! at most `max_length` agrees with the normal form of its value. Throws
  //! Error unless max_length >= max_size.
  VerificationReport verify_normal_forms(int max_size, int max_length);

}  // namespace fim::mono

#endif  // FIM_MONOGENIC_HPP_
