#ifndef FIM_SYNTAX_HPP_
#define FIM_SYNTAX_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

namespace fim {

  //! Expands the shared word syntax into a plain string of letter symbols.
  //!
  //! Whitespace is skipped, the token `1` stands for the empty word and any
  //! other character is a letter that may be followed by `^` and a decimal
  //! exponent (`x^5y^3`, `x^0 y^1 x^1`). Letters are not validated here.
  //! Throws ParseError on a dangling or malformed exponent.
  std::string expand_word_syntax(std::string_view text);

}  // namespace fim

#endif  // FIM_SYNTAX_HPP_
