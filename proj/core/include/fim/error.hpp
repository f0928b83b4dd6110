#ifndef FIM_ERROR_HPP_
#define FIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fim {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when a word, normal form, or edge specification cannot be parsed.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace fim

#endif  // FIM_ERROR_HPP_
