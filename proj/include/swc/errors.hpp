#ifndef SWC_ERRORS_HPP_
#define SWC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace swc {

  // Malformed or out-of-range input: bad type descriptor, bad letter, a move
  // that does not apply, a face that is not in the complex.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A configured search budget ran out.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace swc

#endif  // SWC_ERRORS_HPP_
