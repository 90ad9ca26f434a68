#pragma once

#include <stdexcept>
#include <string>

namespace epichain {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed textual or JSON input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An input exceeds a hard size cap (Bell-number or m^(m*m) growth).
  class SizeGuardError : public Error {
   public:
    using Error::Error;
  };

}  // namespace epichain
