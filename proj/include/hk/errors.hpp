#ifndef HK_ERRORS_HPP_
#define HK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hk {

  // Base of every exception thrown by the library. The CLI maps the
  // subclasses onto exit codes: input errors exit 2, violated mathematical
  // hypotheses exit 1.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class SyntaxError : public Error {
   public:
    using Error::Error;
  };

  // Loop or antiparallel pair in a graph description.
  class NotOriented : public Error {
   public:
    using Error::Error;
  };

  class LayerOutOfRange : public Error {
   public:
    using Error::Error;
  };

  // A reduced word in some M~_i whose s_i-occurrences do not form a single
  // consecutive run. Never expected; tests treat it as a hard failure.
  class MalformedElement : public Error {
   public:
    using Error::Error;
  };

  class NotInSets : public Error {
   public:
    using Error::Error;
  };

  class NotSquare : public Error {
   public:
    using Error::Error;
  };

  class NotPI : public Error {
   public:
    using Error::Error;
  };

  class NotSourceOrSink : public Error {
   public:
    using Error::Error;
  };

}  // namespace hk

#endif  // HK_ERRORS_HPP_
