#ifndef LIEC_ERRORS_HPP
#define LIEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liec {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Raised when a solver-internal invariant fails. Unlike assert() these stay
// active in release builds; the CLI maps them to exit code 3.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

#define LIEC_ASSERT(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) throw ::liec::InternalError(std::string("internal: ") + (msg)); \
    } while (0)

} // namespace liec

#endif
