#ifndef POWERMONOID_LITERAL_HPP
#define POWERMONOID_LITERAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "powermonoid/finset.hpp"

namespace powermonoid {

// Thrown on malformed set literals. `token()` is the offending piece of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Accepts `{INT(,INT)*}` or the interval shorthand `INT..INT`. Whitespace
// around tokens is ignored.
FinSet parse_set(std::string_view text);
Int parse_int(std::string_view text);

// Canonical form: `{-1,0,2}`.
std::string to_string(const FinSet& x);

}  // namespace powermonoid

#endif  // POWERMONOID_LITERAL_HPP
