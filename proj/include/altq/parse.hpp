#ifndef ALTQ_PARSE_HPP
#define ALTQ_PARSE_HPP

#include <string>

#include "altq/ratfunc.hpp"

namespace altq {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Small expression grammar over exact scalars: rationals, q, s, + - * /,
// integer powers with ^, parentheses, unary minus.  Examples: "q^2",
// "-q^-1", "3/2", "(q+q^-1)^2/4".
RatFuncQ parse_scalar(const std::string& text);

// Spin given as "1/2", "1", "3/2", ... returned as 2j.
long parse_two_j(const std::string& text);

}  // namespace altq

#endif
