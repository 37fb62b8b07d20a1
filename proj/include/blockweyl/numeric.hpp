/*
  This is numeric.hpp — exact scalar arithmetic and error primitives.

  Everything in blockweyl computes over exact integers and rationals;
  no floating point is used anywhere in the library.
*/

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockweyl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/******** error idiom ********************************************************

  Three error families, mirrored by the command-line tool's exit codes:

  - ParseError      : malformed descriptors, weights, or flags.
  - Unsupported     : a computation the library deliberately refuses
                      (missing data route, out-of-catalog type).
  - InvariantError  : an internal cross-check failed; always a bug or
                      corrupted data, never a user error.

******************************************************************************/

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

/* Throws InvariantError when cond is false. Used for internal cross-checks. */
inline void require(bool cond, const std::string& msg)
{
  if (!cond)
    throw InvariantError(msg);
}

/* gcd on big integers, always non-negative */
inline Int gcdInt(Int a, Int b)
{
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace blockweyl
