#ifndef NSJACK_RATIONAL_HPP
#define NSJACK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsjack {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form the cache format
// requires.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// A denominator that is identically zero at the working alpha. The message
// names the offending factor.
class AlphaSingular : public std::runtime_error {
 public:
  explicit AlphaSingular(const std::string& what) : std::runtime_error(what) {}
};

// Triangular elimination left a nonzero residual; the input was not in the
// span of the generated basis. Always indicates an upstream bug.
class NotInSpan : public std::runtime_error {
 public:
  explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

class NonDivisible : public std::runtime_error {
 public:
  explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

class NotHomogeneous : public std::runtime_error {
 public:
  explicit NotHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

// "num/den" with "/den" omitted when den == 1.
std::string format_rational(const Rational& r);

// Accepts "num", "-num", "num/den". Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

}  // namespace nsjack

#endif  // NSJACK_RATIONAL_HPP
