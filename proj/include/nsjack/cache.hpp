#ifndef NSJACK_CACHE_HPP
#define NSJACK_CACHE_HPP

#include <iosfwd>
#include <string>

#include "nsjack/jack.hpp"

namespace nsjack {

// Line-oriented table cache:
//
//   NSJACK 1
//   N=<int>
//   alpha=<num>/<den>
//   E <eta> := <coeff> * <exponents> ; <coeff> * <exponents> ; ...
//
// Records appear in ascending weight then lexicographic order; terms in
// lexicographically descending exponent order; rationals in lowest terms with
// the denominator omitted when 1 (alpha always carries its denominator).
// serialize(parse(text)) is byte-identical.

std::string serialize_table(const JackTable& table);
void write_table(const JackTable& table, const std::string& path);

JackTable parse_table(std::istream& in);
JackTable read_table(const std::string& path);

}  // namespace nsjack

#endif  // NSJACK_CACHE_HPP
