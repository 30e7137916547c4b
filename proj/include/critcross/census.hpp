#pragma once

#include <ostream>
#include <string>

#include "critcross/rational.hpp"

namespace critcross {

/// Vertex counts by degree for graphs whose degrees all lie in 3..6.
struct DegreeCensus3456 {
  BigInt n3 = 0;
  BigInt n4 = 0;
  BigInt n5 = 0;
  BigInt n6 = 0;

  DegreeCensus3456() = default;
  DegreeCensus3456(BigInt d3, BigInt d4, BigInt d5, BigInt d6);

  BigInt total() const { return n3 + n4 + n5 + n6; }
  BigInt degree_sum() const { return 3 * n3 + 4 * n4 + 5 * n5 + 6 * n6; }

  friend bool operator==(const DegreeCensus3456&, const DegreeCensus3456&) = default;

  /// "(n3,n4,n5,n6)"
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const DegreeCensus3456& c);

/// (3 n3 + 4 n4 + 5 n5 + 6 n6) / (n3 + n4 + n5 + n6); throws on an empty census.
Rational average_degree(const DegreeCensus3456& census);

/// Census of a zip product taken at a degree-3 vertex of each operand.
DegreeCensus3456 zip3_census(const DegreeCensus3456& first, const DegreeCensus3456& second);

}  // namespace critcross
