#include "critcross/census.hpp"

#include <stdexcept>

namespace critcross {

DegreeCensus3456::DegreeCensus3456(BigInt d3, BigInt d4, BigInt d5, BigInt d6)
    : n3(std::move(d3)), n4(std::move(d4)), n5(std::move(d5)), n6(std::move(d6)) {
  if (n3 < 0 || n4 < 0 || n5 < 0 || n6 < 0) throw std::invalid_argument("negative census count");
}

std::string DegreeCensus3456::str() const {
  return "(" + n3.str() + "," + n4.str() + "," + n5.str() + "," + n6.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const DegreeCensus3456& c) { return os << c.str(); }

Rational average_degree(const DegreeCensus3456& census) {
  const BigInt vertices = census.total();
  if (vertices == 0) throw std::invalid_argument("empty census");
  return Rational(census.degree_sum(), vertices);
}

DegreeCensus3456 zip3_census(const DegreeCensus3456& first, const DegreeCensus3456& second) {
  if (first.n3 < 1 || second.n3 < 1) throw std::invalid_argument("no zip vertex");
  return {first.n3 + second.n3 - 2, first.n4 + second.n4, first.n5 + second.n5,
          first.n6 + second.n6};
}

}  // namespace critcross
