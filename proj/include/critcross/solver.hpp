#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "critcross/check_report.hpp"
#include "critcross/families.hpp"
#include "critcross/rational.hpp"

namespace critcross {

/// Precondition failure in the parameter pipeline. what() names the violated condition.
class SolverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Staircase parameters hitting average degree 3 + a/b for 0 < a < b, a + b odd.
/// Errors: "range" (not 0 < a < b), "parity" (a + b even), "t too small" (t < n^2).
SParams staircase_params_for_degree(const BigInt& a, const BigInt& b, const BigInt& t);
/// max(ceil((5b-a)/(2(b-a))), ceil((7a+b)/(4a)), 4)
BigInt staircase_min_n(const BigInt& a, const BigInt& b);

/// Floor divisions of (a, b):
///   b = bp*a + br, bp = 4*bpp + bpr, 4b = bb*(3b-a) + bbr.
struct DivisionChain {
  BigInt bp, br, bpp, bpr, bb, bbr;
};
/// Errors: "a >= 1 violated", "3b > a violated".
DivisionChain division_chain(const BigInt& a, const BigInt& b);

/// 8*bb*(4bb+7) + 5*(bpp+4)*(5bpp+12)
BigInt bound_N(const BigInt& a, const BigInt& b);

struct DerivationReport {
  BigInt a, b, k, t;
  DivisionChain chain;
  BigInt N;
  BigInt dividend;  // k - bpp(bpp+5)/2 - 8bb(4bb+7) - 34
  BigInt kp, kr;
  GammaParams params;
  BigInt crn;
  DegreeCensus3456 census;
  Rational average;
  CheckReport checks;

  bool all_pass() const { return checks.all_pass(); }
};

/// Errors: the division_chain errors, "k below threshold" (k <= N), "t too small" (t <= k).
DerivationReport derive_params(const BigInt& a, const BigInt& b, const BigInt& k, const BigInt& t);

/// f(x) = 240 + 512/(6-x)^2 + 224/(6-x) + 25/(16(x-3)^2) + 40/(x-3); throws
/// std::domain_error outside 3 < x < 6.
Rational bound_f(const Rational& x);
/// ceil(max(f(r1), f(r2))) for 3 < r1 <= r2 < 6. f is convex there, so the endpoints
/// dominate the interval.
BigInt interval_threshold(const Rational& r1, const Rational& r2);
/// (x, f(x)) for x = from, from+step, ... while x <= to.
std::vector<std::pair<Rational, Rational>> sample_bound(const Rational& from, const Rational& to,
                                                        const Rational& step);

}  // namespace critcross
