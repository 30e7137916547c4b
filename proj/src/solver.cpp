#include "critcross/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace critcross {

namespace {

BigInt ceil_div(const BigInt& num, const BigInt& den) { return Rational(num, den).ceil(); }

void check_equal(CheckReport& r, std::string clause, const BigInt& lhs, const BigInt& rhs) {
  r.add(std::move(clause), lhs == rhs, to_string(lhs), to_string(rhs));
}

void check_range(CheckReport& r, const std::string& name, const BigInt& x, const BigInt& below) {
  r.add("0 <= " + name + " < " + to_string(below), x >= 0 && x < below, to_string(x), to_string(below));
}

}  // namespace

BigInt staircase_min_n(const BigInt& a, const BigInt& b) {
  if (a <= 0 || a >= b) throw SolverError("range");
  return std::max({ceil_div(5 * b - a, 2 * (b - a)), ceil_div(7 * a + b, 4 * a), BigInt(4)});
}

SParams staircase_params_for_degree(const BigInt& a, const BigInt& b, const BigInt& t) {
  const BigInt n = staircase_min_n(a, b);
  if ((a + b) % 2 == 0) throw SolverError("parity");
  if (t < n * n) throw SolverError("t too small");
  const BigInt scale = 2 * t + 1;
  return {n, scale * (a + b), scale * ((4 * n - 7) * a - b)};
}

DivisionChain division_chain(const BigInt& a, const BigInt& b) {
  if (a < 1) throw SolverError("a >= 1 violated");
  if (3 * b <= a) throw SolverError("3b > a violated");
  DivisionChain c;
  auto [bp, br] = floor_divide(b, a);
  auto [bpp, bpr] = floor_divide(bp, 4);
  auto [bb, bbr] = floor_divide(4 * b, 3 * b - a);
  c.bp = bp;
  c.br = br;
  c.bpp = bpp;
  c.bpr = bpr;
  c.bb = bb;
  c.bbr = bbr;
  return c;
}

BigInt bound_N(const BigInt& a, const BigInt& b) {
  const DivisionChain c = division_chain(a, b);
  return 8 * c.bb * (4 * c.bb + 7) + 5 * (c.bpp + 4) * (5 * c.bpp + 12);
}

DerivationReport derive_params(const BigInt& a, const BigInt& b, const BigInt& k, const BigInt& t) {
  DerivationReport rep;
  rep.a = a;
  rep.b = b;
  rep.k = k;
  rep.t = t;
  rep.chain = division_chain(a, b);
  rep.N = bound_N(a, b);
  if (k <= rep.N) throw SolverError("k below threshold (k must exceed N = " + to_string(rep.N) + ")");
  if (t <= k) throw SolverError("t too small (t must exceed k)");

  const DivisionChain& c = rep.chain;
  rep.dividend = k - c.bpp * (c.bpp + 5) / 2 - 8 * c.bb * (4 * c.bb + 7) - 34;
  const BigInt kdiv = 2 * c.bpp + 5;
  auto [kp, kr] = floor_divide(rep.dividend, kdiv);
  rep.kp = kp;
  rep.kr = kr;

  GammaParams& p = rep.params;
  p.n = 4 + c.bpp;
  p.m = 2 * t * (27 * b - 9 * a - 4 * c.bbr) - 2 * kp + 3;
  p.c = 2 * kp - 12 * c.bpp - 6 * kr - 33;
  p.w = c.bb;
  p.s = 2 * t * (a * (4 * c.bpp + 9) - b);
  p.p = k - (c.bpp * (c.bpp + 23) / 2 + 8 * c.bb * (4 * c.bb + 7) + 4 * kr + 56);
  p.q = 2 * c.bpp + kr + 5;

  CheckReport& r = rep.checks;
  check_equal(r, "b = bp*a + br", b, c.bp * a + c.br);
  check_range(r, "br", c.br, a);
  check_equal(r, "bp = 4*bpp + bpr", c.bp, 4 * c.bpp + c.bpr);
  check_range(r, "bpr", c.bpr, 4);
  check_equal(r, "4b = bb*(3b-a) + bbr", 4 * b, c.bb * (3 * b - a) + c.bbr);
  check_range(r, "bbr", c.bbr, 3 * b - a);
  r.add("dividend > 0", rep.dividend > 0, to_string(rep.dividend), "0");
  check_equal(r, "dividend = kp*(2bpp+5) + kr", rep.dividend, kp * kdiv + kr);
  check_range(r, "kr", kr, kdiv);

  const CheckReport constraints = constraint_gamma(p);
  r.append(constraints);
  if (!constraints.all_pass()) return rep;  // census formulas need the structural domain

  rep.crn = crn_gamma(p);
  check_equal(r, "crn_gamma = k", rep.crn, k);
  rep.census = census_gamma(p);
  rep.average = average_degree(rep.census);
  const Rational target = 3 + Rational(a, b);
  r.add("average degree = 3 + a/b", rep.average == target, rep.average.str(), target.str());
  return rep;
}

Rational bound_f(const Rational& x) {
  if (x <= 3 || x >= 6) throw std::domain_error("bound_f: x must satisfy 3 < x < 6, got " + x.str());
  const Rational u = 6 - x;
  const Rational v = x - 3;
  return 240 + Rational(512) / (u * u) + Rational(224) / u + Rational(25) / (16 * v * v) + Rational(40) / v;
}

BigInt interval_threshold(const Rational& r1, const Rational& r2) {
  if (r1 > r2) throw std::domain_error("interval_threshold: need r1 <= r2");
  return std::max(bound_f(r1), bound_f(r2)).ceil();
}

std::vector<std::pair<Rational, Rational>> sample_bound(const Rational& from, const Rational& to,
                                                        const Rational& step) {
  if (step <= 0) throw std::domain_error("sample_bound: step must be positive");
  if (from > to) throw std::domain_error("sample_bound: need from <= to");
  std::vector<std::pair<Rational, Rational>> out;
  for (Rational x = from; x <= to; x += step) out.emplace_back(x, bound_f(x));
  return out;
}

}  // namespace critcross
