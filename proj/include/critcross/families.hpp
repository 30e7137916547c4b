#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "critcross/census.hpp"
#include "critcross/check_report.hpp"
#include "critcross/multigraph.hpp"
#include "critcross/tile.hpp"

namespace critcross {

struct SParams {
  BigInt n, m, c;
};
struct HParams {
  BigInt w, s;
};
struct RParams {
  BigInt p, q;
};
struct GammaParams {
  BigInt n, m, c, w, s, p, q;

  SParams s_part() const { return {n, m, c}; }
  HParams h_part() const { return {w, s}; }
  RParams r_part() const { return {p, q}; }
};

/// Parameters outside a family's structural domain; carries the failing clauses.
class ConstraintViolation : public std::runtime_error {
 public:
  explicit ConstraintViolation(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// The explicit graph would exceed the vertex cap; the census is still available.
class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(DegreeCensus3456 census, std::uint64_t cap);
  const DegreeCensus3456& census() const { return census_; }

 private:
  DegreeCensus3456 census_;
};

inline constexpr std::uint64_t kDefaultSizeCap = 5'000'000;

/// Number of contractible thick edges in a join of m staircase tiles S_n: 2m(n-3).
BigInt thick_count(const BigInt& n, const BigInt& m);

// Censuses are defined on the structural domain (S: n >= 3, m >= 1,
// 0 <= c <= 2m(n-3); H: w >= 0, s >= 1; R: p >= 1, q >= 0). The stronger
// criticality constraints are reported separately by constraint_*.
DegreeCensus3456 census_s(const SParams& params);
DegreeCensus3456 census_h(const HParams& params);
DegreeCensus3456 census_r(const RParams& params);
DegreeCensus3456 census_gamma(const GammaParams& params);

BigInt crn_s(const BigInt& n);
BigInt crn_h(const BigInt& w);
BigInt crn_r(const BigInt& p, const BigInt& q);
BigInt crn_gamma(const GammaParams& params);

// Itemized clause checks. Inputs are rationals so integrality is a real clause.
CheckReport constraint_s(const Rational& n, const Rational& m, const Rational& c);
CheckReport constraint_h(const Rational& w, const Rational& s);
CheckReport constraint_r(const Rational& p, const Rational& q);
CheckReport constraint_gamma(const Rational& n, const Rational& m, const Rational& c, const Rational& w,
                             const Rational& s, const Rational& p, const Rational& q);
CheckReport constraint_gamma(const GammaParams& params);

struct ThickSelection {
  enum class Mode { kCanonical, kSeeded };
  Mode mode = Mode::kCanonical;
  std::uint64_t seed = 0;

  static ThickSelection canonical() { return {}; }
  static ThickSelection seeded(std::uint64_t seed) { return {Mode::kSeeded, seed}; }
};

struct BuildOptions {
  std::uint64_t size_cap = kDefaultSizeCap;
  /// 1-based position of the twisted staircase tile; must be odd. Defaults to
  /// default_twist_position(m).
  std::optional<std::uint64_t> twist_position;
  ThickSelection selection;
};

/// The odd position closest to the middle: 2*floor((m-1)/4) + 1.
std::uint64_t default_twist_position(std::uint64_t m);

/// S, S', ..., S', S'', S, S', ..., S' of length m with S'' at `twist_position`.
std::vector<TileKind> s_tile_sequence(int n, std::uint64_t m, std::uint64_t twist_position);
/// H, ..., H, H', H' of length s.
std::vector<TileKind> h_tile_sequence(int w, std::uint64_t s);

// Builders check the structural domain and the size cap, assert a simple result, and
// verify degree_census(result) against the census formula before returning.
Multigraph build_s(const SParams& params, const BuildOptions& options = {});
Multigraph build_h(const HParams& params, const BuildOptions& options = {});
Multigraph build_r(const RParams& params, const BuildOptions& options = {});
/// Zips S with H, then the result with R, each time at the lowest-id degree-3 vertices.
Multigraph build_gamma(const GammaParams& params, const BuildOptions& options = {});

}  // namespace critcross
