#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "critcross/rational.hpp"

namespace critcross {

/// Traversing-path letters of the H tile. P, Q, R and S carry an index 1..2w+1.
enum class PathLetter : std::uint8_t { A, B, C, D, E, F, G, P, Q, R, S };

inline constexpr std::array<PathLetter, 11> kAllPathLetters = {
    PathLetter::A, PathLetter::B, PathLetter::C, PathLetter::D, PathLetter::E, PathLetter::F,
    PathLetter::G, PathLetter::P, PathLetter::Q, PathLetter::R, PathLetter::S};

char letter_char(PathLetter letter);
bool is_indexed(PathLetter letter);

struct PathLabel {
  PathLetter letter;
  int index = 0;  // 0 for A..G

  friend auto operator<=>(const PathLabel&, const PathLabel&) = default;
  /// "A" or "P_3".
  std::string str() const;
};

struct PairOptions {
  /// Index of the S path that D (respectively E) does not pair with.
  int d_excluded_s = 1;
  int e_excluded_s = 1;
};

/// Valid twisted pairs of traversing paths for H_w. Each pair is stored once, as
/// (owner, partner), under the owner whose rule lists it.
class PairFamily {
 public:
  PairFamily(int w, std::vector<std::pair<PathLabel, PathLabel>> pairs);

  int w() const { return w_; }
  /// A..G followed by P_i, Q_i, R_i, S_i for i = 1..2w+1.
  std::vector<PathLabel> labels() const;
  const std::vector<std::pair<PathLabel, PathLabel>>& pairs() const { return pairs_; }
  /// Unordered membership test.
  bool valid(PathLabel a, PathLabel b) const;
  /// Number of pairs owned by paths with the given letter.
  std::size_t count_owned(PathLetter letter) const;

 private:
  int w_;
  std::vector<std::pair<PathLabel, PathLabel>> pairs_;
  std::set<std::pair<PathLabel, PathLabel>> unordered_;
};

/// Throws std::invalid_argument for w < 0, an excluded index outside 1..2w+1, or a
/// pair listed by two owners.
PairFamily pair_validity(int w, const PairOptions& options = {});

/// Closed-form number of pairs owned by `letter`.
BigInt pairs_closed_form(PathLetter letter, const BigInt& w);
/// 32w^2 + 56w + 31.
BigInt pairs_total_closed_form(const BigInt& w);

struct PairCountRow {
  PathLetter letter;
  BigInt closed_form;
  std::size_t enumerated = 0;
};

struct PairCounts {
  int w = 0;
  std::vector<PairCountRow> rows;
  BigInt closed_total;
  std::size_t enumerated_total = 0;

  bool consistent() const;
};

PairCounts pair_counts(int w, const PairOptions& options = {});

}  // namespace critcross
