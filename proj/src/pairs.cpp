#include "critcross/pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace critcross {

char letter_char(PathLetter letter) { return "ABCDEFGPQRS"[static_cast<int>(letter)]; }

bool is_indexed(PathLetter letter) { return letter >= PathLetter::P; }

std::string PathLabel::str() const {
  std::string out(1, letter_char(letter));
  if (is_indexed(letter)) out += "_" + std::to_string(index);
  return out;
}

PairFamily::PairFamily(int w, std::vector<std::pair<PathLabel, PathLabel>> pairs)
    : w_(w), pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    if (a == b) throw std::invalid_argument("path paired with itself: " + a.str());
    if (!unordered_.insert(std::minmax(a, b)).second) {
      throw std::invalid_argument("pair listed twice: " + a.str() + " " + b.str());
    }
  }
}

std::vector<PathLabel> PairFamily::labels() const {
  std::vector<PathLabel> out;
  for (PathLetter l : kAllPathLetters) {
    if (!is_indexed(l)) out.push_back({l, 0});
  }
  for (PathLetter l : {PathLetter::P, PathLetter::Q, PathLetter::R, PathLetter::S}) {
    for (int i = 1; i <= 2 * w_ + 1; ++i) out.push_back({l, i});
  }
  return out;
}

bool PairFamily::valid(PathLabel a, PathLabel b) const { return unordered_.count(std::minmax(a, b)) > 0; }

std::size_t PairFamily::count_owned(PathLetter letter) const {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(), [letter](const auto& p) { return p.first.letter == letter; }));
}

PairFamily pair_validity(int w, const PairOptions& options) {
  if (w < 0) throw std::invalid_argument("w must be nonnegative");
  const int top = 2 * w + 1;
  for (int x : {options.d_excluded_s, options.e_excluded_s}) {
    if (x < 1 || x > top) throw std::invalid_argument("excluded S index out of range 1.." + std::to_string(top));
  }
  using L = PathLetter;
  std::vector<std::pair<PathLabel, PathLabel>> pairs;
  auto add = [&](PathLabel a, PathLabel b) { pairs.emplace_back(a, b); };
  auto add_indexed = [&](PathLabel owner, std::initializer_list<L> letters, int from, int skip_s = 0) {
    for (L l : letters) {
      for (int j = from; j <= top; ++j) {
        if (l == L::S && j == skip_s) continue;
        add(owner, {l, j});
      }
    }
  };
  const PathLabel a{L::A}, b{L::B}, d{L::D}, e{L::E}, f{L::F}, g{L::G};

  for (L l : {L::C, L::D, L::E, L::G}) add(a, {l});
  add_indexed(a, {L::P, L::Q, L::R, L::S}, 1);
  for (L l : {L::D, L::E, L::G}) add(b, {l});
  add_indexed(b, {L::P, L::Q, L::R, L::S}, 1);
  add(d, {L::F});
  add(d, {L::G});
  add_indexed(d, {L::P, L::Q, L::R, L::S}, 1, options.d_excluded_s);
  add(e, {L::G});
  add_indexed(e, {L::P, L::Q, L::R, L::S}, 1, options.e_excluded_s);
  add(f, {L::S, top});
  add_indexed(g, {L::P, L::Q, L::R, L::S}, 1);

  for (int i = 1; i <= top; ++i) {
    add_indexed({L::P, i}, {L::R, L::S}, i);
    add_indexed({L::P, i}, {L::P, L::Q}, i + 1);
    add_indexed({L::Q, i}, {L::P, L::Q, L::R, L::S}, i + 1);
    add_indexed({L::R, i}, {L::P, L::Q, L::R, L::S}, i + 1);
    if (i < top) {
      add_indexed({L::S, i}, {L::R, L::S}, i + 1);
      add_indexed({L::S, i}, {L::P, L::Q}, i + 2);
    }
  }
  return PairFamily(w, std::move(pairs));
}

BigInt pairs_closed_form(PathLetter letter, const BigInt& w) {
  switch (letter) {
    case PathLetter::A: return 8 * (1 + w);
    case PathLetter::B: return 7 + 8 * w;
    case PathLetter::C: return 0;
    case PathLetter::D: return 5 + 8 * w;
    case PathLetter::E: return 4 + 8 * w;
    case PathLetter::F: return 1;
    case PathLetter::G: return 4 * (1 + 2 * w);
    case PathLetter::P: return 2 * (1 + 2 * w) * (1 + 2 * w);
    case PathLetter::Q:
    case PathLetter::R: return 4 * w * (1 + 2 * w);
    case PathLetter::S: return 8 * w * w;
  }
  throw std::logic_error("unknown path letter");
}

BigInt pairs_total_closed_form(const BigInt& w) { return 32 * w * w + 56 * w + 31; }

bool PairCounts::consistent() const {
  BigInt sum = 0;
  for (const auto& row : rows) {
    if (row.closed_form != row.enumerated) return false;
    sum += row.closed_form;
  }
  return sum == closed_total && closed_total == enumerated_total;
}

PairCounts pair_counts(int w, const PairOptions& options) {
  const PairFamily family = pair_validity(w, options);
  PairCounts out;
  out.w = w;
  for (PathLetter l : kAllPathLetters) {
    out.rows.push_back({l, pairs_closed_form(l, w), family.count_owned(l)});
  }
  out.closed_total = pairs_total_closed_form(w);
  out.enumerated_total = family.pairs().size();
  return out;
}

}  // namespace critcross
