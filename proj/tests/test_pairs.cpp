#include <doctest.h>

#include <set>

#include "critcross/pairs.hpp"

using namespace critcross;

namespace {

PathLabel L(PathLetter l, int i = 0) { return {l, i}; }

std::vector<std::size_t> per_letter(const PairFamily& f) {
  std::vector<std::size_t> out;
  for (PathLetter l : kAllPathLetters) out.push_back(f.count_owned(l));
  return out;
}

}  // namespace

TEST_CASE("w = 0 counts") {
  const PairFamily f = pair_validity(0);
  CHECK(f.count_owned(PathLetter::A) == 8);
  CHECK(f.pairs().size() == 31);
  CHECK(pair_counts(0).closed_total == 31);
}

TEST_CASE("w = 1 per-letter counts") {
  const std::vector<std::size_t> expected{16, 15, 0, 13, 12, 1, 12, 18, 12, 12, 8};
  CHECK(per_letter(pair_validity(1)) == expected);
  CHECK(pair_validity(1).pairs().size() == 119);
}

TEST_CASE("w = 3 total") {
  CHECK(pair_validity(3).pairs().size() == 487);
  CHECK(pairs_total_closed_form(3) == 487);
}

TEST_CASE("closed forms equal enumeration for w up to 20") {
  for (int w = 0; w <= 20; ++w) {
    const PairCounts counts = pair_counts(w);
    CHECK(counts.consistent());
    CHECK(counts.enumerated_total == 32 * w * w + 56 * w + 31);
    BigInt sum = 0;
    for (PathLetter l : kAllPathLetters) sum += pairs_closed_form(l, w);
    CHECK(sum == pairs_total_closed_form(w));
    CHECK(pairs_closed_form(PathLetter::Q, w) == pairs_closed_form(PathLetter::R, w));
  }
}

TEST_CASE("relation details") {
  const int w = 2;
  const int top = 2 * w + 1;
  const PairFamily f = pair_validity(w);
  CHECK(f.labels().size() == 8 * static_cast<std::size_t>(w) + 11);
  CHECK_FALSE(f.valid(L(PathLetter::A), L(PathLetter::B)));
  CHECK(f.valid(L(PathLetter::C), L(PathLetter::A)));
  CHECK(f.valid(L(PathLetter::S, top), L(PathLetter::F)));
  CHECK_FALSE(f.valid(L(PathLetter::S, 1), L(PathLetter::F)));
  CHECK_FALSE(f.valid(L(PathLetter::D), L(PathLetter::S, 1)));
  CHECK(f.valid(L(PathLetter::D), L(PathLetter::S, 2)));
  CHECK_FALSE(f.valid(L(PathLetter::E), L(PathLetter::S, 1)));
  CHECK(f.valid(L(PathLetter::P, 2), L(PathLetter::S, 2)));
  CHECK_FALSE(f.valid(L(PathLetter::P, 2), L(PathLetter::P, 2)));
  CHECK(f.valid(L(PathLetter::S, 1), L(PathLetter::P, 3)));
  CHECK_FALSE(f.valid(L(PathLetter::S, 1), L(PathLetter::P, 2)));
  CHECK(f.count_owned(PathLetter::C) == 0);
  for (const auto& [a, b] : f.pairs()) CHECK_FALSE(a == L(PathLetter::S, top));
}

TEST_CASE("pairs are unique as unordered pairs") {
  for (int w = 0; w <= 6; ++w) {
    const PairFamily f = pair_validity(w);
    std::set<std::pair<PathLabel, PathLabel>> seen;
    for (const auto& [a, b] : f.pairs()) {
      CHECK(seen.insert(std::minmax(a, b)).second);
      CHECK(f.valid(a, b));
      CHECK(f.valid(b, a));
    }
  }
}

TEST_CASE("the excluded S index changes identity, not counts") {
  const PairFamily d3 = pair_validity(1, {3, 2});
  CHECK(d3.valid(L(PathLetter::D), L(PathLetter::S, 1)));
  CHECK_FALSE(d3.valid(L(PathLetter::D), L(PathLetter::S, 3)));
  CHECK_FALSE(d3.valid(L(PathLetter::E), L(PathLetter::S, 2)));
  CHECK(per_letter(d3) == per_letter(pair_validity(1)));
  CHECK_THROWS_AS(pair_validity(1, {4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pair_validity(-1), std::invalid_argument);
}

TEST_CASE("label rendering") {
  CHECK(L(PathLetter::P, 3).str() == "P_3");
  CHECK(L(PathLetter::G).str() == "G");
}
