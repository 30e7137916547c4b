#pragma once

#include <string>
#include <vector>

namespace critcross {

/// One constraint clause with the exact values of both sides.
struct Clause {
  std::string clause;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::vector<Clause> clauses;

  void add(std::string clause, bool pass, std::string lhs, std::string rhs) {
    clauses.push_back({std::move(clause), pass, std::move(lhs), std::move(rhs)});
  }
  void append(const CheckReport& other) {
    clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
  }
  bool all_pass() const {
    for (const auto& c : clauses) {
      if (!c.pass) return false;
    }
    return true;
  }
  const Clause* first_failure() const {
    for (const auto& c : clauses) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }
};

}  // namespace critcross
