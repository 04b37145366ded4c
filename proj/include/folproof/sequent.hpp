#pragma once

#include <initializer_list>
#include <vector>

#include "folproof/syntax.hpp"

namespace folproof {

// Gamma |- Delta with both sides kept sorted and free of duplicates.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> left, std::vector<Formula> right);

  const std::vector<Formula>& left() const { return left_; }
  const std::vector<Formula>& right() const { return right_; }

  bool leftContains(const Formula& f) const;
  bool rightContains(const Formula& f) const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend auto operator<=>(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> left_, right_;
};

// Conjunction of the left side implies disjunction of the right side.
Formula interpretation(const Sequent& s);
std::set<std::string> freeVariables(const Sequent& s);

}  // namespace folproof
