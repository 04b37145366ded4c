#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folproof/proof.hpp"

namespace folproof {

// Diagnostics in the layout of the tactic error report: the goal in red, a
// numbered listing of the steps so far, the faulty step highlighted, then
// the location and the message. Without color, highlighted lines start
// with "> " instead of an escape sequence.
struct Style {
  bool color = true;
};

// Steps of `proof`; the step at `path` (outermost first) is highlighted and
// the subproofs along it are expanded.
std::string renderListing(const Proof& proof, const std::vector<int>& path, Style style);

// "file:line" of the deepest step along `path` that has a line, or "file".
std::string locate(const Proof& proof, const std::vector<int>& path, const std::string& file);

std::string renderCheckFailure(const Proof& proof, const CheckFailure& failure, const std::string& file,
                               Style style);

struct TacticFailure {
  Sequent goal;          // of the enclosing proof
  Proof steps;           // steps produced before the failure
  std::string source;    // text of the failing line
  std::string tactic;    // e.g. "Tautology"
  std::string location;  // "file:line"
  std::string message;
  std::optional<Sequent> blocking;
};

std::string renderTacticFailure(const TacticFailure& failure, Style style);

// Style from a --no-color flag and the FOLPROOF_NO_COLOR variable.
Style styleFromEnvironment(bool noColorFlag);

}  // namespace folproof
