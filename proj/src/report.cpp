#include "folproof/report.hpp"

#include <algorithm>
#include <cstdlib>

#include "folproof/text.hpp"

namespace folproof {

namespace {

constexpr const char* kRed = "\x1b[31m";
constexpr const char* kReset = "\x1b[0m";

std::string highlight(const std::string& line, Style style) {
  return style.color ? kRed + line + kReset : "> " + line;
}

void listing(const Proof& proof, const std::vector<int>& path, std::size_t depth, Style style, std::string& out) {
  std::size_t width = 0;
  for (const ProofStep& s : proof.steps) width = std::max(width, ruleName(s.rule).size());
  std::string indent(2 + 2 * depth, ' ');
  int mark = depth < path.size() ? path[depth] : -1;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    std::string name(ruleName(s.rule));
    name.resize(width, ' ');
    std::string line = std::to_string(i) + " " + name + " " + printSequent(s.conclusion);
    if (static_cast<int>(i) == mark) {
      out += (style.color ? indent : indent.substr(2)) + highlight(line, style) + "\n";
      if (s.rule == Rule::Subproof && s.params.inner && depth + 1 < path.size())
        listing(*s.params.inner, path, depth + 1, style, out);
    } else {
      out += indent + line + "\n";
    }
  }
}

}  // namespace

std::string renderListing(const Proof& proof, const std::vector<int>& path, Style style) {
  std::string out;
  listing(proof, path, 0, style, out);
  return out;
}

std::string locate(const Proof& proof, const std::vector<int>& path, const std::string& file) {
  int line = 0;
  const Proof* p = &proof;
  for (int i : path) {
    if (!p || i < 0 || i >= static_cast<int>(p->steps.size())) break;
    const ProofStep& s = p->steps[static_cast<std::size_t>(i)];
    if (s.line > 0) line = s.line;
    p = s.params.inner.get();
  }
  return line > 0 ? file + ":" + std::to_string(line) : file;
}

std::string renderCheckFailure(const Proof& proof, const CheckFailure& failure, const std::string& file,
                               Style style) {
  std::string out;
  if (!proof.steps.empty()) {
    std::string goal = printSequent(proof.steps.back().conclusion);
    out += (style.color ? std::string(kRed) + goal + kReset : goal) + "\n";
  }
  out += renderListing(proof, failure.path, style);
  std::string where;
  for (std::size_t i = 0; i < failure.path.size(); ++i) where += (i ? "." : "") + std::to_string(failure.path[i]);
  out += "\nProof step " + where + " (" + locate(proof, failure.path, file) + ") did not check:\n";
  out += "   " + std::string(errorName(failure.code)) + ": " + failure.message + "\n";
  return out;
}

std::string renderTacticFailure(const TacticFailure& f, Style style) {
  std::string goal = printSequent(f.goal);
  std::string out = (style.color ? std::string(kRed) + goal + kReset : goal) + "\n";
  out += renderListing(f.steps, {}, style);
  out += (style.color ? "  " : "") + highlight(f.source, style) + "\n";
  out += "\nProof tactic " + f.tactic + " used in (" + f.location + ") did not succeed:\n";
  out += "   " + f.message + "\n";
  if (f.blocking) {
    out += "   The proof search needs the truth of the following sequent:\n";
    out += "   " + printSequent(*f.blocking) + "\n";
  }
  return out;
}

Style styleFromEnvironment(bool noColorFlag) {
  const char* env = std::getenv("FOLPROOF_NO_COLOR");
  return Style{!noColorFlag && !(env && *env)};
}

}  // namespace folproof
