#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folproof/proof.hpp"
#include "folproof/report.hpp"
#include "folproof/text.hpp"
#include "folproof/theory.hpp"

namespace folproof {

// Theory scripts, one item per line unless a block follows:
//
//   symbol fun union/1                 symbol pred in/2
//   axiom name : <formula>
//   defpred subset(x, y) := <formula>
//   deffun f(x) = y such that <formula> witness <theorem> [exposing <formula>]
//   theorem name : <sequent> by <tactic>(<args>)
//   theorem name : <sequent>
//   proof                              structured proof, see below
//     have n : <sequent> by <tactic or kernel rule>(<facts>) [{params}]
//     have n by substitution(...)      conclusion inferred
//     have n : <sequent> subproof
//       ...
//     end
//   qed
//   theorem name : <sequent>
//   kernel [uses a, b]                 a proof file, imports justified by a, b
//     ...
//   qed
//
// Facts are names of earlier steps (of this block or an enclosing one) or of
// theory justifications, optionally instantiated: `pairAxiom of (y -> x)`.
// Tactics: tautology, restate, substitution, instantiate. An equation
// argument of substitution may be prefixed with `ltr` or `rtl`.
struct ScriptItem {
  enum class Kind { SymbolDecl, AxiomDecl, TheoremDecl, PredicateDef, FunctionDef };
  Kind kind;
  std::string name;
  int line = 0;
  std::optional<Sequent> statement;
  std::optional<Proof> proof;  // theorems only
};

std::string_view scriptItemKindName(ScriptItem::Kind k);

class ScriptError : public std::runtime_error {
 public:
  // `code` is "SyntaxError", "IndexGap", a theory error name or a tactic
  // error name; `report` is the rendered diagnostic.
  ScriptError(std::string code, SourceSpan span, std::string message, std::string report)
      : std::runtime_error(std::move(message)),
        code_(std::move(code)),
        span_(std::move(span)),
        report_(std::move(report)) {}
  const std::string& code() const { return code_; }
  const SourceSpan& span() const { return span_; }
  const std::string& report() const { return report_; }

 private:
  std::string code_;
  SourceSpan span_;
  std::string report_;
};

struct ScriptOutcome {
  std::vector<ScriptItem> items;  // completed items, in order
  std::optional<ScriptError> error;
  bool ok() const { return !error; }
};

// Runs the items in order against `ctx`, stopping at the first error.
ScriptOutcome runScript(TheoryContext& ctx, std::string_view text, const std::string& file = "<script>",
                        Style style = {false});

}  // namespace folproof
