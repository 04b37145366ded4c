#pragma once

#include <string>
#include <string_view>

#include "folproof/proof.hpp"
#include "folproof/text.hpp"

namespace folproof {

// Step or import numbers that are not consecutive.
class IndexGap : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Proof file layout:
//
//   folproof v1                        optional header
//   const a b                          nullary constant symbols
//   import -1 : <sequent>              imports, numbered -1, -2, ...
//   0. Rule(premises) {k=v; ...} : <sequent>
//   3. Subproof(0, -1) : <sequent>
//   begin                              the inner proof of the step above
//     ...
//   end
//
// Parameter keys: phi psi ctx a b (formulas), s t (terms), x (variable),
// hole ('name), terms=[x -> t, 'f(v) -> t], formulas=['P(v) -> f, 'C['p] -> f].
Proof parseProofFile(std::string_view text, const std::string& file = "<input>", Signature sig = {});

std::string printProof(const Proof& proof);
// One line per step, as in a proof file, without header or subproof bodies.
std::string printStep(int index, const ProofStep& step);

// Parameter block (with braces) of a step, or "" when there is none.
std::string printParams(const StepParams& p);

// Parses the contents of a `{...}` block (after the brace) up to and
// including the closing brace.
StepParams parseParams(text::Parser& p);

}  // namespace folproof
