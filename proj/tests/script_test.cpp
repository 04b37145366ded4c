#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "folproof/proof_io.hpp"
#include "folproof/script.hpp"
#include "folproof/settheory.hpp"

using namespace folproof;

namespace {

const std::filesystem::path kCorpus = std::filesystem::path(FOLPROOF_SOURCE_DIR) / "corpus";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ScriptOutcome runFile(TheoryContext& ctx, const std::string& rel) {
  return runScript(ctx, slurp(kCorpus / rel), std::filesystem::path(rel).filename().string());
}

ScriptOutcome runText(const std::string& text, bool prelude = true) {
  TheoryContext ctx;
  if (prelude) loadSetTheory(ctx);
  return runScript(ctx, text, "t.fp");
}

std::string codeOf(const ScriptOutcome& r) { return r.ok() ? "ok" : r.error->code(); }

// Same steps, recursively, up to alpha-equivalence of formulas.
void expectSameProof(const Proof& a, const Proof& b) {
  ASSERT_EQ(a.imports, b.imports);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const ProofStep &x = a.steps[i], &y = b.steps[i];
    EXPECT_EQ(x.rule, y.rule) << i;
    EXPECT_EQ(x.conclusion, y.conclusion) << i;
    EXPECT_EQ(x.premises, y.premises) << i;
    EXPECT_EQ(printParams(x.params), printParams(y.params)) << i;
    ASSERT_EQ(static_cast<bool>(x.params.inner), static_cast<bool>(y.params.inner)) << i;
    if (x.params.inner) expectSameProof(*x.params.inner, *y.params.inner);
  }
}

}  // namespace

TEST(SetTheory, PreludeLoads) {
  TheoryContext ctx;
  loadSetTheory(ctx);
  for (const char* name : {"unionAxiom", "pairAxiom", "extensionalityAxiom", "powerAxiom", "foundationAxiom",
                           "infinityAxiom", "comprehensionSchema", "replacementSchema", "universeAxiom"})
    EXPECT_NO_THROW(ctx.getJustification(name)) << name;
  for (const char* f : {"uPair", "singleton", "union", "powerSet"}) EXPECT_TRUE(ctx.knowsFunction(f, f[0] == 'u' && f[1] == 'P' ? 2 : 1)) << f;
  EXPECT_TRUE(ctx.knowsPredicate("in", 2));
  EXPECT_TRUE(ctx.knowsPredicate("subset", 2));
  EXPECT_TRUE(ctx.constantNames().contains("emptySet"));
}

TEST(SetTheory, LoadingTwiceIsDuplicateName) {
  TheoryContext ctx;
  loadSetTheory(ctx);
  try {
    loadSetTheory(ctx);
    FAIL() << "second load succeeded";
  } catch (const TheoryError& e) {
    EXPECT_EQ(e.code(), TheoryErrorCode::DuplicateName);
  }
}

TEST(SetTheory, SchemasUseSchematicPredicates) {
  TheoryContext ctx;
  loadSetTheory(ctx);
  std::set<TermSymbol> terms;
  std::set<FormulaSymbol> formulas;
  collectSymbols(ctx.getJustification("comprehensionSchema").statement().right().front(), terms, formulas);
  EXPECT_TRUE(formulas.contains(schematicPredicate("phi", 2)));
}

TEST(Corpus, EveryEntryMeetsItsExpectation) {
  std::vector<CorpusResult> results = runCorpus(kCorpus.string());
  ASSERT_GE(results.size(), 10u);
  for (const CorpusResult& r : results) EXPECT_TRUE(r.passed()) << r.entry.path << ": " << r.actual << "\n" << r.detail;
}

TEST(Corpus, DefinitionsExposeOnlyTheWeakProperty) {
  TheoryContext ctx;
  loadSetTheory(ctx);
  ASSERT_TRUE(runFile(ctx, "positive/non_empty.fp").ok());
  ASSERT_TRUE(runFile(ctx, "positive/app.fp").ok());
  Signature sig{ctx.constantNames()};
  EXPECT_EQ(ctx.getJustification("nonEmpty").statement(), parseSequent("|- ~(nonEmpty = emptySet)", sig));
  EXPECT_EQ(ctx.getJustification("app").statement(),
            parseSequent("|- functional(f) /\\ in(x, dom(f)) => in(pair(x, app(f, x)), f)", sig));
  // The default value is not a consequence of anything the theory states.
  ScriptOutcome r = runScript(ctx, "theorem leak : |- app(f, x) = emptySet by restate(app)\n", "leak.fp");
  EXPECT_EQ(codeOf(r), "NotEquivalent");
}

TEST(Corpus, ProofsRoundTripThroughTheFileFormat) {
  int proofs = 0;
  for (const auto& dir : {"positive", "negative"})
    for (const auto& entry : std::filesystem::directory_iterator(kCorpus / dir)) {
      TheoryContext ctx;
      loadSetTheory(ctx);
      ScriptOutcome r = runScript(ctx, slurp(entry.path()), entry.path().filename().string());
      for (const ScriptItem& item : r.items) {
        if (!item.proof) continue;
        std::string text = printProof(*item.proof);
        Proof back = parseProofFile(text, "rt", Signature{ctx.constantNames()});
        expectSameProof(*item.proof, back);
        EXPECT_EQ(printProof(back), text);
        EXPECT_TRUE(checkProof(back).valid) << item.name;
        ++proofs;
      }
    }
  EXPECT_GE(proofs, 6);
}

TEST(Script, StructuredProofsBecomeSubproofSteps) {
  TheoryContext ctx;
  loadSetTheory(ctx);
  ScriptOutcome r = runFile(ctx, "positive/union_of_singleton.fp");
  ASSERT_TRUE(r.ok()) << r.error->report();
  const Proof& p = *r.items.back().proof;
  EXPECT_EQ(p.steps.back().conclusion, parseSequent("|- union(singleton(x)) = x", Signature{ctx.constantNames()}));
  int lines = 0;
  for (const ProofStep& s : p.steps) lines += s.line > 0;
  EXPECT_EQ(lines, static_cast<int>(p.steps.size()));
  EXPECT_EQ(p.imports.size(), 4u);  // pair, singleton, union, extensionality
}

TEST(Script, Errors) {
  EXPECT_EQ(codeOf(runText("axiom a : in(x, nothing(x))\n")), "UnknownSymbol");
  EXPECT_EQ(codeOf(runText("axiom pairAxiom : in(x, x)\n")), "DuplicateName");
  EXPECT_EQ(codeOf(runText("symbol fun union/1\n")), "DuplicateSymbol");
  EXPECT_EQ(codeOf(runText("theorem t : |- in(x, x) by tautology(noSuchFact)\n")), "NotFound");
  EXPECT_EQ(codeOf(runText("theorem t : |- in(x, x) by magic()\n")), "SyntaxError");
  EXPECT_EQ(codeOf(runText("theorem t : |- in(x, x)\nproof\n  have a : |- top by restate()\n")), "SyntaxError");
  EXPECT_EQ(codeOf(runText("theorem t : |- top\nproof\n  have a : |- top by restate()\n  have a : |- top by restate()\nqed\n")),
            "DuplicateName");
  EXPECT_EQ(codeOf(runText("theorem t : |- in(x, x) by tautology()\n")), "NotTautology");
  EXPECT_EQ(codeOf(runText("theorem t : |- top\nkernel\n0. Restate() : |- top\n2. Restate() : |- top\nqed\n")), "IndexGap");
  EXPECT_EQ(codeOf(runText("theorem t : |- top\nkernel uses pairAxiom\n0. Restate() : |- top\nqed\n")), "ImportMismatch");
  EXPECT_EQ(codeOf(runText("theorem t : |- in(x, x)\nkernel\n0. Restate() : |- top\nqed\n")), "ConclusionMismatch");
}

TEST(Script, SyntaxErrorsPointAtTheirToken) {
  ScriptOutcome r = runText("symbol fun f/1\n\naxiom a : in(x, f(x, ))\n", false);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error->code(), "SyntaxError");
  EXPECT_EQ(r.error->span().line, 3);
  EXPECT_EQ(r.error->span().column, 20);  // the dangling comma
  EXPECT_EQ(r.error->report().rfind("t.fp:3:20: SyntaxError", 0), 0u);
}

// Property: whatever the damage, a syntax error's span lies within the input.
TEST(Script, SyntaxErrorSpansLieWithinTheInput) {
  std::string text = slurp(kCorpus / "positive/union_of_singleton.fp");
  std::mt19937 rng(5);
  const std::string junk = "()[]{};:,.=~'|-/\\<>x ";
  int errors = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::string damaged = text;
    for (int k = 0; k < 3; ++k) {
      std::size_t at = rng() % damaged.size();
      damaged[at] = junk[rng() % junk.size()];
    }
    TheoryContext ctx;
    loadSetTheory(ctx);
    ScriptOutcome r = runScript(ctx, damaged, "d.fp");
    if (r.ok() || (r.error->code() != "SyntaxError" && r.error->code() != "IndexGap")) continue;
    ++errors;
    const SourceSpan& s = r.error->span();
    std::vector<std::string> lines;
    std::istringstream in(damaged);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    ASSERT_GE(s.line, 1);
    ASSERT_LE(s.line, static_cast<int>(lines.size()));
    ASSERT_GE(s.column, 1);
    ASSERT_LE(s.column + std::max(s.length, 1) - 1, static_cast<int>(lines[s.line - 1].size()) + 1) << damaged;
  }
  EXPECT_GT(errors, 50);
}
