// Command-line front end: check, norm, equiv, taut, theory run, corpus.
// Exit codes: 0 success, 1 check or tactic failure, 2 syntax error, 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "folproof/fol2.hpp"
#include "folproof/proof_io.hpp"
#include "folproof/report.hpp"
#include "folproof/script.hpp"
#include "folproof/settheory.hpp"
#include "folproof/tactics.hpp"

using namespace folproof;

namespace {

enum Exit { kOk = 0, kFailed = 1, kSyntax = 2, kIO = 3 };

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readInput(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot read '" + path + "'");
  s << in.rdbuf();
  return s.str();
}

std::string where(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

int syntaxError(const SyntaxError& e, const char* code = "SyntaxError") {
  std::cerr << where(e.span()) << ": " << code << ": " << e.what() << "\n";
  return kSyntax;
}

bool isScript(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return word == "symbol" || word == "axiom" || word == "theorem" || word == "defpred" || word == "deffun";
  }
  return false;
}

void printItems(const ScriptOutcome& r) {
  for (const ScriptItem& item : r.items) {
    std::cout << scriptItemKindName(item.kind) << " " << item.name;
    if (item.statement && item.kind != ScriptItem::Kind::SymbolDecl) std::cout << " : " << printSequent(*item.statement);
    std::cout << "\n";
  }
}

int runScriptText(const std::string& text, const std::string& file, bool prelude, Style style) {
  TheoryContext ctx(file);
  if (prelude) loadSetTheory(ctx);
  ScriptOutcome r = runScript(ctx, text, file, style);
  printItems(r);
  if (r.ok()) return kOk;
  std::cout << r.error->report();
  return r.error->code() == "SyntaxError" || r.error->code() == "IndexGap" ? kSyntax : kFailed;
}

int cmdCheck(const std::string& path, bool prelude, Style style) {
  std::string text = readInput(path);
  std::string file = path == "-" ? "<stdin>" : std::filesystem::path(path).filename().string();
  if (isScript(text)) return runScriptText(text, file, prelude, style);
  Proof proof;
  try {
    proof = parseProofFile(text, file);
  } catch (const IndexGap& e) {
    return syntaxError(e, "IndexGap");
  } catch (const SyntaxError& e) {
    return syntaxError(e);
  }
  CheckResult r = checkProof(proof);
  if (r.valid) {
    std::cout << printSequent(*r.conclusion) << "\n";
    return kOk;
  }
  if (proof.steps.empty()) {
    std::cout << file << ": " << errorName(r.failure->code) << ": " << r.failure->message << "\n";
    return kFailed;
  }
  std::cout << renderCheckFailure(proof, *r.failure, file, style);
  return kFailed;
}

int cmdNorm(const std::string& f) {
  try {
    std::cout << printFormula(fol2NormalForm(parseFormula(f))) << "\n";
    return kOk;
  } catch (const SyntaxError& e) {
    return syntaxError(e);
  }
}

int cmdEquiv(const std::string& f, const std::string& g) {
  try {
    Formula a = parseFormula(f), b = parseFormula(g);
    Fol2 e;
    bool le = e.leq(a, b), ge = e.leq(b, a);
    std::cout << (le && ge ? "equivalent" : le ? "leq" : ge ? "geq" : "incomparable") << "\n";
    return kOk;
  } catch (const SyntaxError& e) {
    return syntaxError(e);
  }
}

int cmdTaut(const std::string& s, Style style) {
  Sequent goal;
  try {
    goal = parseSequent(s);
  } catch (const SyntaxError& e) {
    return syntaxError(e);
  }
  TacticResult r = tautology(goal);
  if (r.success) {
    std::cout << printProof(r.proof);
    return kOk;
  }
  TacticFailure f{goal, {}, "taut \"" + s + "\"", "Tautology", "command line", r.message, r.blocking};
  std::cout << renderTacticFailure(f, style);
  return kFailed;
}

int cmdCorpus(const std::string& dir) {
  std::vector<CorpusResult> results = runCorpus(dir);
  int failed = 0;
  for (const CorpusResult& r : results) {
    const char* tag = r.entry.expected == "skip" ? "SKIP" : r.passed() ? "PASS" : "FAIL";
    std::cout << tag << " " << r.entry.path << " expected " << r.entry.expected;
    if (r.entry.expected != "skip") std::cout << " got " << r.actual;
    std::cout << "\n";
    if (!r.passed()) {
      ++failed;
      std::cout << r.detail;
    }
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " entries as expected\n";
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folproof: proof checker, normal forms and tactics for first-order sequent calculus"};
  app.require_subcommand(1);
  bool noColor = false;
  app.add_flag("--no-color", noColor, "Plain diagnostics (also FOLPROOF_NO_COLOR)");

  std::string path, f, g, sequent, script, prelude, dir = "corpus";
  auto* check = app.add_subcommand("check", "Check a proof file or theory script ('-' reads stdin)");
  check->add_option("file", path, "Proof file")->required();
  check->add_option("--prelude", prelude, "Preload 'settheory'")->check(CLI::IsMember({"settheory"}));
  auto* norm = app.add_subcommand("norm", "Print the normal form of a formula");
  norm->add_option("formula", f)->required();
  auto* equiv = app.add_subcommand("equiv", "Compare two formulas in the normal-form order");
  equiv->add_option("left", f)->required();
  equiv->add_option("right", g)->required();
  auto* taut = app.add_subcommand("taut", "Prove a propositional sequent and print the proof file");
  taut->add_option("sequent", sequent)->required();
  auto* theory = app.add_subcommand("theory", "Theory scripts");
  theory->require_subcommand(1);
  auto* run = theory->add_subcommand("run", "Run a theory script in a fresh context");
  run->add_option("script", script)->required();
  run->add_option("--prelude", prelude, "Preload 'settheory'")->check(CLI::IsMember({"settheory"}));
  auto* corpus = app.add_subcommand("corpus", "Run a corpus directory against its expectations");
  corpus->add_option("dir", dir, "Corpus directory");

  CLI11_PARSE(app, argc, argv);
  Style style = styleFromEnvironment(noColor);
  try {
    if (*check) return cmdCheck(path, prelude == "settheory", style);
    if (*norm) return cmdNorm(f);
    if (*equiv) return cmdEquiv(f, g);
    if (*taut) return cmdTaut(sequent, style);
    if (*run) {
      std::string file = std::filesystem::path(script).filename().string();
      return runScriptText(readInput(script), file, prelude == "settheory", style);
    }
    if (*corpus) return cmdCorpus(dir);
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIO;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIO;
  }
  return kOk;
}
