#include "folproof/script.hpp"

#include <map>
#include <regex>

#include "folproof/fol2.hpp"
#include "folproof/proof_io.hpp"
#include "folproof/tactics.hpp"

namespace folproof {

namespace {

using text::Tok;

struct Line {
  std::string text;  // comment stripped
  std::string raw;
  int number;
};

std::vector<Line> splitScript(std::string_view in) {
  std::vector<Line> out;
  int n = 1;
  std::size_t start = 0;
  while (start <= in.size()) {
    std::size_t end = in.find('\n', start);
    if (end == std::string_view::npos) end = in.size();
    std::string raw(in.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string text = raw.substr(0, raw.find('#'));
    out.push_back({text, raw, n++});
    start = end + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t i = s.find_first_not_of(" \t");
  if (i == std::string::npos) return "";
  return s.substr(i, s.find_last_not_of(" \t") - i + 1);
}

std::string firstWord(const std::string& s) {
  std::string t = trim(s);
  return t.substr(0, t.find_first_of(" \t("));
}

// One proof under construction; subproof blocks get a child scope whose
// imports are facts of the enclosing scopes.
struct Scope {
  Proof proof;
  Sequent goal;
  Scope* parent = nullptr;
  std::map<std::string, int> names;
  std::map<std::string, int> imported;
  std::vector<int> sources;  // parent index of each import
  std::vector<Justification> justifications;
};

const Sequent& sequentAt(const Scope& s, int i) {
  return i >= 0 ? s.proof.steps[static_cast<std::size_t>(i)].conclusion
                : s.proof.imports[static_cast<std::size_t>(-1 - i)];
}

int push(Scope& s, ProofStep step) {
  s.proof.steps.push_back(std::move(step));
  return static_cast<int>(s.proof.steps.size()) - 1;
}

std::string tacticTitle(const std::string& name) {
  std::string t = name;
  if (!t.empty()) t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  return t;
}

class Runner {
 public:
  Runner(TheoryContext& ctx, std::string_view in, std::string file, Style style)
      : ctx_(ctx), lines_(splitScript(in)), file_(std::move(file)), style_(style) {}

  ScriptOutcome run() {
    ScriptOutcome out;
    try {
      while (skipBlank()) out.items.push_back(item());
    } catch (const ScriptError& e) {
      out.error = e;
    }
    return out;
  }

 private:
  // Errors ------------------------------------------------------------------

  SourceSpan lineSpan(const Line& l) const {
    std::size_t i = l.text.find_first_not_of(" \t");
    int col = i == std::string::npos ? 1 : static_cast<int>(i) + 1;
    return SourceSpan{file_, l.number, col, static_cast<int>(trim(l.text).size())};
  }

  static std::string where(const SourceSpan& s) {
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
  }

  [[noreturn]] void syntax(const SyntaxError& e, const std::string& code = "SyntaxError") const {
    throw ScriptError(code, e.span(), e.what(), where(e.span()) + ": " + code + ": " + e.what() + "\n");
  }

  [[noreturn]] void error(const std::string& code, const SourceSpan& span, const std::string& message,
                          std::string detail = "") const {
    throw ScriptError(code, span, message, where(span) + ": " + code + ": " + message + "\n" + detail);
  }

  [[noreturn]] void theory(const TheoryError& e, const SourceSpan& span, const Proof* proof = nullptr) const {
    std::string detail;
    if (proof && e.failure()) detail = "\n" + renderCheckFailure(*proof, *e.failure(), file_, style_);
    error(std::string(theoryErrorName(e.code())), span, e.what(), detail);
  }

  // Lines -------------------------------------------------------------------

  bool skipBlank() {
    while (pos_ < lines_.size() && trim(lines_[pos_].text).empty()) ++pos_;
    return pos_ < lines_.size();
  }

  Signature signature() const { return Signature{ctx_.constantNames()}; }

  text::Parser parser(const Line& l) const {
    return text::Parser(text::lex(l.text, file_, l.number), sig_);
  }

  template <typename Fn>
  auto parsing(Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const IndexGap& e) {
      syntax(e, "IndexGap");
    } catch (const SyntaxError& e) {
      syntax(e);
    }
  }

  static void keyword(text::Parser& p, const char* word) {
    if (!p.at(Tok::Ident) || p.peek().text != word) p.fail(std::string("expected '") + word + "'");
    p.accept(Tok::Ident);
  }

  static bool atKeyword(const text::Parser& p, const char* word) {
    return p.at(Tok::Ident) && p.peek().text == word;
  }

  static void end(text::Parser& p) {
    if (!p.atEnd()) p.fail("unexpected input");
  }

  static std::vector<std::string> paramList(text::Parser& p) {
    std::vector<std::string> out;
    p.expect(Tok::LParen, "'('");
    if (p.accept(Tok::RParen)) return out;
    do out.push_back(p.identifier("a parameter"));
    while (p.accept(Tok::Comma));
    p.expect(Tok::RParen, "')'");
    return out;
  }

  // Items -------------------------------------------------------------------

  ScriptItem item() {
    const Line& l = lines_[pos_];
    sig_ = signature();
    std::string word = firstWord(l.text);
    if (word == "symbol") return symbol(l);
    if (word == "axiom") return axiom(l);
    if (word == "defpred") return defpred(l);
    if (word == "deffun") return deffun(l);
    if (word == "theorem") return theorem(l);
    error("SyntaxError", lineSpan(l), "expected symbol, axiom, defpred, deffun or theorem");
  }

  ScriptItem symbol(const Line& l) {
    static const std::regex re(R"(\s*symbol\s+(fun|pred)\s+([A-Za-z_][A-Za-z0-9_]*)\s*/\s*([0-9]+)\s*)");
    std::smatch m;
    if (!std::regex_match(l.text, m, re)) error("SyntaxError", lineSpan(l), "expected 'symbol fun|pred name/arity'");
    ++pos_;
    std::size_t arity = std::stoul(m[3]);
    try {
      if (m[1] == "fun") ctx_.declareFunction(m[2], arity);
      else ctx_.declarePredicate(m[2], arity);
    } catch (const TheoryError& e) {
      theory(e, lineSpan(l));
    }
    return ScriptItem{ScriptItem::Kind::SymbolDecl, m[2], l.number, std::nullopt, std::nullopt};
  }

  ScriptItem axiom(const Line& l) {
    ++pos_;
    auto [name, f] = parsing([&] {
      text::Parser p = parser(l);
      keyword(p, "axiom");
      std::string name = p.identifier("an axiom name");
      p.expect(Tok::Colon, "':'");
      Formula f = p.formula();
      end(p);
      return std::pair{name, f};
    });
    try {
      Justification j = ctx_.addAxiom(name, f);
      return ScriptItem{ScriptItem::Kind::AxiomDecl, name, l.number, j.statement(), std::nullopt};
    } catch (const TheoryError& e) {
      theory(e, lineSpan(l));
    }
  }

  ScriptItem defpred(const Line& l) {
    ++pos_;
    struct D { std::string name; std::vector<std::string> params; Formula phi; };
    D d = parsing([&] {
      text::Parser p = parser(l);
      keyword(p, "defpred");
      std::string name = p.identifier("a predicate name");
      auto params = paramList(p);
      p.expect(Tok::Colon, "':='");
      p.expect(Tok::Eq, "':='");
      Formula phi = p.formula();
      end(p);
      return D{name, params, phi};
    });
    try {
      Justification j = ctx_.definePredicate(d.name, d.params, d.phi);
      return ScriptItem{ScriptItem::Kind::PredicateDef, d.name, l.number, j.statement(), std::nullopt};
    } catch (const TheoryError& e) {
      theory(e, lineSpan(l));
    }
  }

  ScriptItem deffun(const Line& l) {
    ++pos_;
    struct D {
      std::string name;
      std::vector<std::string> params;
      std::string y;
      Formula phi;
      std::string witness;
      std::optional<Formula> exposed;
    };
    D d = parsing([&] {
      text::Parser p = parser(l);
      keyword(p, "deffun");
      std::string name = p.identifier("a function name");
      auto params = paramList(p);
      p.expect(Tok::Eq, "'='");
      std::string y = p.identifier("the result variable");
      keyword(p, "such");
      keyword(p, "that");
      Formula phi = p.formula();
      keyword(p, "witness");
      std::string witness = p.identifier("a theorem name");
      std::optional<Formula> exposed;
      if (atKeyword(p, "exposing")) {
        p.accept(Tok::Ident);
        exposed = p.formula();
      }
      end(p);
      return D{name, params, y, phi, witness, exposed};
    });
    try {
      Justification w = ctx_.getJustification(d.witness);
      Justification j = ctx_.defineFunction(d.name, d.params, d.y, d.phi, w, d.exposed);
      return ScriptItem{ScriptItem::Kind::FunctionDef, d.name, l.number, j.statement(), std::nullopt};
    } catch (const TheoryError& e) {
      theory(e, lineSpan(l));
    }
  }

  ScriptItem theorem(const Line& l) {
    ++pos_;
    Scope root;
    std::string name;
    std::optional<std::size_t> byAt;
    bool raw = false;
    parsing([&] {
      text::Parser p = parser(l);
      keyword(p, "theorem");
      name = p.identifier("a theorem name");
      p.expect(Tok::Colon, "':'");
      root.goal = p.sequent();
      if (atKeyword(p, "by")) byAt = p.position();
      else end(p);
      return 0;
    });

    if (byAt) {
      text::Parser p = parser(l);
      p.reset(*byAt);
      have(root, p, l, root.goal, "");
    } else {
      if (!skipBlank()) error("SyntaxError", lineSpan(l), "expected 'proof', 'kernel' or 'by' after the theorem");
      const Line& open = lines_[pos_];
      std::string word = firstWord(open.text);
      if (word == "proof") {
        ++pos_;
        if (trim(open.text) != "proof") error("SyntaxError", lineSpan(open), "unexpected input after 'proof'");
        block(root, open, "qed");
      } else if (word == "kernel") {
        kernel(root, open);
        raw = true;
      } else {
        error("SyntaxError", lineSpan(open), "expected 'proof', 'kernel' or 'by' after the theorem");
      }
    }

    if (root.proof.steps.empty()) error("SyntaxError", lineSpan(l), "the proof of '" + name + "' has no steps");
    if (!raw) closeTo(root, root.goal, l);
    try {
      Justification j = ctx_.makeTheorem(name, root.goal, root.proof, root.justifications);
      return ScriptItem{ScriptItem::Kind::TheoremDecl, name, l.number, j.statement(), root.proof};
    } catch (const TheoryError& e) {
      theory(e, lineSpan(l), &root.proof);
    }
  }

  // Raw proof file text between `kernel [uses a, b]` and `qed`.
  void kernel(Scope& root, const Line& open) {
    ++pos_;
    std::vector<std::string> uses = parsing([&] {
      text::Parser p = parser(open);
      keyword(p, "kernel");
      std::vector<std::string> out;
      if (atKeyword(p, "uses")) {
        p.accept(Tok::Ident);
        do out.push_back(p.identifier("a justification name"));
        while (p.accept(Tok::Comma));
      }
      end(p);
      return out;
    });
    // Leading newlines keep the line numbers of the script.
    std::string body(static_cast<std::size_t>(open.number), '\n');
    bool closed = false;
    for (; pos_ < lines_.size(); ++pos_) {
      if (trim(lines_[pos_].text) == "qed") {
        closed = true;
        ++pos_;
        break;
      }
      body += lines_[pos_].raw + "\n";
    }
    if (!closed) error("SyntaxError", lineSpan(open), "missing 'qed'");
    root.proof = parsing([&] { return parseProofFile(body, file_, sig_); });
    for (const std::string& u : uses) {
      try {
        root.justifications.push_back(ctx_.getJustification(u));
      } catch (const TheoryError& e) {
        theory(e, lineSpan(open));
      }
    }
  }

  // Lines of a structured proof up to `closer`.
  void block(Scope& s, const Line& open, const char* closer) {
    for (;;) {
      if (!skipBlank()) error("SyntaxError", lineSpan(open), std::string("missing '") + closer + "'");
      const Line& l = lines_[pos_];
      if (trim(l.text) == closer) {
        ++pos_;
        return;
      }
      ++pos_;
      std::string stepName;
      std::optional<Sequent> stated;
      bool sub = false;
      std::size_t at = parsing([&] {
        text::Parser p = parser(l);
        keyword(p, "have");
        stepName = p.identifier("a step name");
        if (p.accept(Tok::Colon)) stated = p.sequent();
        if (atKeyword(p, "subproof")) {
          p.accept(Tok::Ident);
          end(p);
          sub = true;
        } else if (!atKeyword(p, "by")) {
          p.fail("expected 'by' or 'subproof'");
        }
        return p.position();
      });
      if (s.names.contains(stepName)) error("DuplicateName", lineSpan(l), "step '" + stepName + "' already exists");
      int index;
      if (sub) {
        if (!stated) error("SyntaxError", lineSpan(l), "a subproof needs a stated sequent");
        index = subproof(s, l, *stated);
      } else {
        text::Parser p = parser(l);
        p.reset(at);
        index = have(s, p, l, stated, trim(l.text));
      }
      s.names[stepName] = index;
    }
  }

  int subproof(Scope& s, const Line& l, const Sequent& goal) {
    Scope child;
    child.parent = &s;
    child.goal = goal;
    block(child, l, "end");
    if (child.proof.steps.empty()) error("SyntaxError", lineSpan(l), "empty subproof");
    closeTo(child, goal, l);
    ProofStep step;
    step.rule = Rule::Subproof;
    step.conclusion = goal;
    step.premises = child.sources;
    step.params.inner = std::make_shared<const Proof>(std::move(child.proof));
    step.line = l.number;
    return push(s, std::move(step));
  }

  // Makes the last step of `s` conclude `goal` with one Restate or
  // Weakening when it does not already.
  void closeTo(Scope& s, const Sequent& goal, const Line& l) {
    Fol2 e;
    int last = static_cast<int>(s.proof.steps.size()) - 1;
    const Sequent& got = s.proof.steps.back().conclusion;
    if (got.left() == goal.left() && got.right() == goal.right()) return;
    Rule rule;
    if (e.sequentSame(got, goal)) rule = Rule::Restate;
    else if (e.sequentLeq(got, goal)) rule = Rule::Weakening;
    else return;  // left to the checker or the theory to report
    push(s, ProofStep{rule, goal, {last}, {}, l.number});
  }

  // Facts -------------------------------------------------------------------

  bool known(const Scope& s, const std::string& name) const {
    for (const Scope* c = &s; c; c = c->parent)
      if (c->names.contains(name) || c->imported.contains(name)) return true;
    try {
      ctx_.getJustification(name);
      return true;
    } catch (const TheoryError&) {
      return false;
    }
  }

  int resolve(Scope& s, const std::string& name, const SourceSpan& span) {
    if (auto it = s.names.find(name); it != s.names.end()) return it->second;
    if (auto it = s.imported.find(name); it != s.imported.end()) return it->second;
    if (s.parent) {
      int at = resolve(*s.parent, name, span);
      s.proof.imports.push_back(sequentAt(*s.parent, at));
      s.sources.push_back(at);
    } else {
      try {
        Justification j = ctx_.getJustification(name);
        s.proof.imports.push_back(j.statement());
        s.justifications.push_back(j);
      } catch (const TheoryError& e) {
        error(std::string(theoryErrorName(e.code())), span, e.what());
      }
    }
    int index = -static_cast<int>(s.proof.imports.size());
    s.imported[name] = index;
    return index;
  }

  // `name` or `name of (x -> t, 'f(v) -> t, 'P(v) -> phi, 'C['p] -> phi)`.
  int fact(Scope& s, text::Parser& p, const Line& l) {
    text::Token head = p.expect(Tok::Ident, "a fact name");
    int at = resolve(s, head.text, head.span);
    if (!atKeyword(p, "of")) return at;
    p.accept(Tok::Ident);

    Sequent base = sequentAt(s, at);
    std::set<TermSymbol> termSyms;
    std::set<FormulaSymbol> formulaSyms;
    for (const auto* side : {&base.left(), &base.right()})
      for (const Formula& f : *side) collectSymbols(f, termSyms, formulaSyms);

    FormulaSchemaMap formulas;
    TermSchemaMap terms;
    VariableMap variables;
    p.expect(Tok::LParen, "'('");
    if (!p.accept(Tok::RParen)) {
      do {
        if (p.at(Tok::Ident)) {
          std::string v = p.identifier("a variable");
          p.expect(Tok::Arrow, "'->'");
          variables.insert_or_assign(v, p.term());
          continue;
        }
        std::string name = p.expect(Tok::Schematic, "a variable or schematic symbol").text;
        std::vector<std::string> params;
        bool connector = false;
        if (p.accept(Tok::LBracket)) {
          connector = true;
          if (!p.accept(Tok::RBracket)) {
            do params.push_back(p.expect(Tok::Schematic, "a formula placeholder").text);
            while (p.accept(Tok::Comma));
            p.expect(Tok::RBracket, "']'");
          }
        } else if (p.accept(Tok::LParen)) {
          if (!p.accept(Tok::RParen)) {
            do params.push_back(p.identifier("a parameter variable"));
            while (p.accept(Tok::Comma));
            p.expect(Tok::RParen, "')'");
          }
        }
        p.expect(Tok::Arrow, "'->'");
        FormulaSymbol pred = connector ? schematicConnector(name, params.size())
                                       : schematicPredicate(name, params.size());
        if (connector || formulaSyms.contains(pred))
          formulas.insert_or_assign(pred, LambdaFormula{params, p.formula()});
        else
          terms.insert_or_assign(schematicFunction(name, params.size()), LambdaTerm{params, p.term()});
      } while (p.accept(Tok::Comma));
      p.expect(Tok::RParen, "')'");
    }

    TacticResult r = instantiateFact(base, formulas, terms, variables);
    if (!r.success) error(std::string(tacticErrorName(r.error)), head.span, r.message);
    ProofStep step = r.proof.steps.back();
    step.premises = {at};
    step.line = l.number;
    return push(s, std::move(step));
  }

  bool atFact(const Scope& s, const text::Parser& p) const {
    if (!p.at(Tok::Ident) || !known(s, p.peek().text)) return false;
    Tok next = p.peek(1).kind;
    return next == Tok::Comma || next == Tok::RParen || (next == Tok::Ident && p.peek(1).text == "of");
  }

  // Steps -------------------------------------------------------------------

  // `by <tactic>(args)` or `by <Rule>(premises) {params}`; returns the index
  // of the step concluding the line.
  int have(Scope& s, text::Parser& p, const Line& l, const std::optional<Sequent>& stated,
           const std::string& source) {
    std::string name;
    std::vector<int> facts;
    std::vector<Equation> equations;
    std::vector<Term> terms;
    StepParams params;
    std::optional<Rule> rule;
    parsing([&] {
      keyword(p, "by");
      name = p.identifier("a tactic or rule name");
      rule = ruleFromName(name);
      static const std::set<std::string> tactics = {"tautology", "restate", "substitution", "instantiate"};
      if (!rule && !tactics.contains(name)) p.fail("unknown tactic or rule '" + name + "'");
      p.expect(Tok::LParen, "'('");
      if (!p.at(Tok::RParen)) {
        do {
          bool first = facts.empty();
          if (name == "substitution" && !first) {
            // `ltr` or `rtl` fixes the direction of the rewrite.
            Orientation o = Orientation::Auto;
            if ((atKeyword(p, "ltr") || atKeyword(p, "rtl")) && p.peek(1).kind != Tok::Comma &&
                p.peek(1).kind != Tok::RParen) {
              o = p.peek().text == "ltr" ? Orientation::LeftToRight : Orientation::RightToLeft;
              p.accept(Tok::Ident);
            }
            if (atFact(s, p)) {
              int at = fact(s, p, l);
              const Sequent& eq = sequentAt(s, at);
              if (eq.right().size() != 1)
                p.fail("an equation fact must have exactly one formula on the right");
              facts.push_back(at);
              equations.push_back(Equation{eq.right().front(), o, eq});
            } else {
              equations.push_back(Equation{p.formula(), o, std::nullopt});
            }
          } else if (name == "instantiate" && !first) {
            terms.push_back(p.term());
          } else {
            facts.push_back(fact(s, p, l));
          }
        } while (p.accept(Tok::Comma));
      }
      p.expect(Tok::RParen, "')'");
      if (p.accept(Tok::LBrace)) {
        if (!rule) p.fail("only kernel rules take parameters");
        params = parseParams(p);
      }
      end(p);
      return 0;
    });
    SourceSpan span = lineSpan(l);

    if (rule) {
      if (!stated) error("SyntaxError", span, "a kernel step needs a stated sequent");
      return push(s, ProofStep{*rule, *stated, facts, params, l.number});
    }

    std::vector<Sequent> inputs;
    for (int f : facts) inputs.push_back(sequentAt(s, f));
    TacticResult r;
    if (name == "tautology") {
      if (!stated) error("SyntaxError", span, "tautology needs a stated sequent");
      r = inputs.empty() ? tautology(*stated) : tautologyFrom(inputs, *stated);
    } else if (name == "restate") {
      if (!stated) error("SyntaxError", span, "restate needs a stated sequent");
      if (inputs.size() > 1) error("SyntaxError", span, "restate takes at most one fact");
      r = restateAuto(*stated, inputs.empty() ? std::nullopt : std::optional<Sequent>(inputs[0]));
    } else if (name == "substitution") {
      if (inputs.empty()) error("SyntaxError", span, "substitution needs a fact to rewrite");
      r = substitution(inputs[0], equations);
    } else {
      if (inputs.size() != 1) error("SyntaxError", span, "instantiate takes one fact and terms");
      r = instantiateForall(inputs[0], terms);
    }

    if (!r.success) {
      TacticFailure f{s.goal, s.proof, source.empty() ? trim(l.text) : source, tacticTitle(name),
                      file_ + ":" + std::to_string(l.number), r.message, r.blocking};
      error(std::string(tacticErrorName(r.error)), span, r.message, "\n" + renderTacticFailure(f, style_));
    }

    Fol2 e;
    Sequent concluded = r.conclusion();
    Sequent target = stated ? *stated : concluded;
    bool same = e.sequentSame(concluded, target);
    ProofStep step;
    step.rule = Rule::Subproof;
    step.conclusion = same ? target : concluded;
    step.premises = facts;
    step.params.inner = std::make_shared<const Proof>(std::move(r.proof));
    step.line = l.number;
    int at = push(s, std::move(step));
    if (same) return at;
    if (!e.sequentLeq(concluded, target))
      error("ConclusionMismatch", span,
            tacticTitle(name) + " concludes " + printSequent(concluded) + ", not " + printSequent(target));
    return push(s, ProofStep{Rule::Weakening, target, {at}, {}, l.number});
  }

  TheoryContext& ctx_;
  std::vector<Line> lines_;
  std::string file_;
  Style style_;
  std::size_t pos_ = 0;
  Signature sig_;
};

}  // namespace

std::string_view scriptItemKindName(ScriptItem::Kind k) {
  switch (k) {
    case ScriptItem::Kind::SymbolDecl: return "symbol";
    case ScriptItem::Kind::AxiomDecl: return "axiom";
    case ScriptItem::Kind::TheoremDecl: return "theorem";
    case ScriptItem::Kind::PredicateDef: return "defpred";
    case ScriptItem::Kind::FunctionDef: return "deffun";
  }
  return "?";
}

ScriptOutcome runScript(TheoryContext& ctx, std::string_view text, const std::string& file, Style style) {
  return Runner(ctx, text, file, style).run();
}

}  // namespace folproof
