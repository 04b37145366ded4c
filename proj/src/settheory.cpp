#include "folproof/settheory.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "settheory_text.hpp"

namespace folproof {

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string_view setTheorySource() { return detail::kSetTheory; }

void loadSetTheory(TheoryContext& ctx) {
  // Names the prelude would take, found on a scratch context.
  TheoryContext scratch("prelude");
  ScriptOutcome dry = runScript(scratch, setTheorySource(), "settheory.fp");
  if (!dry.ok()) throw std::logic_error("set theory prelude: " + dry.error->report());
  for (const ScriptItem& item : dry.items) {
    bool taken = item.kind == ScriptItem::Kind::SymbolDecl
                     ? ctx.knowsFunction(item.name, 0) || ctx.constantNames().contains(item.name)
                     : false;
    try {
      ctx.getJustification(item.name);
      taken = true;
    } catch (const TheoryError&) {
    }
    if (taken) throw TheoryError(TheoryErrorCode::DuplicateName, "'" + item.name + "' is already defined");
  }
  ScriptOutcome r = runScript(ctx, setTheorySource(), "settheory.fp");
  if (!r.ok()) throw TheoryError(TheoryErrorCode::DuplicateName, r.error->what());
}

std::vector<CorpusEntry> readExpectations(const std::string& dir) {
  std::vector<CorpusEntry> out;
  std::istringstream in(slurp(std::filesystem::path(dir) / "expectations.txt"));
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    CorpusEntry e;
    if (!(words >> e.path)) continue;
    if (!(words >> e.expected)) throw std::runtime_error("expectations.txt: no outcome for " + e.path);
    std::string flag;
    while (words >> flag)
      if (flag == "noprelude") e.prelude = false;
    out.push_back(e);
  }
  return out;
}

std::vector<CorpusResult> runCorpus(const std::string& dir) {
  std::vector<CorpusResult> out;
  for (const CorpusEntry& e : readExpectations(dir)) {
    CorpusResult r{e, "", "", 0};
    if (e.expected == "skip") {
      r.actual = "skip";
      out.push_back(r);
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      TheoryContext ctx(e.path);
      if (e.prelude) loadSetTheory(ctx);
      ScriptOutcome s = runScript(ctx, slurp(std::filesystem::path(dir) / e.path), e.path);
      r.actual = s.ok() ? "ok" : s.error->code();
      if (!s.ok()) r.detail = s.error->report();
    } catch (const std::exception& ex) {
      r.actual = "IOError";
      r.detail = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  }
  return out;
}

}  // namespace folproof
