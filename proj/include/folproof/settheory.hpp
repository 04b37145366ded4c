#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folproof/script.hpp"
#include "folproof/theory.hpp"

namespace folproof {

// Text of the set theory prelude (corpus/settheory.fp, embedded at build time).
std::string_view setTheorySource();

// Declares the set theory language and adds its axioms. Throws TheoryError
// DuplicateName when one of the prelude names is already taken.
void loadSetTheory(TheoryContext& ctx);

// Corpus scripts with their pinned outcome.
struct CorpusEntry {
  std::string path;
  std::string expected;  // "ok", an error code, or "skip"
  bool prelude = true;
};

struct CorpusResult {
  CorpusEntry entry;
  std::string actual;  // "ok", the error code, or "skip"
  std::string detail;  // diagnostic of an unexpected failure
  double seconds = 0;
  bool passed() const { return actual == entry.expected; }
};

// Reads `dir`/expectations.txt: lines `path expected [noprelude]`, paths
// relative to `dir`.
std::vector<CorpusEntry> readExpectations(const std::string& dir);

// Runs each entry in a fresh context; one failure never stops the batch.
std::vector<CorpusResult> runCorpus(const std::string& dir);

}  // namespace folproof
