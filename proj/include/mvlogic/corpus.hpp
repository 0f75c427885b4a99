#pragma once

#include <string>
#include <vector>

#include "mvlogic/entailment.hpp"

namespace mvlogic {

// Inference corpus file: one entailment per block, blocks separated by
// blank lines, `#` comments. Each block:
//
//   name: <identifier>
//   given: <premise expression>     (zero or more lines)
//   infer: <assertion>
//   expect: valid|invalid|vacuous

struct CorpusEntry {
  std::string name;
  PremiseSet given;
  PremiseAssertion infer;
  Verdict expect = Verdict::Valid;
};

struct CorpusEntryResult {
  std::string name;
  Verdict expect = Verdict::Valid;
  Verdict actual = Verdict::Valid;
  bool pass = false;
};

struct CorpusReport {
  std::vector<CorpusEntryResult> entries;
  bool all_pass = true;
};

std::vector<CorpusEntry> parse_corpus(const std::string& text, const LogicSystem& system);

std::vector<CorpusEntry> load_corpus_file(const std::string& path, const LogicSystem& system);

/// Runs every entry whose name contains `filter` (all when empty).
CorpusReport run_corpus(const LogicSystem& system, const std::vector<CorpusEntry>& entries,
                        const std::string& filter = "");

} // namespace mvlogic
