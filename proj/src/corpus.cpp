#include "mvlogic/corpus.hpp"

#include <fstream>
#include <sstream>

#include "mvlogic/parser.hpp"

namespace mvlogic {

namespace {

std::string strip(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return {};
  }
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

Verdict verdict_from(const std::string& word, std::size_t line_no) {
  if (word == "valid") {
    return Verdict::Valid;
  }
  if (word == "invalid") {
    return Verdict::Invalid;
  }
  if (word == "vacuous") {
    return Verdict::Vacuous;
  }
  throw Error(Errc::syntax,
              "line " + std::to_string(line_no) + ": expected valid|invalid|vacuous, got '" +
                  word + "'");
}

} // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text, const LogicSystem& system) {
  std::vector<CorpusEntry> entries;

  struct Block {
    std::optional<std::string> name;
    std::vector<std::string> given;
    std::optional<std::string> infer;
    std::optional<std::string> expect;
    std::size_t line = 0;
  };

  auto finish = [&](Block& block) {
    if (!block.name && block.given.empty() && !block.infer && !block.expect) {
      return;
    }
    if (!block.infer) {
      throw Error(Errc::syntax,
                  "corpus block near line " + std::to_string(block.line) + " has no infer: line");
    }
    if (!block.expect) {
      throw Error(Errc::syntax,
                  "corpus block near line " + std::to_string(block.line) + " has no expect: line");
    }
    CorpusEntry entry;
    entry.name = block.name.value_or("entry_" + std::to_string(entries.size() + 1));
    for (const auto& given : block.given) {
      entry.given.premises.push_back(parse_premise_expr(given, system));
    }
    entry.infer = parse_premise(*block.infer, system);
    entry.expect = verdict_from(*block.expect, block.line);
    entries.push_back(std::move(entry));
    block = Block{};
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  Block block;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (!line.empty() && line[0] == '#') {
      continue;
    }
    if (line.empty()) {
      finish(block);
      continue;
    }
    if (block.line == 0) {
      block.line = line_no;
    }
    auto starts_with = [&](const char* prefix) {
      return line.rfind(prefix, 0) == 0;
    };
    try {
      if (starts_with("name:")) {
        block.name = strip(line.substr(5));
      } else if (starts_with("given:")) {
        block.given.push_back(strip(line.substr(6)));
      } else if (starts_with("infer:")) {
        if (block.infer) {
          throw Error(Errc::syntax, "duplicate infer: line");
        }
        block.infer = strip(line.substr(6));
      } else if (starts_with("expect:")) {
        block.expect = strip(line.substr(7));
      } else {
        throw Error(Errc::syntax, "expected name:/given:/infer:/expect:");
      }
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  finish(block);
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path, const LogicSystem& system) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io, "cannot open corpus file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), system);
}

CorpusReport run_corpus(const LogicSystem& system, const std::vector<CorpusEntry>& entries,
                        const std::string& filter) {
  CorpusReport report;
  for (const auto& entry : entries) {
    if (!filter.empty() && entry.name.find(filter) == std::string::npos) {
      continue;
    }
    CorpusEntryResult result;
    result.name = entry.name;
    result.expect = entry.expect;
    result.actual = entails(entry.given, entry.infer, system).verdict;
    result.pass = result.actual == result.expect;
    report.all_pass = report.all_pass && result.pass;
    report.entries.push_back(std::move(result));
  }
  return report;
}

} // namespace mvlogic
