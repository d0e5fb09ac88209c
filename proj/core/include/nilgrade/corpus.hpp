#pragma once

#include <string>
#include <vector>

#include "nilgrade/checks.hpp"

namespace nilgrade {

struct CorpusError {
  std::string file;
  std::string message;
};

struct CorpusRun {
  std::vector<std::string> files;
  std::vector<CheckReport> reports;  // ordered by file, then registry order
  std::vector<CorpusError> errors;   // descriptions that failed to parse or build
};

/// The *.json files of a directory, sorted.
std::vector<std::string> corpus_files(const std::string& dir);

/// Loads and checks every file, `jobs` files at a time. Output order does not
/// depend on `jobs`.
CorpusRun run_corpus(const std::vector<std::string>& files, const Limits& limits = {}, unsigned jobs = 1);

}  // namespace nilgrade
