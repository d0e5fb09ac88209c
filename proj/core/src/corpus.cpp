#include "nilgrade/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <future>
#include <optional>

namespace nilgrade {

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

CorpusRun run_corpus(const std::vector<std::string>& files, const Limits& limits, unsigned jobs) {
  struct Slot {
    std::vector<CheckReport> reports;
    std::optional<CorpusError> error;
  };
  std::vector<Slot> slots(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const RingSpec spec = load_ring_spec(files[i], limits);
        slots[i].reports = run_checks(spec, {}, limits);
      } catch (const ResourceError& e) {
        CheckReport r;
        r.spec = files[i];
        r.check = "construction";
        r.status = CheckStatus::skipped_resource;
        r.detail = e.what();
        slots[i].reports.push_back(std::move(r));
      } catch (const Error& e) {
        slots[i].error = CorpusError{files[i], e.what()};
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < std::max(1U, jobs); ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  CorpusRun run;
  run.files = files;
  for (auto& s : slots) {
    for (auto& r : s.reports) run.reports.push_back(std::move(r));
    if (s.error) run.errors.push_back(std::move(*s.error));
  }
  return run;
}

}  // namespace nilgrade
