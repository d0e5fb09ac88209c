#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilgrade/corpus.hpp"
#include "nilgrade/report.hpp"
#include "nilgrade/search.hpp"

using namespace nilgrade;

namespace {

constexpr int kExitSpecError = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SpecError(path, "cannot write");
  out << text;
}

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw SpecError(path, "cannot open file");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string render_set(const Grading& g, const ElementSet& set) {
  std::string out;
  set.for_each([&](Element x) { out += "  " + render(g, x) + "\n"; });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded m-nil clean rings: checks, corpus runs and counterexample search"};
  app.require_subcommand(1);
  Limits limits;
  app.add_option("--max-elements", limits.max_elements, "largest ring a construction may build")->capture_default_str();
  app.add_option("--max-ideals", limits.max_ideals, "largest number of homogeneous right ideals enumerated")
      ->capture_default_str();
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "run the checks a ring description asks for");
  std::vector<std::string> check_files;
  std::vector<std::string> check_names;
  check->add_option("files", check_files, "ring description files")->required()->check(CLI::ExistingFile);
  check->add_option("--checks", check_names, "override the description's check list")->delimiter(',');
  check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  check->add_option("-o,--output", output, "write the report here instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "run every description in a directory");
  std::string corpus_dir = NILGRADE_CORPUS_DIR;
  corpus->add_option("--dir", corpus_dir, "corpus directory")->capture_default_str()->check(CLI::ExistingDirectory);
  corpus->add_option("--jobs,-j", jobs, "descriptions checked concurrently")->capture_default_str();
  corpus->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  corpus->add_option("-o,--output", output, "write the report here instead of stdout");

  auto* radical = app.add_subcommand("radical", "print the Jacobson radical of a described ring");
  std::string radical_file;
  bool graded = false;
  radical->add_option("file", radical_file)->required()->check(CLI::ExistingFile);
  radical->add_flag("--graded", graded, "graded Jacobson radical instead");

  auto* search = app.add_subcommand("search", "sample small graded rings looking for a violated implication");
  std::string target;
  std::size_t budget = 1000;
  std::uint64_t seed = 1;
  bool list_targets = false;
  search->add_option("--target", target, "implication id (see --list)");
  search->add_option("--budget", budget, "number of samples")->capture_default_str();
  search->add_option("--seed", seed, "generator seed")->capture_default_str();
  search->add_option("--jobs,-j", jobs, "worker threads")->capture_default_str();
  search->add_flag("--list", list_targets, "list search targets");

  auto* report = app.add_subcommand("report", "re-render a saved machine report");
  std::string report_input = "-";
  report->add_option("--format", format, "text or machine")->required()->check(CLI::IsMember({"text", "machine"}));
  report->add_option("input", report_input, "machine report file, or - for stdin")->capture_default_str();
  report->add_option("-o,--output", output, "write here instead of stdout");

  auto* exporter = app.add_subcommand("export", "print a described ring as an explicit table description");
  std::string export_file;
  exporter->add_option("file", export_file)->required()->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list-checks", "print the registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSpecError;
  }

  try {
    if (*check) {
      std::vector<CheckReport> all;
      for (const auto& f : check_files) {
        const RingSpec spec = load_ring_spec(f, limits);
        auto reports = run_checks(spec, check_names, limits);
        all.insert(all.end(), reports.begin(), reports.end());
      }
      write_output(emit_report(all, parse_report_format(format)), output);
      return exit_code(all);
    }
    if (*corpus) {
      const CorpusRun run = run_corpus(corpus_files(corpus_dir), limits, jobs);
      write_output(emit_report(run.reports, parse_report_format(format)), output);
      for (const auto& e : run.errors) std::cerr << "error: " << e.file << ": " << e.message << "\n";
      if (!run.errors.empty()) return kExitSpecError;
      return exit_code(run.reports);
    }
    if (*radical) {
      const RingSpec spec = load_ring_spec(radical_file, limits);
      const Grading& g = spec.grading;
      if (graded) {
        const auto maximal = graded_maximal_right_ideals(g, limits);
        const auto jg = graded_jacobson_radical(g, limits);
        std::cout << "graded Jacobson radical of " << g.ring().label() << ": " << jg.elements.size() << " elements, "
                  << maximal.size() << " graded-maximal right ideals\n"
                  << render_set(g, jg.elements);
      } else {
        const ElementSet j = jacobson_radical(g.ring(), limits);
        std::cout << "Jacobson radical of " << g.ring().label() << ": " << j.size() << " elements\n"
                  << render_set(g, j);
      }
      return 0;
    }
    if (*search) {
      if (list_targets) {
        for (const auto& t : search_targets()) std::cout << t << "\n";
        return 0;
      }
      if (target.empty()) throw SpecError("--target", "required (see search --list)");
      const SearchReport r = counterexample_search(target, budget, seed, limits, jobs);
      std::cout << to_json(r).dump(2) << "\n";
      // A found counterexample to a forward implication is a falsification;
      // for the converse target it is the expected outcome.
      if (r.status == SearchStatus::found && target != kConverseTarget) return 1;
      return 0;
    }
    if (*report) {
      const auto reports = parse_machine_report(read_input(report_input));
      write_output(emit_report(reports, parse_report_format(format)), output);
      return 0;
    }
    if (*exporter) {
      const RingSpec spec = load_ring_spec(export_file, limits);
      nlohmann::json doc = {{"name", spec.name}, {"m", spec.m}, {"ring", to_table_spec(spec.grading)}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (*list) {
      for (const auto& c : registered_checks()) std::cout << c.name << "  " << c.statement << "\n";
      return 0;
    }
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const ValidationError& e) {
    std::cerr << "invalid construction: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
