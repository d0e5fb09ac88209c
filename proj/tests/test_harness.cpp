#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "nilgrade/corpus.hpp"
#include "nilgrade/report.hpp"
#include "nilgrade/search.hpp"
#include "nilgrade/nilclean.hpp"

using namespace nilgrade;
using nlohmann::json;

namespace {

std::string corpus(const std::string& name) { return std::string(NILGRADE_CORPUS_DIR) + "/" + name + ".json"; }

const CheckReport& find(const std::vector<CheckReport>& reports, const std::string& check) {
  for (const auto& r : reports)
    if (r.check == check) return r;
  FAIL("no report for " << check);
  return reports.front();
}

std::string where_of(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const SpecError& e) {
    return e.where();
  }
  return "parsed";
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(NILGRADE_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("ring descriptions: the simplest cases") {
  const auto spec = parse_ring_spec(R"({"ring": {"kind": "zn", "n": 4}})");
  CHECK(spec.grading.ring().size() == 4);
  CHECK(spec.grading.components().size() == 1);
  CHECK(spec.m == 2);
  CHECK(spec.checks.empty());
  const auto gf = parse_ring_spec(R"({"m": 4, "ring": {"kind": "gf", "p": 2, "k": 2}})");
  CHECK(gf.grading.ring().size() == 4);
  CHECK(gf.m == 4);
}

TEST_CASE("ring descriptions: errors carry a location") {
  CHECK(where_of(R"({"ring": {"kind": "zn", "n": 4, "extra": 1}})") == "/ring/extra");
  CHECK(where_of(R"({"ring": {"kind": "nope"}})") == "/ring/kind");
  CHECK(where_of(R"({"ring": {"kind": "zn"}})") == "/ring/n");
  CHECK(where_of(R"({"ring": {"kind": "zn", "n": 4}, "m": 1})") == "/m");
  CHECK(where_of("{\n\"ring\": {\"kind\": \"zn\",\n \"n\": }\n}") == "line 3");
  CHECK(where_of(R"({"ring": {"kind": "zn", "n": 4}, "expect": {"jg_graded_nil": true}})") == "/expect/jg_graded_nil");
  CHECK(where_of(R"({"ring": {"kind": "triangular", "base": {"kind": "zn", "n": 2}, "n": 2, "sigma": [0, 1]}})") ==
        "/ring/sigma/1");
  CHECK(where_of(R"({"ring": {"kind": "zn", "n": 4}, "elements": [{"element": 9}]})") == "/elements/0/element");
  CHECK(where_of(R"({"ring": {"kind": "zn", "n": 4}, "checks": ["no_such_check"]})") == "parsed");
  const auto spec = parse_ring_spec(R"({"ring": {"kind": "zn", "n": 4}, "checks": ["no_such_check"]})");
  CHECK_THROWS_AS(run_checks(spec), SpecError);
}

TEST_CASE("ring descriptions: an invalid grading is a validation error with a witness") {
  const char* text = R"({"ring": {"kind": "zn", "n": 4, "grading": {"group": {"kind": "cyclic", "n": 2},
      "components": [{"degree": 0, "generators": [1]}, {"degree": 1, "generators": [2]}]}}})";
  CHECK_THROWS_AS(parse_ring_spec(text), ValidationError);
}

TEST_CASE("every corpus description parses") {
  const auto files = corpus_files(NILGRADE_CORPUS_DIR);
  CHECK(files.size() >= 20);
  for (const auto& f : files) {
    INFO(f);
    CHECK_NOTHROW(load_ring_spec(f));
  }
}

TEST_CASE("export round trip reproduces tables and components") {
  for (const auto& f : corpus_files(NILGRADE_CORPUS_DIR)) {
    const auto spec = load_ring_spec(f);
    const auto& r = spec.grading.ring();
    if (r.size() > 256) continue;  // table axioms cost |R|^3
    INFO(f);
    const auto back = parse_ring_spec(json{{"ring", to_table_spec(spec.grading)}});
    const auto& s = back.grading.ring();
    REQUIRE(s.size() == r.size());
    CHECK(s.one() == r.one());
    bool same = true;
    for (Element a = 0; a < r.size() && same; ++a)
      for (Element b = 0; b < r.size() && same; ++b) same = r.add(a, b) == s.add(a, b) && r.mul(a, b) == s.mul(a, b);
    CHECK(same);
    REQUIRE(back.grading.components().size() == spec.grading.components().size());
    for (std::size_t c = 0; c < spec.grading.components().size(); ++c) {
      CHECK(back.grading.components()[c].degree == spec.grading.components()[c].degree);
      CHECK(back.grading.components()[c].members == spec.grading.components()[c].members);
    }
    CHECK(back.grading.group() == spec.grading.group());
  }
}

TEST_CASE("checks on the GF(3) triangular ring") {
  const auto m3 = run_checks(load_ring_spec(corpus("t2_gf3_c2_m3")));
  CHECK(find(m3, "graded_m_nil_clean").status == CheckStatus::pass);
  CHECK(find(m3, "jg_graded_nil").status == CheckStatus::pass);
  CHECK_FALSE(find(m3, "jg_graded_nil").vacuous);
  const auto m2 = run_checks(load_ring_spec(corpus("t2_gf3_c2_m2")));
  const auto& neg = find(m2, "graded_m_nil_clean");
  CHECK(neg.status == CheckStatus::fail);
  CHECK(neg.expected == false);
  CHECK(exit_code(m2) == 0);
}

TEST_CASE("a decision contradicting its expectation is falsified") {
  auto doc = json::parse(std::ifstream(corpus("t2_gf3_c2_m2")));
  doc["expect"]["graded_m_nil_clean"] = true;
  const auto reports = run_checks(parse_ring_spec(doc), {"graded_m_nil_clean"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == CheckStatus::falsified);
  CHECK(exit_code(reports) == 1);
}

TEST_CASE("resource caps turn into skipped-resource") {
  Limits tight;
  tight.max_radical_elements = 4;
  const auto spec = load_ring_spec(corpus("t2_gf3_c2_m3"));
  const auto reports = run_checks(spec, {"jg_graded_nil"}, tight);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == CheckStatus::skipped_resource);
  CHECK(exit_code(reports) == 3);
  Limits tiny;
  tiny.max_elements = 10;
  CHECK_THROWS_AS(load_ring_spec(corpus("t2_gf3_c2_m3"), tiny), ResourceError);
}

TEST_CASE("run_checks is deterministic and in registry order") {
  const auto spec = load_ring_spec(corpus("amalg_z4_id_2"));
  const auto a = run_checks(spec);
  const auto b = run_checks(spec);
  REQUIRE(a.size() == registered_checks().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == registered_checks()[i].name);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].detail == b[i].detail);
    CHECK(a[i].witness == b[i].witness);
  }
}

TEST_CASE("reports") {
  SUBCASE("empty list gives a header only") {
    const auto text = emit_report({}, ReportFormat::text);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    const auto machine = json::parse(emit_report({}, ReportFormat::machine));
    CHECK(machine["format"] == "nilgrade-report/1");
    CHECK(machine["records"].empty());
  }
  SUBCASE("single pass") {
    CheckReport r;
    r.spec = "s";
    r.check = "c";
    const auto doc = json::parse(emit_report({r}, ReportFormat::machine));
    REQUIRE(doc["records"].size() == 1);
    CHECK(doc["records"][0]["status"] == "pass");
  }
  SUBCASE("falsified records keep the whole witness, text is sorted by check name") {
    CheckReport a, b;
    a.spec = b.spec = "s";
    a.check = "zeta";
    b.check = "alpha";
    a.status = CheckStatus::falsified;
    a.witness = {{"f", "1"}, {"n", "2"}, {"element", "3 (degree 0)"}};
    const auto text = emit_report({a, b}, ReportFormat::text);
    CHECK(text.find("alpha") < text.find("zeta"));
    CHECK(text.find("element: 3 (degree 0)") != std::string::npos);
    const auto back = parse_machine_report(emit_report({a, b}, ReportFormat::machine));
    REQUIRE(back.size() == 2);
    CHECK(back[1].witness == a.witness);
    CHECK(back[1].status == CheckStatus::falsified);
  }
  CHECK_THROWS_AS(parse_machine_report("{}"), SpecError);
  CHECK_THROWS_AS(parse_report_format("yaml"), SpecError);
}

TEST_CASE("corpus runs do not depend on the number of jobs") {
  std::vector<std::string> files;
  for (const auto* n : {"z4_trivial", "t2_z2_c2_strong", "quotient_z9_3", "amalg_z4_id_2"}) files.push_back(corpus(n));
  const auto one = run_corpus(files, {}, 1);
  const auto three = run_corpus(files, {}, 3);
  CHECK(emit_report(one.reports, ReportFormat::text) == emit_report(three.reports, ReportFormat::text));
  CHECK(one.errors.empty());
}

TEST_CASE("counterexample search") {
  CHECK(counterexample_search(kConverseTarget, 0, 1).status == SearchStatus::empty);
  CHECK_THROWS_AS(counterexample_search("no_such_target", 10, 1), PreconditionError);
  CHECK(sample_spec(5, 17) == sample_spec(5, 17));
  const auto converse = counterexample_search(kConverseTarget, 60, 3);
  CHECK(converse.status == SearchStatus::found);
  for (const auto& c : converse.counterexamples) {
    // Each reported instance really has R_e m-nil clean and R not graded m-nil clean.
    const auto spec = parse_ring_spec(c.spec);
    CHECK(is_m_nil_clean_ring(*identity_component_ring(spec.grading), spec.m, false).holds);
    CHECK_FALSE(is_graded_m_nil_clean_ring(spec.grading, spec.m, false).holds);
  }
  const auto lifting = counterexample_search("lifting_lemma", 40, 3);
  CHECK(lifting.status == SearchStatus::exhausted);
  CHECK(lifting.exercised > 0);
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("check " + corpus("t2_gf3_c2_m2")) == 0);
  CHECK(run_cli("check " + corpus("z4_c2_group_ring") + " --checks group_ring_theorem") == 1);
  CHECK(run_cli("check " + corpus("t2_gf3_c2_m3") + " --checks graded_m_nil_clean --format machine") == 0);
  CHECK(run_cli("--max-ideals 3 check " + corpus("t2_gf3_c2_m3") + " --checks jg_graded_nil") == 3);
  CHECK(run_cli("radical --graded " + corpus("t2_z2_c2_strong")) == 0);
  CHECK(run_cli("export " + corpus("z4_trivial")) == 0);
  CHECK(run_cli("search --target " + std::string(kConverseTarget) + " --budget 20 --seed 2") == 0);
  CHECK(run_cli("search --target bogus --budget 5") == 2);
  CHECK(run_cli("check /nonexistent.json") == 2);
  CHECK(run_cli("frobnicate") == 2);
  const std::string bad = "/tmp/nilgrade_bad_spec.json";
  std::ofstream(bad) << "{\"ring\": {\"kind\": \"zn\", \"n\": 4, \"typo\": 1}}";
  CHECK(run_cli("check " + bad) == 2);
}
