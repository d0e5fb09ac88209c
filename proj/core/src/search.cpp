#include "nilgrade/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

#include "nilgrade/checks.hpp"
#include "nilgrade/nilclean.hpp"
#include "nilgrade/spec_io.hpp"

namespace nilgrade {

using nlohmann::json;

const std::vector<std::string>& forward_targets() {
  static const std::vector<std::string> names{
      "same_component",
      "homomorphic_image",
      "product_law",
      "mpotent_degree_lemma",
      "torsion_free_corollary",
      "necessary_conditions",
      "lifting_lemma",
      "quotient_theorem",
      "jg_graded_nil",
      "jg_quotient_corollary",
      "sufficient_condition_orthogonal",
      "sufficient_condition_graded_local",
      "pi_regular_from_strongly_m_nil_clean",
      "identity_component_pi_regular",
      "commuting_equivalence",
      "graded_commuting_equivalence",
      "pi_regular_uniqueness",
      "amalgamation_theorem",
      "matrix_theorem",
      "diagonal_z_theorem",
      "triangular_theorem",
      "group_ring_theorem",
  };
  return names;
}

std::vector<std::string> search_targets() {
  std::vector<std::string> out{kConverseTarget, kAllForwardTarget};
  for (const auto& t : forward_targets()) out.push_back(t);
  return out;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::empty: return "empty";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

struct GroupChoice {
  json spec;
  std::vector<std::int64_t> degrees;  // a few degrees to draw sigma from
};

GroupChoice random_group(Rng& rng) {
  static const std::vector<GroupChoice> groups{
      {{{"kind", "trivial"}}, {0}},
      {{{"kind", "cyclic"}, {"n", 2}}, {0, 1}},
      {{{"kind", "cyclic"}, {"n", 3}}, {0, 1, 2}},
      {{{"kind", "cyclic"}, {"n", 4}}, {0, 1, 2, 3}},
      {{{"kind", "integer"}}, {-1, 0, 1, 2}},
  };
  return pick(rng, groups);
}

json leaf(Rng& rng, std::size_t max_size, const json* group) {
  static const std::vector<json> leaves{
      {{"kind", "zn"}, {"n", 2}}, {{"kind", "zn"}, {"n", 3}}, {{"kind", "zn"}, {"n", 4}},
      {{"kind", "zn"}, {"n", 5}}, {{"kind", "zn"}, {"n", 6}}, {{"kind", "zn"}, {"n", 8}},
      {{"kind", "zn"}, {"n", 9}}, {{"kind", "gf"}, {"p", 2}, {"k", 2}},
  };
  auto size = [](const json& l) { return l["kind"] == "zn" ? l["n"].get<std::size_t>() : std::size_t{4}; };
  std::vector<json> fit;
  for (const auto& l : leaves)
    if (size(l) <= max_size) fit.push_back(l);
  json out = pick(rng, fit);
  if (group) out["grading"] = {{"group", *group}, {"trivial", true}};
  return out;
}

json sigma(Rng& rng, const GroupChoice& g, std::size_t n) {
  json s = json::array();
  for (std::size_t i = 0; i < n; ++i) s.push_back(pick(rng, g.degrees));
  return s;
}

json triangular(Rng& rng, const GroupChoice& g, std::size_t n) {
  const std::size_t max_base = n == 2 ? 9 : 3;
  return {{"kind", "triangular"}, {"base", leaf(rng, max_base, &g.spec)}, {"n", n}, {"sigma", sigma(rng, g, n)}};
}

json ring(Rng& rng) {
  const GroupChoice g = random_group(rng);
  switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0:
      return leaf(rng, 9, &g.spec);
    case 1:
      return triangular(rng, g, 2);
    case 2:
      return triangular(rng, g, 3);
    case 3:
      return {{"kind", "matrix"}, {"base", leaf(rng, 4, &g.spec)}, {"n", 2}, {"sigma", sigma(rng, g, 2)}};
    case 4:
      return {{"kind", "diagonal_z"}, {"base", leaf(rng, 4, nullptr)}, {"n", 2}};
    case 5: {
      static const std::vector<json> groups{{{"kind", "cyclic"}, {"n", 2}}, {{"kind", "cyclic"}, {"n", 3}}};
      return {{"kind", "group_ring"}, {"base", leaf(rng, 4, nullptr)}, {"group", pick(rng, groups)}, {"mode", "auto"}};
    }
    case 6: {
      json a = std::uniform_int_distribution<int>(0, 1)(rng) ? triangular(rng, g, 2) : leaf(rng, 9, &g.spec);
      if (a["kind"] == "triangular") a["base"] = leaf(rng, 3, &g.spec);
      return {{"kind", "product"}, {"factors", {a, leaf(rng, 4, &g.spec)}}};
    }
    case 7: {
      json base = triangular(rng, g, std::uniform_int_distribution<std::size_t>(2, 3)(rng));
      const std::size_t n = base["n"].get<std::size_t>();
      json ideal;
      if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        ideal = "graded_jacobson";
      } else {
        json gens = json::array();
        for (std::size_t i = 0; i + 1 < n; ++i) {
          json row = json::array();
          std::string m = "[";
          for (std::size_t r = 0; r < n; ++r) {
            m += r ? ",[" : "[";
            for (std::size_t c = 0; c < n; ++c) m += std::string(c ? "," : "") + (r == i && c == i + 1 ? "1" : "0");
            m += "]";
          }
          gens.push_back(m + "]");
        }
        ideal = {{"generators", gens}};
      }
      return {{"kind", "quotient"}, {"base", base}, {"ideal", ideal}};
    }
    default: {
      static const std::vector<std::pair<int, std::vector<int>>> zn{{4, {0, 2}}, {8, {0, 2, 4}}, {9, {0, 3}}, {6, {0, 2, 3}}, {3, {0}}};
      const auto& [n, js] = pick(rng, zn);
      json l = {{"kind", "zn"}, {"n", n}};
      if (g.spec["kind"] != "trivial") l["grading"] = {{"group", g.spec}, {"trivial", true}};
      return {{"kind", "amalgamation"}, {"a", l}, {"b", l}, {"f", "identity"}, {"j", {pick(rng, js)}}};
    }
  }
}

struct Outcome {
  bool exercised = false;
  bool skipped = false;
  std::vector<std::pair<std::string, std::string>> violations;  // check, detail
};

Outcome evaluate(const json& doc, const std::string& target, const Limits& limits) {
  Outcome out;
  std::optional<RingSpec> spec;
  try {
    spec.emplace(parse_ring_spec(doc, limits));
  } catch (const ResourceError&) {
    out.skipped = true;
    return out;
  } catch (const ValidationError&) {
    // A sampled construction may legitimately fail to be graded (a sigma or
    // mode that breaks multiplicativity). That is not a sample.
    return out;
  }
  try {
    if (target == kConverseTarget) {
      const Grading& g = spec->grading;
      const bool re = is_m_nil_clean_ring(*identity_component_ring(g), spec->m, false).holds;
      if (!re) return out;
      out.exercised = true;
      const auto d = is_graded_m_nil_clean_ring(g, spec->m, false);
      if (!d.holds)
        out.violations.emplace_back(target, "R_e is " + std::to_string(spec->m) + "-nil clean but " + render(g, *d.failing) +
                                     " has no graded decomposition (" + d.reason + ")");
      return out;
    }
    const std::vector<std::string> checks =
        target == kAllForwardTarget ? forward_targets() : std::vector<std::string>{target};
    for (const auto& r : run_checks(*spec, checks, limits)) {
      if (r.status == CheckStatus::skipped_resource) out.skipped = true;
      if (!r.vacuous && r.status == CheckStatus::pass) out.exercised = true;
      if (r.status == CheckStatus::falsified) out.violations.emplace_back(r.check, r.detail);
    }
  } catch (const ResourceError&) {
    out.skipped = true;
  }
  return out;
}

}  // namespace

json sample_spec(std::uint64_t seed, std::size_t index) {
  // Each sample owns a stream derived from (seed, index), so workers never
  // share generator state.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
  Rng rng(seq);
  static const std::vector<unsigned> ms{2, 2, 2, 3, 3, 4};
  const unsigned m = pick(rng, ms);
  json r = ring(rng);
  return {{"name", "sample-" + std::to_string(index)}, {"m", m}, {"ring", std::move(r)}};
}

SearchReport counterexample_search(const std::string& target, std::size_t budget, std::uint64_t seed,
                                   const Limits& limits, unsigned jobs) {
  const auto targets = search_targets();
  if (std::find(targets.begin(), targets.end(), target) == targets.end())
    throw PreconditionError("unknown search target '" + target + "'");
  SearchReport report;
  report.target = target;
  report.budget = budget;
  report.seed = seed;
  if (budget == 0) return report;

  std::vector<json> samples;
  std::map<std::string, std::size_t> index_of;
  std::vector<std::size_t> unique_of(budget);
  std::vector<std::size_t> first_sample;
  for (std::size_t i = 0; i < budget; ++i) {
    json s = sample_spec(seed, i);
    json key = s;
    key.erase("name");
    auto [it, inserted] = index_of.emplace(key.dump(), first_sample.size());
    if (inserted) {
      first_sample.push_back(i);
      samples.push_back(std::move(s));
    }
    unique_of[i] = it->second;
  }
  std::vector<Outcome> outcomes(samples.size());
  jobs = std::max(1U, jobs);
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < samples.size(); i += jobs) outcomes[i] = evaluate(samples[i], target, limits);
    }));
  for (auto& f : workers) f.get();

  report.samples = budget;
  report.distinct = samples.size();
  for (std::size_t i = 0; i < budget; ++i) {
    const Outcome& o = outcomes[unique_of[i]];
    report.exercised += o.exercised;
    report.skipped_resource += o.skipped;
  }
  for (std::size_t u = 0; u < samples.size(); ++u)
    for (const auto& [check, detail] : outcomes[u].violations)
      report.counterexamples.push_back({first_sample[u], samples[u], check, detail});
  report.status = report.counterexamples.empty() ? SearchStatus::exhausted : SearchStatus::found;
  return report;
}

json to_json(const SearchReport& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"sample", c.sample}, {"check", c.check}, {"detail", c.detail}, {"spec", c.spec}});
  return {{"target", r.target},
          {"budget", r.budget},
          {"seed", r.seed},
          {"samples", r.samples},
          {"distinct", r.distinct},
          {"exercised", r.exercised},
          {"skipped_resource", r.skipped_resource},
          {"status", to_string(r.status)},
          {"counterexamples", std::move(ces)}};
}

}  // namespace nilgrade
