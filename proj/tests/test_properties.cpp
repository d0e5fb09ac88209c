// Randomised invariants over the sampled families, with fixed seeds.

#include <random>

#include "doctest.h"
#include "nilgrade/checks.hpp"
#include "nilgrade/nilclean.hpp"
#include "nilgrade/search.hpp"
#include "oracle.hpp"

using namespace nilgrade;
using nlohmann::json;

namespace {

// Sampled descriptions that build, up to a size bound.
std::vector<RingSpec> samples(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  std::vector<RingSpec> out;
  for (std::size_t i = 0; out.size() < count && i < count * 20; ++i) {
    try {
      auto spec = parse_ring_spec(sample_spec(seed, i));
      if (spec.grading.ring().size() <= max_size) out.push_back(std::move(spec));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("every element is the sum of its homogeneous parts") {
  for (const auto& spec : samples(11, 40, 729)) {
    const Grading& g = spec.grading;
    const auto& r = g.ring();
    INFO(spec.source.dump());
    for (Element x = 0; x < r.size(); ++x) {
      Element sum = 0;
      for (const auto& [d, part] : g.decompose(x)) {
        CHECK(g.degree_of(part) == DegreeOf::of(d));
        sum = r.add(sum, part);
      }
      REQUIRE(sum == x);
    }
  }
}

TEST_CASE("components multiply into the product degree") {
  for (const auto& spec : samples(12, 40, 256)) {
    const Grading& g = spec.grading;
    const auto& G = g.group();
    INFO(spec.source.dump());
    for (const auto& a : g.components())
      for (const auto& b : g.components()) {
        const Degree d = G.multiply(a.degree, b.degree);
        for (Element x : a.members)
          for (Element y : b.members) {
            const DegreeOf got = g.degree_of(g.ring().mul(x, y));
            REQUIRE((got.is_zero() || got == DegreeOf::of(d)));
          }
      }
    CHECK(g.degree_of(g.ring().one()) == DegreeOf::of(G.identity()));
  }
}

TEST_CASE("sampled constructions satisfy the ring axioms") {
  // Exhaustive axioms cost |R|^3, so keep the sampled rings small.
  for (const auto& spec : samples(13, 30, 128)) {
    INFO(spec.source.dump());
    CHECK_NOTHROW(verify_ring_axioms(spec.grading.ring()));
  }
}

TEST_CASE("graded decision matches the definition on sampled rings") {
  for (const auto& spec : samples(14, 50, 81)) {
    INFO(spec.source.dump());
    for (bool strong : {false, true})
      CHECK(is_graded_m_nil_clean_ring(spec.grading, spec.m, strong).holds ==
            oracle::graded_m_nil_clean_ring(spec.grading, spec.m, strong));
  }
}

TEST_CASE("ring decision matches brute force on sampled rings") {
  for (const auto& spec : samples(15, 50, 81)) {
    INFO(spec.source.dump());
    const oracle::Tables t(spec.grading.ring());
    CHECK(is_m_nil_clean_ring(spec.grading.ring(), spec.m, false).holds == oracle::m_nil_clean_ring(t, spec.m));
  }
}

TEST_CASE("graded Jacobson radical is a homogeneous two-sided ideal") {
  for (const auto& spec : samples(16, 30, 256)) {
    INFO(spec.source.dump());
    const auto jg = graded_jacobson_radical(spec.grading);
    CHECK(is_homogeneous_subgroup(spec.grading, jg.elements));
    CHECK_FALSE(two_sided_ideal_violation(spec.grading.ring(), jg.elements));
  }
}

TEST_CASE("graded Jacobson radical agrees with subset enumeration on tiny samples") {
  for (const auto& spec : samples(17, 40, 16)) {
    INFO(spec.source.dump());
    const auto v = graded_jacobson_radical(spec.grading).elements.to_vector();
    CHECK(std::set<Element>(v.begin(), v.end()) == oracle::graded_jacobson(spec.grading));
  }
}

TEST_CASE("found certificates always re-verify") {
  std::mt19937 rng(18);
  for (const auto& spec : samples(18, 30, 729)) {
    const Grading& g = spec.grading;
    const auto hom = homogeneous_elements(g);
    INFO(spec.source.dump());
    for (int k = 0; k < 20; ++k) {
      const Element x = hom[std::uniform_int_distribution<std::size_t>(0, hom.size() - 1)(rng)].element;
      for (bool strong : {false, true})
        if (auto c = graded_m_nil_clean_witness(g, x, spec.m, strong)) CHECK_NOTHROW(verify_certificate(g, *c, strong));
      if (auto p = graded_pi_regular_witness(g, x)) CHECK_NOTHROW(verify_graded_certificate(g, *p));
    }
  }
}

TEST_CASE("export then parse is the identity on sampled rings") {
  for (const auto& spec : samples(19, 25, 256)) {
    INFO(spec.source.dump());
    const auto back = parse_ring_spec(json{{"ring", to_table_spec(spec.grading)}});
    const auto& a = spec.grading.ring();
    const auto& b = back.grading.ring();
    REQUIRE(a.size() == b.size());
    for (Element x = 0; x < a.size(); ++x) {
      REQUIRE(back.grading.degree_of(x) == spec.grading.degree_of(x));
      for (Element y = 0; y < a.size(); ++y) REQUIRE(a.mul(x, y) == b.mul(x, y));
    }
  }
}

TEST_CASE("decision checks never falsify without an expectation") {
  for (const auto& spec : samples(20, 25, 256)) {
    INFO(spec.source.dump());
    for (const auto& r : run_checks(spec, {"graded_m_nil_clean", "graded_strongly_m_nil_clean", "necessary_conditions",
                                           "mpotent_degree_lemma", "same_component"}))
      CHECK(r.status != CheckStatus::falsified);
  }
}
