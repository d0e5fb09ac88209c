#include "doctest.h"
#include "nilgrade/constructions.hpp"
#include "nilgrade/grading.hpp"
#include "oracle.hpp"

using namespace nilgrade;

namespace {

const GradingGroup C2 = GradingGroup::finite(make_cyclic(2));

std::shared_ptr<const TableRing> dual_numbers() {
  const std::vector<Element> add{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const std::vector<Element> mul{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1};
  return std::make_shared<TableRing>(4, add, mul, 1, "D", std::vector<std::string>{"0", "1", "x", "1+x"});
}

std::set<Element> as_set(const ElementSet& s) {
  const auto v = s.to_vector();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("trivial grading puts everything in degree e") {
  const auto g = Grading::trivial(make_zn(6), C2);
  REQUIRE(g.components().size() == 1);
  CHECK(g.components()[0].degree == Degree{0});
  for (Element x = 1; x < 6; ++x) CHECK(g.degree_of(x) == DegreeOf::of(Degree{0}));
  CHECK(g.degree_of(0).is_zero());
}

TEST_CASE("Z-graded dual numbers") {
  const auto r = dual_numbers();
  const auto g = Grading::verify(r, GradingGroup::integers(), {{Degree{0}, {1}}, {Degree{1}, {2}}});
  CHECK(g.degree_of(2) == DegreeOf::of(Degree{1}));
  CHECK_FALSE(g.is_homogeneous(3));
  const auto parts = g.decompose(3);
  CHECK(parts.size() == 2);
  CHECK(parts.at(Degree{0}) == 1);
  CHECK(parts.at(Degree{1}) == 2);
  CHECK(g.support() == std::vector<Degree>{Degree{0}, Degree{1}});
}

TEST_CASE("grading validation rejects each broken law") {
  const auto r = dual_numbers();
  SUBCASE("components overlap, so the sum is not direct") {
    CHECK_THROWS_AS(Grading::verify(r, GradingGroup::integers(), {{Degree{0}, {1}}, {Degree{1}, {3}}, {Degree{2}, {2}}}),
                    ValidationError);
  }
  SUBCASE("components do not span") {
    CHECK_THROWS_AS(Grading::verify(r, GradingGroup::integers(), {{Degree{0}, {1}}}), ValidationError);
  }
  SUBCASE("1 outside R_e") {
    CHECK_THROWS_AS(Grading::verify(r, GradingGroup::integers(), {{Degree{0}, {2}}, {Degree{1}, {1}}}), ValidationError);
  }
  SUBCASE("multiplicativity: over C2, 1+x in degree 1 is fine, over Z its square 1 lands in degree 0 not 2") {
    CHECK_NOTHROW(Grading::verify(r, C2, {{Degree{0}, {1}}, {Degree{1}, {3}}}));
    CHECK_THROWS_AS(Grading::verify(r, GradingGroup::integers(), {{Degree{0}, {1}}, {Degree{1}, {3}}}), ValidationError);
  }
  SUBCASE("degree outside the group") {
    CHECK_THROWS(Grading::verify(r, C2, {{Degree{0}, {1}}, {Degree{5}, {2}}}));
  }
}

TEST_CASE("homogeneous elements of the GF(3) triangular ring: 10 nonzero, 11 with zero") {
  const auto t = triangular_graded(Grading::trivial(make_gf(3, 1), C2), 2, {Degree{0}, Degree{1}});
  const auto hom = homogeneous_elements(t.grading);
  CHECK(hom.size() == 11);
  std::size_t nonzero = 0;
  for (const auto& h : hom) nonzero += h.element != 0;
  CHECK(nonzero == 10);
}

TEST_CASE("graded Jacobson radical agrees with subset enumeration on small rings") {
  std::vector<Grading> rings;
  rings.push_back(triangular_graded(Grading::trivial(make_zn(2), C2), 2, {Degree{0}, Degree{1}}).grading);
  rings.push_back(Grading::verify(dual_numbers(), GradingGroup::integers(), {{Degree{0}, {1}}, {Degree{1}, {2}}}));
  rings.push_back(Grading::verify(dual_numbers(), C2, {{Degree{0}, {1}}, {Degree{1}, {2}}}));
  rings.push_back(group_ring_graded_auto(Grading::trivial(make_zn(4), C2), make_cyclic(2)).grading);
  rings.push_back(matrix_graded(Grading::trivial(make_zn(2), C2), 2, {Degree{0}, Degree{1}}));
  rings.push_back(Grading::trivial(make_zn(8), C2));
  for (const auto& g : rings) {
    INFO(g.ring().label());
    const auto jg = graded_jacobson_radical(g);
    CHECK(as_set(jg.elements) == oracle::graded_jacobson(g));
    CHECK_FALSE(two_sided_ideal_violation(g.ring(), jg.elements));
    CHECK(is_homogeneous_subgroup(g, jg.elements));
    // The number of graded-maximal right ideals matches too.
    const auto all = oracle::homogeneous_right_ideals(g);
    const std::uint32_t full = (1U << g.ring().size()) - 1;
    std::size_t maximal = 0;
    for (auto s : all) {
      if (s == full) continue;
      bool top = true;
      for (auto u : all)
        if (u != full && u != s && (u & s) == s) top = false;
      maximal += top;
    }
    CHECK(graded_maximal_right_ideals(g).size() == maximal);
  }
}

TEST_CASE("graded-local") {
  // Z2[C3] graded by C3 is a graded division ring.
  const auto z2c3 = group_ring_graded_auto(Grading::trivial(make_zn(2), GradingGroup::finite(make_cyclic(3))), make_cyclic(3));
  CHECK(is_graded_local(z2c3.grading));
  CHECK(graded_jacobson_radical(z2c3.grading).elements.size() == 1);
  CHECK(is_graded_local(Grading::trivial(make_zn(4))));
  CHECK_FALSE(is_graded_local(Grading::trivial(make_zn(6))));
}

TEST_CASE("graded quotients") {
  const auto t = triangular_graded(Grading::trivial(make_gf(3, 1), C2), 2, {Degree{0}, Degree{1}});
  CHECK(is_graded_nil(t.grading, t.zero_diagonal));
  const auto q = graded_quotient(t.grading, t.zero_diagonal);
  CHECK(q.grading.ring().size() == 9);
  CHECK(q.grading.components().size() == 1);
  // Z4[C2]: the augmentation ideal is two-sided but not homogeneous.
  const auto rg = group_ring_graded_auto(Grading::trivial(make_zn(4), C2), make_cyclic(2));
  const auto aug = augmentation_ideal(rg.grading);
  CHECK_FALSE(is_homogeneous_subgroup(rg.grading, aug.elements));
  CHECK_THROWS_AS(graded_quotient(rg.grading, aug.elements), ValidationError);
}

TEST_CASE("right ideal closures") {
  const auto t = triangular_graded(Grading::trivial(make_zn(2), C2), 2, {Degree{0}, Degree{1}});
  const auto& r = t.grading.ring();
  const Element e11 = *find_element(r, "[[1,0],[0,0]]");
  const auto right = homogeneous_right_ideal_closure(t.grading, {e11});
  CHECK(right.elements.size() == 4);  // e11 R = first row
  CHECK_FALSE(right_ideal_violation(r, right.elements));
  const auto two = homogeneous_two_sided_ideal_closure(t.grading, {e11});
  CHECK(two.elements.size() == 4);
  CHECK_FALSE(two_sided_ideal_violation(r, two.elements));
}
