#include "doctest.h"
#include "nilgrade/constructions.hpp"
#include "oracle.hpp"

using namespace nilgrade;

namespace {
const GradingGroup C2 = GradingGroup::finite(make_cyclic(2));
}

TEST_CASE("matrix multiplication matches the textbook formula") {
  const auto base = make_zn(3);
  const MatrixRing m(base, 2, false);
  REQUIRE(m.size() == 81);
  for (Element a = 0; a < 81; a += 7)
    for (Element b = 0; b < 81; b += 5) {
      const auto x = m.entries(a), y = m.entries(b), z = m.entries(m.mul(a, b));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          unsigned s = 0;
          for (std::size_t k = 0; k < 2; ++k) s += x[i * 2 + k] * y[k * 2 + j];
          CHECK(z[i * 2 + j] == s % 3);
        }
    }
  CHECK(m.format(m.from_entries({0, 2, 2, 0})) == "[[0,2],[2,0]]");
  CHECK(verify_ring_axioms(m));
}

TEST_CASE("M2(Z3) with diagonal in degree 0 and antidiagonal in degree 1") {
  const auto g = matrix_graded(Grading::trivial(make_zn(3), C2), 2, {Degree{0}, Degree{1}});
  const auto& r = g.ring();
  const Element a = *find_element(r, "[[0,2],[2,0]]");
  CHECK(g.degree_of(a) == DegreeOf::of(Degree{1}));
  CHECK(r.is_m_potent(a, 3));
  CHECK(g.degree_of(*find_element(r, "[[1,0],[0,2]]")) == DegreeOf::of(Degree{0}));
  CHECK_FALSE(g.is_homogeneous(*find_element(r, "[[1,1],[0,0]]")));
  CHECK_FALSE(is_m_torsion_free(g.group(), 2));
}

TEST_CASE("upper triangular rings and their zero-diagonal ideal") {
  const auto t = triangular_graded(Grading::trivial(make_gf(3, 1), C2), 2, {Degree{0}, Degree{1}});
  CHECK(t.grading.ring().size() == 27);
  CHECK(t.grading.ring().label() == "T2(GF3)");
  CHECK(t.zero_diagonal.size() == 3);
  CHECK(is_nil_set(t.grading.ring(), t.zero_diagonal));
  const auto t3 = triangular_graded(Grading::trivial(make_zn(2), GradingGroup::integers()), 3,
                                    {Degree{0}, Degree{1}, Degree{2}});
  CHECK(t3.grading.ring().size() == 64);
  CHECK(t3.zero_diagonal.size() == 8);
  // E13 sits in degree g1^-1 g3 = 2.
  CHECK(t3.grading.degree_of(*find_element(t3.grading.ring(), "[[0,0,1],[0,0,0],[0,0,0]]")) == DegreeOf::of(Degree{2}));
}

TEST_CASE("sigma over a graded base shifts each entry's degree") {
  const std::vector<Element> add{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const std::vector<Element> mul{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1};
  auto d = std::make_shared<TableRing>(4, add, mul, 1, "D", std::vector<std::string>{"0", "1", "x", "1+x"});
  const auto base = Grading::verify(d, GradingGroup::integers(), {{Degree{0}, {1}}, {Degree{1}, {2}}});
  const auto t = triangular_graded(base, 2, {Degree{0}, Degree{1}});
  const auto& r = t.grading.ring();
  // x at (1,2) has degree 0^-1 * 1 * 1 = 2.
  CHECK(t.grading.degree_of(*find_element(r, "[[0,x],[0,0]]")) == DegreeOf::of(Degree{2}));
  CHECK(t.grading.degree_of(*find_element(r, "[[x,0],[0,x]]")) == DegreeOf::of(Degree{1}));
}

TEST_CASE("diagonal Z-grading") {
  const auto g = diagonal_z_grading(make_zn(4), 2);
  CHECK(g.ring().size() == 256);
  CHECK(g.degree_of(*find_element(g.ring(), "[[0,1],[0,0]]")) == DegreeOf::of(Degree{1}));
  CHECK(g.degree_of(*find_element(g.ring(), "[[0,0],[3,0]]")) == DegreeOf::of(Degree{-1}));
}

TEST_CASE("group ring Z4[C2]") {
  const auto rg = group_ring_graded_auto(Grading::trivial(make_zn(4), C2), make_cyclic(2));
  const auto& r = rg.grading.ring();
  CHECK(r.size() == 16);
  CHECK(verify_ring_axioms(r));
  REQUIRE_FALSE(rg.outcomes.empty());
  CHECK(rg.outcomes.front().valid);
  const auto aug = augmentation_ideal(rg.grading);
  CHECK(aug.elements.size() == 4);
  REQUIRE(aug.nilpotency_index);
  CHECK(*aug.nilpotency_index == 3);  // (1-g)^2 = 2(1-g), (1-g)^3 = 0 over Z4
  const Element g = *find_element(r, "(1)g1");
  CHECK(rg.grading.degree_of(g) == DegreeOf::of(Degree{1}));
  CHECK(r.mul(g, g) == r.one());
}

TEST_CASE("group ring over a non-abelian group is a ring") {
  const auto d3 = make_dihedral(3);
  const auto rg = group_ring_graded_auto(Grading::trivial(make_zn(2), GradingGroup::finite(d3)), d3);
  CHECK(rg.grading.ring().size() == 64);
  CHECK_FALSE(rg.grading.ring().is_commutative());
  CHECK(verify_ring_axioms(rg.grading.ring()));
}

TEST_CASE("amalgamation Z4 join Z4 along (2)") {
  AmalgamationSpec s{Grading::trivial(make_zn(4)), Grading::trivial(make_zn(4)), {0, 1, 2, 3},
                     ElementSet(4, {0, 2})};
  const auto am = amalgamation(s);
  CHECK(am.grading.ring().size() == 8);
  CHECK(am.image.ring().size() == 4);  // f(A) + J = Z4
  CHECK(verify_ring_axioms(am.grading.ring()));
  SUBCASE("f must be a ring homomorphism") {
    AmalgamationSpec bad = s;
    bad.f = {0, 3, 2, 1};  // negation is additive but not unital
    CHECK_THROWS_AS(amalgamation(bad), ValidationError);
  }
  SUBCASE("J must be an ideal of B") {
    AmalgamationSpec bad = s;
    bad.j = ElementSet(4, {0, 1});
    CHECK_THROWS(amalgamation(bad));
  }
}

TEST_CASE("product gradings") {
  const auto a = triangular_graded(Grading::trivial(make_zn(2), C2), 2, {Degree{0}, Degree{1}}).grading;
  const auto b = Grading::trivial(make_zn(3), C2);
  const auto p = product_grading({a, b});
  CHECK(p.ring().size() == 24);
  CHECK(p.components().size() == 2);
  CHECK_THROWS(product_grading({a, Grading::trivial(make_zn(3))}));  // groups differ
}
