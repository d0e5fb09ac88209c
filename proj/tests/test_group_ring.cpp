#include <numeric>

#include "doctest.h"
#include "nilgrade/ring.hpp"
#include "oracle.hpp"

using namespace nilgrade;

TEST_CASE("cyclic and dihedral groups satisfy the group laws") {
  for (std::size_t n : {1, 2, 3, 6}) {
    const auto c = make_cyclic(n);
    CHECK(c.order() == n);
    CHECK(c.is_abelian());
    for (FiniteGroup::Index a = 0; a < n; ++a) CHECK(c.multiply(a, c.inverse(a)) == c.identity());
  }
  const auto d3 = make_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK_FALSE(d3.is_abelian());
  const auto d1 = make_dihedral(1);
  CHECK(d1.order() == 2);
}

TEST_CASE("group tables are validated") {
  // Not associative: a 3-element loop.
  std::vector<FiniteGroup::Index> bad{0, 1, 2, 1, 0, 0, 2, 0, 0};
  CHECK_THROWS_AS(FiniteGroup(3, bad), ValidationError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(make_cyclic(0), PreconditionError);
}

TEST_CASE("element orders and p-groups") {
  const auto c4 = make_cyclic(4);
  CHECK(element_order(c4, 1) == 4);
  CHECK(element_order(c4, 2) == 2);
  CHECK(is_p_group(c4, 2));
  CHECK_FALSE(is_p_group(make_cyclic(6), 2));
  CHECK(is_p_group(make_dihedral(4), 2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("torsion freeness: g^k = e forces g = e") {
  const auto c2 = GradingGroup::finite(make_cyclic(2));
  const auto c3 = GradingGroup::finite(make_cyclic(3));
  CHECK(is_m_torsion_free(c2, 1));  // m = 2
  CHECK_FALSE(is_m_torsion_free(c2, 2));
  CHECK(is_m_torsion_free(c3, 2));
  CHECK_FALSE(is_m_torsion_free(c3, 3));
  CHECK(is_m_torsion_free(GradingGroup::integers(), 5));
  CHECK(is_m_torsion_free(GradingGroup::trivial(), 4));
  // Oracle over the table for a product group.
  const auto g = direct_product(make_cyclic(2), make_cyclic(3));
  for (std::uint64_t k = 1; k <= 7; ++k) {
    bool expected = true;
    for (FiniteGroup::Index a = 1; a < g.order(); ++a) {
      FiniteGroup::Index p = 0;
      for (std::uint64_t i = 0; i < k; ++i) p = g.multiply(p, a);
      if (p == 0) expected = false;
    }
    CHECK(is_m_torsion_free(GradingGroup::finite(g), k) == expected);
  }
}

TEST_CASE("integer grading group arithmetic") {
  const auto z = GradingGroup::integers();
  CHECK(z.multiply(Degree{2}, Degree{-5}) == Degree{-3});
  CHECK(z.inverse(Degree{4}) == Degree{-4});
  CHECK(z.power(Degree{3}, 4) == Degree{12});
  CHECK_FALSE(z.is_finite());
}

TEST_CASE("Z_n arithmetic matches modular arithmetic") {
  for (std::uint32_t n : {2U, 4U, 6U, 9U}) {
    const auto r = make_zn(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        CHECK(r->add(a, b) == (a + b) % n);
        CHECK(r->mul(a, b) == (a * b) % n);
      }
    CHECK(verify_ring_axioms(*r));
  }
}

TEST_CASE("GF(4) multiplication is polynomial multiplication modulo x^2+x+1") {
  const auto f = make_gf(2, 2);
  REQUIRE(f->size() == 4);
  // Encoding a + b x as a + 2b.
  auto ref = [](Element u, Element v) {
    const unsigned a0 = u & 1, a1 = u >> 1, b0 = v & 1, b1 = v >> 1;
    unsigned c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
    // x^2 = x + 1
    c0 += c2;
    c1 += c2;
    return static_cast<Element>((c0 % 2) + 2 * (c1 % 2));
  };
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(f->mul(a, b) == ref(a, b));
  for (Element a = 1; a < 4; ++a) CHECK(f->is_unit(a));
  CHECK_THROWS(make_gf(4, 1));
}

TEST_CASE("element classification agrees with brute force") {
  for (RingPtr r : {RingPtr(make_zn(8)), RingPtr(make_zn(12)), RingPtr(make_gf(3, 2))}) {
    const oracle::Tables t(*r);
    for (Element x = 0; x < r->size(); ++x) {
      CHECK(r->is_nilpotent(x) == t.nilpotent(x));
      CHECK(r->is_unit(x) == t.unit(x));
      for (unsigned m : {2U, 3U, 4U}) CHECK(r->is_m_potent(x, m) == t.m_potent(x, m));
    }
  }
  const auto z8 = make_zn(8);
  CHECK(is_nilpotent(*z8, 4).index == 2U);
  CHECK(is_nilpotent(*z8, 2).index == 3U);
  CHECK_FALSE(is_nilpotent(*z8, 3).nilpotent);
  CHECK(is_unit(*z8, 3).inverse == 3U);
}

TEST_CASE("Jacobson radical agrees with the 1 - rx characterisation") {
  std::vector<RingPtr> rings{make_zn(4), make_zn(12), make_zn(9), make_gf(2, 2),
                             product_ring({make_zn(4), make_zn(3)})};
  for (const auto& r : rings) {
    const auto j = jacobson_radical(*r).to_vector();
    CHECK(std::set<Element>(j.begin(), j.end()) == oracle::jacobson(oracle::Tables(*r)));
  }
  CHECK(jacobson_radical(*make_zn(12)).size() == 2);  // {0, 6}
}

TEST_CASE("ideals, quotients and subrings") {
  const auto z12 = make_zn(12);
  const ElementSet three = additive_closure(*z12, {3});
  CHECK(three.size() == 4);
  CHECK_FALSE(two_sided_ideal_violation(*z12, three));
  const ElementSet not_ideal(12, {0, 1});
  CHECK(two_sided_ideal_violation(*z12, not_ideal));
  const auto q = quotient_ring(z12, three);
  CHECK(q.ring->size() == 3);
  CHECK(verify_ring_axioms(*q.ring));
  CHECK_THROWS_AS(quotient_ring(z12, not_ideal), ValidationError);
  const auto nil = additive_closure(*z12, {6});
  CHECK(is_nil_set(*z12, nil));
  CHECK(ideal_nilpotency_index(*z12, nil) == 2U);
  CHECK_FALSE(is_nil_set(*z12, three));
}

TEST_CASE("table rings: axioms are checked by the caller") {
  // Z2[x]/(x^2)
  const std::vector<Element> add{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const std::vector<Element> mul{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1};
  auto r = std::make_shared<TableRing>(4, add, mul, 1, "D", std::vector<std::string>{"0", "1", "x", "1+x"});
  CHECK(verify_ring_axioms(*r));
  CHECK(find_element(*r, "x") == 2U);
  auto bad_mul = mul;
  bad_mul[2 * 4 + 2] = 1;  // x^2 = 1 breaks distributivity with this addition
  auto bad = std::make_shared<TableRing>(4, add, bad_mul, 1, "B");
  CHECK_THROWS_AS(verify_ring_axioms(*bad), ValidationError);
}

TEST_CASE("product rings are coordinatewise") {
  const auto p = product_ring({make_zn(2), make_zn(3)});
  CHECK(p->size() == 6);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      for (std::size_t i = 0; i < 2; ++i) {
        const auto& f = *p->factors()[i];
        CHECK(p->coordinate(p->mul(a, b), i) == f.mul(p->coordinate(a, i), p->coordinate(b, i)));
      }
  CHECK(p->format(p->compose({1, 2})) == "(1, 2)");
}
