#include <random>

#include "doctest.h"
#include "grc/group_ring.hpp"

using namespace grc;

namespace {

const RingSpec f2{0};
const RingSpec r1{1};

GroupRingElement random_element(std::mt19937_64& rng, RingSpec ring, const GroupPtr& g) {
  auto v = GroupRingElement::zero(ring, g);
  for (auto& c : v.coeffs)
    c = RingValue(ring, static_cast<std::uint16_t>(rng() % ring.cardinality()));
  return v;
}

}  // namespace

TEST_CASE("element parsing") {
  const auto d8 = make_dihedral(8);
  const auto v = parse_element("1 + b*a + b*a^2 + b*a^3", f2, d8);
  for (int i = 0; i < 8; ++i)
    CHECK(v.coeffs[i] == ((i == 0 || i >= 5) ? RingValue::one(f2) : RingValue::zero(f2)));

  CHECK(parse_element("0", f2, d8).is_zero());

  const auto c2 = make_cyclic(2);
  const auto w = parse_element("u1*e + (1+u1)*h", r1, c2);
  CHECK(w.coeffs[0] == parse_ring_literal(r1, "u1"));
  CHECK(w.coeffs[1] == parse_ring_literal(r1, "1+u1"));

  // juxtaposed parenthesized products and words
  const auto m16 = make_named("m16");
  const auto p = parse_element("(e+s+s^2+s^3)*(e+t)", f2, m16);
  const auto q = parse_element("(e+s+s^2+s^3)(e+t)", f2, m16);
  CHECK(p == q);
  for (int i = 0; i < 16; ++i)
    CHECK(p.coeffs[i] == ((i < 4 || (i >= 8 && i < 12)) ? RingValue::one(f2) : RingValue::zero(f2)));

  CHECK_THROWS_WITH(parse_element("1 + q", f2, d8), doctest::Contains("unknown generator"));
  CHECK_THROWS_WITH(parse_element("a +", f2, d8), doctest::Contains("position"));
  CHECK_THROWS(parse_element("u1*e", f2, d8));  // ring generator outside the ring
}

TEST_CASE("group ring arithmetic") {
  const auto d8 = make_dihedral(8);
  const auto v = parse_element("e + a", f2, d8);
  CHECK(gr_add(v, GroupRingElement::zero(f2, d8)) == v);
  CHECK(gr_add(v, v).is_zero());
  CHECK(gr_add(parse_element("e + b", f2, d8), parse_element("b + b*a", f2, d8)) ==
        parse_element("e + b*a", f2, d8));

  const auto e = parse_element("e", f2, d8);
  CHECK(gr_mul(e, v) == v);

  // reflections square to the identity, so 1 + reflection squares to zero
  const auto w = parse_element("e + b*a", f2, d8);
  CHECK(gr_mul(w, w).is_zero());
  // with several reflections the cross terms survive
  const auto w3 = parse_element("e + b + b*a", f2, d8);
  CHECK(!gr_mul(w3, w3).is_zero());
}

TEST_CASE("canonical involution") {
  const auto d8 = make_dihedral(8);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_element(rng, r1, d8);
    CHECK(involution(involution(v)) == v);
  }
  // rotations invert, reflections are fixed
  CHECK(involution(parse_element("a", f2, d8)) == parse_element("a^3", f2, d8));
  for (int j = 0; j < 4; ++j) {
    const auto r = parse_element("b*a^" + std::to_string(j), f2, d8);
    CHECK(involution(r) == r);
  }
}

TEST_CASE("sigma of the dihedral example matches the displayed matrix") {
  const auto d8 = make_dihedral(8);
  const auto v = parse_element("1 + b*a + b*a^2 + b*a^3", f2, d8);
  const auto m = sigma(v);
  const char* expected[8] = {
      "10000111", "01001110", "00101101", "00011011",
      "01111000", "11100100", "11010010", "10110001",
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(m.at(i, j).bits() == static_cast<std::uint16_t>(expected[i][j] - '0'));
}

TEST_CASE("sigma basics") {
  const auto d8 = make_dihedral(8);
  const auto zero = sigma(GroupRingElement::zero(f2, d8));
  for (const auto& x : zero.entries) CHECK(x.is_zero());

  // a single unit coefficient gives a permutation matrix
  auto v = GroupRingElement::zero(f2, d8);
  v.coeffs[3] = RingValue::one(f2);
  const auto m = sigma(v);
  for (int i = 0; i < 8; ++i) {
    int count = 0;
    for (int j = 0; j < 8; ++j) count += m.at(i, j).bits();
    CHECK(count == 1);
  }

  // first row of sigma of the modular-group element
  const auto m16 = make_named("m16");
  const auto p = parse_element("(e+s+s^2+s^3)*(e+t)", f2, m16);
  const auto s = sigma(p);
  const char* first = "1111000011110000";
  for (int j = 0; j < 16; ++j)
    CHECK(s.at(0, j).bits() == static_cast<std::uint16_t>(first[j] - '0'));
}

TEST_CASE("sigma symmetry matches the involution") {
  const auto csd = parse_group_descriptor("c3 x d8@csd");
  CHECK_FALSE(sigma_is_symmetric(parse_element("e + a", f2, csd)));
  CHECK(sigma_is_symmetric(parse_element("e + a + a^3", f2, csd)));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto v = random_element(rng, f2, csd);
    const auto sv = sigma(v);
    CHECK(sigma_is_symmetric(v) == (sv == sigma_transpose(sv)));
    CHECK(sigma_is_symmetric(v) == (v == involution(v)));
  }
}

TEST_CASE("sigma is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (const auto& g : {make_named("a4"), make_dihedral(10), make_named("m16")}) {
    for (int k = 0; k <= 1; ++k) {
      const RingSpec ring{k};
      for (int t = 0; t < 25; ++t) {
        const auto v = random_element(rng, ring, g);
        const auto w = random_element(rng, ring, g);
        REQUIRE(sigma(gr_add(v, w)) == sigma_add(sigma(v), sigma(w)));
        REQUIRE(sigma(gr_mul(v, w)) == sigma_matmul(sigma(v), sigma(w)));
        REQUIRE(sigma(involution(v)) == sigma_transpose(sigma(v)));
      }
    }
  }
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(29);
  for (const auto& g : {make_dihedral(8), make_named("g24_8"),
                        parse_group_descriptor("c3 x d8@csd")}) {
    for (int k = 0; k <= 2; ++k) {
      const RingSpec ring{k};
      for (int t = 0; t < 20; ++t) {
        const auto v = random_element(rng, ring, g);
        CHECK(parse_element(to_string(v), ring, g) == v);
      }
    }
  }
}
