#include <map>

#include "doctest.h"
#include "grc/group.hpp"

using namespace grc;

TEST_CASE("cyclic groups") {
  const auto g1 = make_cyclic(1);
  CHECK(g1->order() == 1);
  CHECK(g1->identity() == 0);

  const auto c6 = make_cyclic(6);
  CHECK(c6->mul(2, 5) == 1);  // h^2 * h^5 = h
  CHECK(c6->inv(2) == 4);
  CHECK(c6->name(3) == "h^3");

  CHECK(make_cyclic(10)->order() == 10);
  CHECK_THROWS(make_cyclic(0));
}

TEST_CASE("even/odd cyclic reordering") {
  const auto c4 = reorder_cyclic_even_odd(make_cyclic(4));
  CHECK(c4->names() == std::vector<std::string>{"e", "h^2", "h", "h^3"});
  const auto c2 = reorder_cyclic_even_odd(make_cyclic(2));
  CHECK(c2->names() == std::vector<std::string>{"e", "h"});
  const auto c6 = reorder_cyclic_even_odd(make_cyclic(6));
  CHECK(c6->names() == std::vector<std::string>{"e", "h^2", "h^4", "h", "h^3", "h^5"});
  CHECK_THROWS(reorder_cyclic_even_odd(make_cyclic(5)));
}

TEST_CASE("dihedral groups") {
  const auto d8 = make_dihedral(8);
  CHECK(d8->order() == 8);
  const int a = d8->index_of("a"), b = d8->index_of("b");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  // every reflection is an involution
  const int ab = d8->mul(a, b);
  CHECK(d8->mul(ab, ab) == d8->identity());
  // b * a sits right after b in the reflection half
  CHECK(d8->mul(b, a) == 4 + 1);
  CHECK(d8->name(5) == "ba");
  // defining relations: a^4 = b^2 = e, b a = a^3 b
  int a4 = d8->identity();
  for (int i = 0; i < 4; ++i) a4 = d8->mul(a4, a);
  CHECK(a4 == d8->identity());
  CHECK(d8->mul(b, b) == d8->identity());
  CHECK(d8->mul(b, a) == d8->mul(d8->mul(d8->mul(a, a), a), b));

  CHECK_THROWS(make_dihedral(7));
  CHECK_THROWS(make_dihedral(2));
}

TEST_CASE("direct products") {
  const auto c2a = make_cyclic(2, "x");
  const auto c2b = make_cyclic(2, "y");
  const auto v4 = make_direct_product(c2a, c2b);
  CHECK(v4->order() == 4);
  for (int i = 0; i < 4; ++i) CHECK(v4->mul(i, i) == v4->identity());

  const auto c3d8 = make_direct_product(make_cyclic(3, "z"), make_dihedral(8));
  CHECK(c3d8->order() == 24);

  const auto ccc = make_named("c2c2c2");
  CHECK(ccc->order() == 8);
  for (int i = 0; i < 8; ++i) CHECK(ccc->mul(i, i) == ccc->identity());

  CHECK_THROWS(make_direct_product(make_cyclic(2), make_cyclic(2)));  // generator clash
}

TEST_CASE("csd ordering puts rotations first") {
  const auto g = reorder_cyclic_dihedral(
      make_direct_product(make_cyclic(3, "h"), make_dihedral(8)), 3, 8);
  CHECK(g->order() == 24);
  // first half: (h^i, a^j), i major
  CHECK(g->name(0) == "e");
  CHECK(g->name(1) == "a");
  CHECK(g->name(4) == "h");
  CHECK(g->name(5) == "ha");
  // second half starts with the bare reflection
  CHECK(g->name(12) == "b");
  CHECK(g->name(16) == "hb");
}

TEST_CASE("named groups satisfy their presentations") {
  const auto m16 = make_named("m16");
  CHECK(m16->order() == 16);
  const int s = m16->index_of("s"), t = m16->index_of("t");
  int s5 = m16->identity();
  for (int i = 0; i < 5; ++i) s5 = m16->mul(s5, s);
  CHECK(m16->mul(s, t) == m16->mul(t, s5));  // st = t s^5
  int s8 = m16->identity();
  for (int i = 0; i < 8; ++i) s8 = m16->mul(s8, s);
  CHECK(s8 == m16->identity());
  CHECK(m16->mul(t, t) == m16->identity());

  const auto a4 = make_named("a4");
  CHECK(a4->order() == 12);
  const int c = a4->index_of("c");
  CHECK(a4->mul(a4->mul(c, c), c) == a4->identity());

  const auto sl23 = make_named("sl23");
  CHECK(sl23->order() == 24);
  const int x = sl23->index_of("x"), y = sl23->index_of("y");
  const int x3 = sl23->mul(sl23->mul(x, x), x);
  const int y3 = sl23->mul(sl23->mul(y, y), y);
  const int xy = sl23->mul(x, y);
  CHECK(x3 == y3);
  CHECK(x3 == sl23->mul(xy, xy));
  CHECK(x3 != sl23->identity());  // the shared value is the central involution

  const auto g248 = make_named("g24_8");
  CHECK(g248->order() == 24);
  const int gx = g248->index_of("x"), gy = g248->index_of("y"), gz = g248->index_of("z");
  auto pow = [&](int base, int e) {
    int r = g248->identity();
    for (int i = 0; i < e; ++i) r = g248->mul(r, base);
    return r;
  };
  CHECK(pow(gx, 3) == g248->identity());
  CHECK(pow(gy, 4) == g248->identity());
  CHECK(pow(gz, 2) == g248->identity());
  CHECK(g248->mul(gx, gy) == g248->mul(gy, pow(gx, 2)));  // xy = yx^2
  CHECK(g248->mul(gx, gz) == g248->mul(gz, gx));          // xz = zx
  CHECK(g248->mul(gy, gz) == g248->mul(gz, pow(gy, 3)));  // yz = zy^3

  CHECK(make_named("s4")->order() == 24);
  CHECK_THROWS(make_named("q8"));
}

TEST_CASE("cayley table validation") {
  // valid C2
  CHECK(load_cayley_table(R"({"order":2,"names":["e","g"],"identity":0,"table":[[0,1],[1,0]]})")
            ->order() == 2);
  // repeated entry in a row
  CHECK_THROWS_WITH(
      load_cayley_table(R"({"order":2,"names":["e","g"],"identity":0,"table":[[0,0],[1,0]]})"),
      doctest::Contains("not cancellative"));
  // Latin square with identity that is not associative
  CHECK_THROWS_WITH(load_cayley_table(R"({"order":5,
    "table":[[0,1,2,3,4],[1,0,3,4,2],[2,3,4,0,1],[3,4,1,2,0],[4,2,0,1,3]]})"),
                    doctest::Contains("not associative"));
  // bad identity
  CHECK_THROWS(load_cayley_table(R"({"order":2,"identity":1,"table":[[0,1],[1,0]]})"));
  CHECK_THROWS(load_cayley_table("{"));
}

TEST_CASE("klein four from a table matches the product up to relabeling") {
  const auto loaded = load_cayley_table(
      R"({"order":4,"names":["e","x","y","xy"],"identity":0,
          "table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})");
  const auto built = make_direct_product(make_cyclic(2, "x"), make_cyclic(2, "y"));
  REQUIRE(loaded->order() == built->order());
  // same name set; compare multiplication through the name bijection
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int bi = built->index_of(loaded->name(i));
      const int bj = built->index_of(loaded->name(j));
      REQUIRE(bi >= 0);
      REQUIRE(built->name(built->mul(bi, bj)) == loaded->name(loaded->mul(i, j)));
    }
}

TEST_CASE("inverse tables are consistent") {
  for (const auto& g : {make_named("a4"), make_named("sl23"), make_named("m16"),
                        make_named("g24_8"), make_dihedral(12), make_cyclic(9)}) {
    for (int i = 0; i < g->order(); ++i) {
      CHECK(g->inv(g->inv(i)) == i);
      CHECK(g->mul(i, g->inv(i)) == g->identity());
    }
  }
}

TEST_CASE("left multiplication permutes indices") {
  const auto g = make_named("sl23");
  for (int h = 0; h < g->order(); ++h) {
    auto perm = left_multiplication_permutation(*g, h);
    std::vector<bool> seen(g->order(), false);
    for (int x : perm) {
      CHECK(!seen[x]);
      seen[x] = true;
    }
  }
}

TEST_CASE("inversion orbit counts for the order-24 groups") {
  // these determine the candidate-space sizes of the symmetric-element scans
  auto orbit_count = [](const GroupPtr& g) { return inversion_orbits(*g).size(); };
  CHECK(orbit_count(make_direct_product(make_cyclic(3, "z"), make_dihedral(8))) == 15);
  CHECK(orbit_count(make_direct_product(make_cyclic(2, "x"), make_named("a4"))) == 16);
  CHECK(orbit_count(make_named("g24_8")) == 17);
  CHECK(orbit_count(make_named("sl23")) == 13);
  CHECK(orbit_count(make_direct_product(
            make_direct_product(make_cyclic(2, "z"), make_cyclic(2, "w")), make_dihedral(6))) == 20);
}

TEST_CASE("group descriptor parsing") {
  CHECK(parse_group_descriptor("c10")->order() == 10);
  CHECK(parse_group_descriptor("d8")->order() == 8);
  CHECK(parse_group_descriptor("c3 x d8")->order() == 24);
  CHECK(parse_group_descriptor("c3 x d8@csd")->name(12) == "b");
  CHECK(parse_group_descriptor("c10@evenodd")->name(1) == "h^2");
  CHECK(parse_group_descriptor("c2 x c2")->order() == 4);  // auto-renamed generators
  CHECK(parse_group_descriptor("c2 x a4")->order() == 24);
  CHECK_THROWS(parse_group_descriptor("c3@csd"));
  CHECK_THROWS(parse_group_descriptor("frobnicate"));
}
