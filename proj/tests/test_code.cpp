#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "grc/code.hpp"

using namespace grc;

namespace {

const RingSpec f2{0};
const RingSpec r1{1};

// Independent oracle: the full codeword set by closure under row addition
// and monomial scaling, with per-coordinate weight counting. No bit packing,
// no Gray-code enumeration, no shared code path with LinearCode.
using Word = std::vector<RingValue>;

std::set<Word> span_closure(const LinearCode& c) {
  std::set<Word> words;
  words.insert(Word(c.length, RingValue::zero(c.ring)));
  std::vector<Word> frontier(words.begin(), words.end());
  while (!frontier.empty()) {
    const Word w = frontier.back();
    frontier.pop_back();
    for (const auto& g : c.generators) {
      for (int mono = 0; mono < c.ring.monomials(); ++mono) {
        const RingValue m(c.ring, static_cast<std::uint16_t>(1u << mono));
        Word next = w;
        for (int i = 0; i < c.length; ++i)
          next[i] = ring_add(next[i], ring_mul(m, g[i]));
        if (words.insert(next).second) frontier.push_back(next);
      }
    }
  }
  return words;
}

std::map<int, std::uint64_t> oracle_enumerator(const LinearCode& c, Metric metric) {
  std::map<int, std::uint64_t> hist;
  for (const auto& w : span_closure(c)) {
    int weight = 0;
    for (const auto& x : w) weight += metric == Metric::lee ? lee_weight(x) : (x.is_zero() ? 0 : 1);
    ++hist[weight];
  }
  return hist;
}

bool oracle_self_dual(const LinearCode& c) {
  const auto words = span_closure(c);
  if (words.size() * words.size() != (std::uint64_t{1} << c.image_length())) return false;
  for (const auto& a : words)
    for (const auto& b : words) {
      RingValue dot = RingValue::zero(c.ring);
      for (int i = 0; i < c.length; ++i) dot = ring_add(dot, ring_mul(a[i], b[i]));
      if (!dot.is_zero()) return false;
    }
  return true;
}

LinearCode from_element(const std::string& text, RingSpec ring, const GroupPtr& g) {
  return code_from_sigma(sigma(parse_element(text, ring, g)));
}

std::map<int, std::uint64_t> weights_of(const LinearCode& c, WeightKind kind) {
  return weight_enumerator(c, kind).by_weight;
}

}  // namespace

TEST_CASE("extended Hamming code from the dihedral construction") {
  const auto d8 = make_dihedral(8);
  const auto c = from_element("1 + b*a + b*a^2 + b*a^3", f2, d8);
  CHECK(cardinality_log2(c) == 4);
  CHECK(min_distance(c, Metric::hamming) == 4);
  CHECK(is_self_orthogonal(c));
  CHECK(is_self_dual(c));
  CHECK(is_type_ii(c));
  CHECK(oracle_self_dual(c));

  const std::map<int, std::uint64_t> expected{{0, 1}, {4, 14}, {8, 1}};
  CHECK(weights_of(c, WeightKind::hamming) == expected);
  CHECK(oracle_enumerator(c, Metric::hamming) == expected);

  // echelon basis equals the displayed reduced matrix
  const LinearCode displayed = code_from_binary_rows(
      8, {{1, 0, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 1, 1, 0},
          {0, 0, 1, 0, 1, 1, 0, 1}, {0, 0, 0, 1, 1, 0, 1, 1}});
  CHECK(codes_equal(c, displayed));
  CHECK(codes_equal(dual(c), c));
  CHECK(macwilliams_check(c));
  CHECK(check_group_invariance(c));
}

TEST_CASE("a generic coordinate swap does not fix the Hamming code") {
  const auto c = from_element("1 + b*a + b*a^2 + b*a^3", f2, make_dihedral(8));
  std::vector<int> swap01{1, 0, 2, 3, 4, 5, 6, 7};
  CHECK_FALSE(codes_equal(permute_coordinates(c, swap01), c));
}

TEST_CASE("modular-group element codes") {
  const auto m16 = make_named("m16");
  const auto c = from_element("(e+s+s^2+s^3)*(e+t)", f2, m16);
  CHECK(cardinality_log2(c) == 5);
  CHECK(min_distance(c, Metric::hamming) == 4);
  const std::map<int, std::uint64_t> expected{{0, 1}, {4, 4}, {8, 22}, {12, 4}, {16, 1}};
  CHECK(weights_of(c, WeightKind::hamming) == expected);
  CHECK(oracle_enumerator(c, Metric::hamming) == expected);

  // the involuted element generates the [16,5,8] first-order Reed-Muller code
  const auto v = parse_element("(e+s+s^2+s^3)*(e+t)", f2, m16);
  const auto ct = code_from_sigma(sigma(involution(v)));
  CHECK(cardinality_log2(ct) == 5);
  CHECK(min_distance(ct, Metric::hamming) == 8);
  const std::map<int, std::uint64_t> rm{{0, 1}, {8, 30}, {16, 1}};
  CHECK(weights_of(ct, WeightKind::hamming) == rm);
  CHECK(oracle_enumerator(ct, Metric::hamming) == rm);
}

TEST_CASE("degenerate codes") {
  const auto d8 = make_dihedral(8);
  const auto zero = from_element("0", f2, d8);
  CHECK(zero.is_zero_code());
  CHECK(cardinality_log2(zero) == 0);
  CHECK(!min_distance(zero, Metric::hamming).has_value());  // undefined, not 0
  CHECK(weights_of(zero, WeightKind::hamming) == std::map<int, std::uint64_t>{{0, 1}});
  CHECK(is_self_orthogonal(zero));
  CHECK_FALSE(is_self_dual(zero));
  CHECK(check_group_invariance(zero));
  CHECK(cardinality_log2(dual(zero)) == 8);  // dual of {0} is the full space

  const auto full = from_element("a^2", f2, d8);  // unit singleton
  CHECK(cardinality_log2(full) == 8);
  CHECK_FALSE(is_self_orthogonal(full));
  CHECK(min_distance(full, Metric::hamming) == 1);

  // u1 * e over R_1 and the trivial group: a self-dual code of length 1
  const auto t = make_cyclic(1);
  const auto u1e = from_element("u1*e", r1, t);
  CHECK(cardinality_log2(u1e) == 1);
  CHECK(is_self_dual(u1e));
}

TEST_CASE("self-dual code over R1 A4 with a Golay binary image") {
  const auto a4 = make_named("a4");
  const auto c =
      from_element("a + b + u1*a*b + (1+u1)*(c + a*c + c^2 + a*b*c^2)", r1, a4);
  CHECK(cardinality_log2(c) == 12);
  CHECK(is_self_dual(c));
  CHECK(oracle_self_dual(c));
  CHECK(min_distance(c, Metric::lee) == 8);

  const auto img = gray_image(c);
  CHECK(img.length == 24);
  CHECK(cardinality_log2(img) == 12);
  CHECK(min_distance(img, Metric::hamming) == 8);
  CHECK(is_self_dual(img));
  CHECK(is_type_ii(img));
  const std::map<int, std::uint64_t> golay{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  CHECK(weights_of(img, WeightKind::hamming) == golay);
  CHECK(oracle_enumerator(c, Metric::lee) == golay);
}

TEST_CASE("cardinality duality over several rings") {
  std::mt19937_64 rng(31);
  for (const auto& g : {make_dihedral(8), make_named("a4"), make_cyclic(6)}) {
    for (int k = 0; k <= 2; ++k) {
      const RingSpec ring{k};
      if (g->order() * ring.monomials() > 48) continue;
      for (int t = 0; t < 10; ++t) {
        auto v = GroupRingElement::zero(ring, g);
        for (auto& x : v.coeffs)
          x = RingValue(ring, static_cast<std::uint16_t>(rng() % ring.cardinality()));
        const auto c = code_from_sigma(sigma(v));
        const auto d = dual(c);
        REQUIRE(c.binary_rank + d.binary_rank == c.image_length());
        REQUIRE(codes_equal(dual(d), c));
      }
    }
  }
}

TEST_CASE("enumeration bound") {
  const auto big = from_element("h", f2, make_cyclic(48));  // rank 48
  CHECK(cardinality_log2(big) == 48);
  CHECK_THROWS_WITH(min_distance(big, Metric::hamming), doctest::Contains("too large"));
}

TEST_CASE("formal self-duality") {
  // a census element: formally self-dual with d = 6 but not self-dual
  const auto csd = parse_group_descriptor("c3 x d8@csd");
  const auto c = from_element("1 + b*(a + a*(1+a)*(a*h + h^2))", f2, csd);
  CHECK(cardinality_log2(c) == 12);
  CHECK(min_distance(c, Metric::hamming) == 6);
  CHECK_FALSE(is_self_dual(c));
  CHECK(is_formally_self_dual(c, WeightKind::hamming));
  CHECK(is_formally_self_dual(c, WeightKind::complete));
  CHECK(isodual_witness_check(c, csd_isodual_permutation(3, 8)));
  CHECK_FALSE(isodual_witness_check(c, std::vector<int>{
      0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}));

  // the second census example has distance 4
  const auto c2 = from_element("1 + b*(a^2 + h + a^3*h + h^2 + a*h^2)", f2, csd);
  CHECK(cardinality_log2(c2) == 12);
  CHECK(min_distance(c2, Metric::hamming) == 4);
  CHECK_FALSE(is_self_dual(c2));
  CHECK(is_formally_self_dual(c2, WeightKind::hamming));

  // self-dual codes are formally self-dual with the identity witness
  const auto ham = from_element("1 + b*a + b*a^2 + b*a^3", f2, make_dihedral(8));
  CHECK(is_formally_self_dual(ham, WeightKind::hamming));
  std::vector<int> id(8);
  for (int i = 0; i < 8; ++i) id[i] = i;
  CHECK(isodual_witness_check(ham, id));

  // size mismatch: the [16,5] code cannot be formally self-dual
  const auto rm = from_element("(e+s+s^2+s^3)*(e+t)", f2, make_named("m16"));
  CHECK_FALSE(is_formally_self_dual(rm, WeightKind::hamming));
}

TEST_CASE("shift equivalence") {
  const auto ccc = make_named("c2c2c2");
  const auto v1 = parse_element("1 + x*z + y*z + x*y*z", f2, ccc);
  const auto c1 = code_from_sigma(sigma(v1));
  CHECK(cardinality_log2(c1) == 4);
  CHECK(min_distance(c1, Metric::hamming) == 4);  // another [8,4,4] realization

  const int h = ccc->index_of("y");
  REQUIRE(h >= 0);
  const auto v2 = parse_element("y + x*z + z + x*y*z", f2, ccc);
  auto hy = GroupRingElement::zero(f2, ccc);
  hy.coeffs[h] = RingValue::one(f2);
  CHECK(gr_mul(v1, hy) == v2);

  const auto perm = shift_equivalence_witness(v1, h);
  CHECK(codes_equal(permute_coordinates(c1, perm), code_from_sigma(sigma(v2))));

  // identity shift gives the identity permutation
  const auto idperm = shift_equivalence_witness(v1, ccc->identity());
  for (size_t i = 0; i < idperm.size(); ++i) CHECK(idperm[i] == static_cast<int>(i));
}

TEST_CASE("cyclic isodual witness at n = 6") {
  const auto g = reorder_cyclic_even_odd(make_cyclic(6));
  auto v = GroupRingElement::zero(f2, g);
  v.coeffs[0] = RingValue::one(f2);
  v.coeffs[4] = RingValue::one(f2);  // h^3
  const auto c = code_from_sigma(sigma(v));
  REQUIRE(cardinality_log2(c) == 3);
  CHECK(isodual_witness_check(c, cyclic_isodual_permutation(6)));
  CHECK(is_formally_self_dual(c, WeightKind::hamming));

  // an isodual instance that is not self-dual, over R2
  const RingSpec r2{2};
  const auto w = parse_element("1 + u2*h + (1+u1+u1u2)*h^3 + u1*h^5", r2, g);
  const auto cw = code_from_sigma(sigma(w));
  REQUIRE(cardinality_log2(cw) == 12);
  CHECK_FALSE(is_self_dual(cw));
  CHECK(isodual_witness_check(cw, cyclic_isodual_permutation(6)));
  CHECK(is_formally_self_dual(cw, WeightKind::hamming));
  CHECK(is_formally_self_dual(cw, WeightKind::lee));
}

TEST_CASE("theorem: single-rotation dihedral elements of full rank are self-dual") {
  // e + ba over D8: v^2 != 0 yet the code is self-dual
  const auto d8 = make_dihedral(8);
  const auto c = from_element("e + b*a", f2, d8);
  CHECK(cardinality_log2(c) == 4);
  CHECK(is_self_dual(c));

  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const int k = 3 + static_cast<int>(rng() % 6);
    const auto g = make_dihedral(2 * k);
    auto v = GroupRingElement::zero(f2, g);
    v.coeffs[rng() % k] = RingValue::one(f2);  // one rotation coefficient
    for (int i = k; i < 2 * k; ++i)
      v.coeffs[i] = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    const auto code = code_from_sigma(sigma(v));
    if (code.binary_rank != k) continue;
    REQUIRE(is_self_dual(code));
  }
}

TEST_CASE("symmetric square-zero elements generate self-orthogonal codes") {
  std::mt19937_64 rng(53);
  int accepted = 0;
  const auto d8 = make_dihedral(8);
  while (accepted < 20) {
    auto v = GroupRingElement::zero(f2, d8);
    for (const auto& orbit : inversion_orbits(*d8)) {
      const auto val = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
      for (int pos : orbit) v.coeffs[pos] = val;
    }
    if (!(v == involution(v))) continue;
    if (!gr_mul(v, v).is_zero()) continue;
    ++accepted;
    REQUIRE(is_self_orthogonal(code_from_sigma(sigma(v))));
  }
}

TEST_CASE("self-dual code with a weight-2 word is not type II") {
  const auto g = reorder_cyclic_even_odd(make_cyclic(6));
  auto v = GroupRingElement::zero(f2, g);
  v.coeffs[0] = RingValue::one(f2);
  v.coeffs[4] = RingValue::one(f2);
  const auto c = code_from_sigma(sigma(v));
  REQUIRE(is_self_dual(c));
  CHECK(min_distance(c, Metric::hamming) == 2);
  CHECK_FALSE(is_type_ii(c));
}

TEST_CASE("size mismatch rules out self-duality") {
  const auto rm = from_element("(e+s+s^2+s^3)*(e+t)", f2, make_named("m16"));
  CHECK_FALSE(is_self_dual(rm));
}

TEST_CASE("weight enumerator kinds") {
  const auto c = from_element("u1*e + (1+u1)*h", r1, make_cyclic(2));
  const auto lee = weight_enumerator(c, WeightKind::lee);
  std::uint64_t total = 0;
  for (const auto& [w, count] : lee.by_weight) total += count;
  CHECK(total == (std::uint64_t{1} << c.binary_rank));
  CHECK(lee.by_weight.at(0) == 1);

  const auto complete = weight_enumerator(c, WeightKind::complete);
  std::uint64_t ctotal = 0;
  for (const auto& [comp, count] : complete.by_composition) ctotal += count;
  CHECK(ctotal == (std::uint64_t{1} << c.binary_rank));
  std::vector<std::uint32_t> zero_comp(4, 0);
  zero_comp[0] = 2;
  CHECK(complete.by_composition.at(zero_comp) == 1);
}

TEST_CASE("macwilliams cross-check") {
  CHECK(macwilliams_check(from_element("1 + b*a + b*a^2 + b*a^3", f2, make_dihedral(8))));
  CHECK(macwilliams_check(from_element("0", f2, make_cyclic(4))));
  std::mt19937_64 rng(41);
  const auto g = make_dihedral(8);
  for (int t = 0; t < 25; ++t) {
    auto v = GroupRingElement::zero(f2, g);
    for (auto& x : v.coeffs) x = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    REQUIRE(macwilliams_check(code_from_sigma(sigma(v))));
  }
}

TEST_CASE("matrix shapes") {
  const auto d8 = make_dihedral(8);
  std::mt19937_64 rng(43);
  auto is_circulant_kind = [](BlockKind k) {
    return k == BlockKind::zero || k == BlockKind::identity || k == BlockKind::circulant;
  };
  for (int t = 0; t < 20; ++t) {
    auto v = GroupRingElement::zero(f2, d8);
    for (auto& x : v.coeffs) x = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    const auto shape = matrix_shape(sigma(v));
    REQUIRE((shape.block_abba || shape.circulant || shape.reverse_circulant));
    REQUIRE(is_circulant_kind(shape.block_a));
    // the reflection block is reverse circulant by construction; all-ones and
    // zero blocks also satisfy the earlier classifications
    REQUIRE((shape.block_b == BlockKind::zero || shape.block_b == BlockKind::circulant ||
             shape.block_b == BlockKind::reverse_circulant));
  }

  const auto c6 = reorder_cyclic_even_odd(make_cyclic(6));
  for (int t = 0; t < 20; ++t) {
    auto v = GroupRingElement::zero(f2, c6);
    for (auto& x : v.coeffs) x = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    const auto shape = matrix_shape(sigma(v));
    REQUIRE((shape.block_abba || shape.block_abda || shape.circulant));
    REQUIRE(is_circulant_kind(shape.block_a));
    REQUIRE(is_circulant_kind(shape.block_b));
    REQUIRE(is_circulant_kind(shape.block_c));
  }

  // the identity matrix is circulant
  auto e = GroupRingElement::zero(f2, make_cyclic(5));
  e.coeffs[0] = RingValue::one(f2);
  CHECK(matrix_shape(sigma(e)).circulant);

  // reverse circulant matrices are symmetric
  const auto m = sigma(parse_element("b + b*a", f2, d8));
  const auto shape = matrix_shape(m);
  CHECK(shape.block_a == BlockKind::zero);
  CHECK(shape.block_b == BlockKind::reverse_circulant);
  CHECK(sigma_transpose(m) == m);
}

TEST_CASE("group invariance across built-ins") {
  std::mt19937_64 rng(47);
  for (const auto& g : {make_named("a4"), make_named("m16"), make_cyclic(10)}) {
    for (int t = 0; t < 5; ++t) {
      auto v = GroupRingElement::zero(f2, g);
      for (auto& x : v.coeffs) x = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
      REQUIRE(check_group_invariance(code_from_sigma(sigma(v))));
    }
  }
}
