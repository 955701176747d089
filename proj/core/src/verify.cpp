#include "grc/verify.hpp"

#include <random>
#include <stdexcept>

#include "grc/code.hpp"
#include "grc/search.hpp"

namespace grc {

namespace {

using Rng = std::mt19937_64;

std::vector<GroupPtr> suite_groups() {
  return {
      make_cyclic(6),
      make_cyclic(10),
      make_dihedral(8),
      make_dihedral(12),
      make_named("m16"),
      make_named("a4"),
      make_named("s4"),
      make_named("sl23"),
      make_named("g24_8"),
      make_named("c2c2c2"),
      reorder_cyclic_dihedral(make_direct_product(make_cyclic(3, "z"), make_dihedral(8)), 3, 8),
      make_direct_product(make_cyclic(2, "x"), make_named("a4")),
  };
}

GroupRingElement random_element(Rng& rng, RingSpec ring, const GroupPtr& g) {
  GroupRingElement v = GroupRingElement::zero(ring, g);
  std::uniform_int_distribution<int> dist(0, ring.cardinality() > 65535 ? 65535 : static_cast<int>(ring.cardinality()) - 1);
  for (auto& c : v.coeffs) c = RingValue(ring, static_cast<std::uint16_t>(dist(rng)));
  return v;
}

SuiteResult homomorphism_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"homomorphism"};
  Rng rng(seed);
  for (const auto& g : suite_groups()) {
    for (int k = 0; k <= 1; ++k) {
      const RingSpec ring{k};
      for (int t = 0; t < trials; ++t) {
        const auto v = random_element(rng, ring, g);
        const auto w = random_element(rng, ring, g);
        ++res.trials;
        bool ok = sigma(gr_add(v, w)) == sigma_add(sigma(v), sigma(w));
        ok = ok && sigma(gr_mul(v, w)) == sigma_matmul(sigma(v), sigma(w));
        ok = ok && sigma(involution(v)) == sigma_transpose(sigma(v));
        ok = ok && involution(involution(v)) == v;
        ok = ok && sigma_is_symmetric(v) == (v == involution(v));
        // injectivity: the first row of sigma(v) is v itself
        const auto sv = sigma(v);
        for (int j = 0; j < g->order() && ok; ++j)
          ok = sv.at(g->identity(), j) == v.coeffs[j];
        if (!ok) {
          ++res.failures;
          res.notes.push_back("group " + g->ordering_tag() + " trial " + std::to_string(t));
        }
      }
    }
  }
  return res;
}

SuiteResult frobenius_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"frobenius"};
  Rng rng(seed);
  const auto groups = suite_groups();
  std::uniform_int_distribution<size_t> gd(0, groups.size() - 1);
  std::uniform_int_distribution<int> kd(0, 2);
  for (int t = 0; t < trials; ++t) {
    const auto& g = groups[gd(rng)];
    const RingSpec ring{kd(rng)};
    if (g->order() * ring.monomials() > 128) { --t; continue; }
    const auto v = random_element(rng, ring, g);
    const LinearCode c = code_from_sigma(sigma(v));
    const LinearCode d = dual(c);
    ++res.trials;
    if (c.binary_rank + d.binary_rank != c.image_length() || !codes_equal(dual(d), c)) {
      ++res.failures;
      res.notes.push_back("group " + g->ordering_tag() + " k=" + std::to_string(ring.k));
    }
  }
  return res;
}

SuiteResult ibbi_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"ibbi"};
  Rng rng(seed);
  std::uniform_int_distribution<int> kd(2, 8);
  for (int t = 0; t < trials; ++t) {
    const int k = kd(rng);
    std::vector<std::vector<int>> b(k, std::vector<int>(k, 0));
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) b[i][j] = b[j][i] = bit(rng);
    std::vector<std::vector<int>> rows(2 * k, std::vector<int>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
      rows[i][i] = 1;
      rows[k + i][k + i] = 1;
      for (int j = 0; j < k; ++j) {
        rows[i][k + j] = b[i][j];
        rows[k + i][j] = b[i][j];
      }
    }
    const LinearCode c = code_from_binary_rows(2 * k, rows);
    ++res.trials;
    if (c.binary_rank > k) continue;  // lemma precondition: free rank k
    if (c.binary_rank != k || !is_self_dual(c)) {
      ++res.failures;
      res.notes.push_back("k=" + std::to_string(k));
    }
  }
  return res;
}

SuiteResult palindromic_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"palindromic"};
  Rng rng(seed);
  const int sizes[] = {6, 8, 10};
  for (int t = 0; t < trials; ++t) {
    const int n = sizes[t % 3];
    const RingSpec ring{static_cast<int>(rng() % 2)};
    const auto g = make_cyclic(n);
    GroupRingElement v = GroupRingElement::zero(ring, g);
    // exactly one even coefficient equals 1
    v.coeffs[2 * (rng() % (n / 2))] = RingValue::one(ring);
    // palindromic odd part: alpha_{n-i} = alpha_i for odd i
    std::uniform_int_distribution<int> vd(0, static_cast<int>(ring.cardinality()) - 1);
    for (int i = 1; i < n; i += 2) {
      const auto val = RingValue(ring, static_cast<std::uint16_t>(vd(rng)));
      v.coeffs[i] = val;
      v.coeffs[(n - i) % n] = val;
    }
    const LinearCode c = code_from_sigma(sigma(v));
    ++res.trials;
    if (2 * c.binary_rank != c.image_length()) continue;  // theorem precondition
    bool ok = is_self_dual(c);
    if (ok && !ring.is_f2()) ok = is_self_dual(gray_image(c));  // binary image of a self-dual R_k code
    if (!ok) {
      ++res.failures;
      res.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(ring.k) +
                          " v=" + to_string(v));
    }
  }
  return res;
}

SuiteResult invariance_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"invariance"};
  Rng rng(seed);
  for (const auto& g : suite_groups()) {
    for (int t = 0; t < trials; ++t) {
      const RingSpec ring{static_cast<int>(rng() % 2)};
      if (g->order() * ring.monomials() > 96) continue;
      const auto v = random_element(rng, ring, g);
      const LinearCode c = code_from_sigma(sigma(v));
      ++res.trials;
      if (!check_group_invariance(c)) {
        ++res.failures;
        res.notes.push_back("group " + g->ordering_tag());
      }
    }
  }
  return res;
}

SuiteResult shift_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"shift"};
  Rng rng(seed);
  const auto groups = suite_groups();
  std::uniform_int_distribution<size_t> gd(0, groups.size() - 1);
  for (int t = 0; t < trials; ++t) {
    const auto& g = groups[gd(rng)];
    const RingSpec ring{static_cast<int>(rng() % 2)};
    if (g->order() * ring.monomials() > 96) { --t; continue; }
    const auto v = random_element(rng, ring, g);
    const int h = static_cast<int>(rng() % g->order());
    GroupRingElement hg = GroupRingElement::zero(ring, g);
    hg.coeffs[h] = RingValue::one(ring);
    const auto vh = gr_mul(v, hg);
    const auto perm = shift_equivalence_witness(v, h);
    ++res.trials;
    if (!codes_equal(permute_coordinates(code_from_sigma(sigma(v)), perm),
                     code_from_sigma(sigma(vh)))) {
      ++res.failures;
      res.notes.push_back("group " + g->ordering_tag() + " h=" + std::to_string(h));
    }
  }
  return res;
}

SuiteResult isodual_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"isodual"};
  Rng rng(seed);
  // C_s x D_2k pattern codes with full rank are isodual under the structural
  // permutation; same for the cyclic single-even-coefficient pattern.
  const auto csd = reorder_cyclic_dihedral(make_direct_product(make_cyclic(3, "h"), make_dihedral(8)), 3, 8);
  const auto csd_perm = csd_isodual_permutation(3, 8);
  const RingSpec f2{0};
  // the rank precondition rejects most random patterns; keep drawing until
  // enough accepted instances have been checked
  for (int attempts = 0; res.trials < static_cast<std::uint64_t>(trials) && attempts < 200 * trials;
       ++attempts) {
    GroupRingElement v = GroupRingElement::zero(f2, csd);
    v.coeffs[0] = RingValue::one(f2);
    for (int pos = 12; pos < 24; ++pos)
      v.coeffs[pos] = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    const LinearCode c = code_from_sigma(sigma(v));
    if (2 * c.binary_rank != c.image_length()) continue;
    ++res.trials;
    if (!isodual_witness_check(c, csd_perm)) {
      ++res.failures;
      res.notes.push_back("csd pattern " + to_string(v));
    }
  }
  for (int attempts = 0, accepted = 0; accepted < trials && attempts < 200 * trials; ++attempts) {
    const int n = 6 + 2 * static_cast<int>(rng() % 3);
    const auto g = reorder_cyclic_even_odd(make_cyclic(n));
    GroupRingElement v = GroupRingElement::zero(f2, g);
    v.coeffs[0] = RingValue::one(f2);  // one even-power coefficient
    for (int pos = n / 2; pos < n; ++pos)
      v.coeffs[pos] = RingValue(f2, static_cast<std::uint16_t>(rng() % 2));
    const LinearCode c = code_from_sigma(sigma(v));
    if (2 * c.binary_rank != c.image_length()) continue;
    ++accepted;
    ++res.trials;
    if (!isodual_witness_check(c, cyclic_isodual_permutation(n))) {
      ++res.failures;
      res.notes.push_back("cyclic pattern n=" + std::to_string(n) + " " + to_string(v));
    }
  }
  return res;
}

SuiteResult macwilliams_suite(std::uint64_t seed, int trials) {
  SuiteResult res{"macwilliams"};
  Rng rng(seed);
  const std::vector<GroupPtr> groups = {make_cyclic(7), make_cyclic(12), make_cyclic(16),
                                        make_dihedral(8), make_dihedral(16), make_named("m16"),
                                        make_named("a4"), make_named("c2c2c2")};
  std::uniform_int_distribution<size_t> gd(0, groups.size() - 1);
  const RingSpec f2{0};
  for (int t = 0; t < trials; ++t) {
    const auto& g = groups[gd(rng)];
    const auto v = random_element(rng, f2, g);
    const LinearCode c = code_from_sigma(sigma(v));
    ++res.trials;
    if (!macwilliams_check(c)) {
      ++res.failures;
      res.notes.push_back("group " + g->ordering_tag() + " v=" + to_string(v));
    }
  }
  return res;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"homomorphism", "frobenius", "ibbi", "palindromic",
          "invariance",   "shift",     "isodual", "macwilliams"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (name == "homomorphism") return homomorphism_suite(seed, trials > 0 ? trials : 1000);
  if (name == "frobenius") return frobenius_suite(seed, trials > 0 ? trials : 200);
  if (name == "ibbi") return ibbi_suite(seed, trials > 0 ? trials : 500);
  if (name == "palindromic") return palindromic_suite(seed, trials > 0 ? trials : 500);
  if (name == "invariance") return invariance_suite(seed, trials > 0 ? trials : 100);
  if (name == "shift") return shift_suite(seed, trials > 0 ? trials : 200);
  if (name == "isodual") return isodual_suite(seed, trials > 0 ? trials : 50);
  if (name == "macwilliams") return macwilliams_suite(seed, trials > 0 ? trials : 100);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace grc
