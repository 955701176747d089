#pragma once

// Randomized property suites backing the structural theorems: the sigma
// homomorphism identities, the Frobenius cardinality identity, the
// char-2 [[I,B],[B,I]] lemma, the palindromic cyclic construction, group
// invariance of the constructed codes, shift equivalence, the structural
// isoduality permutations, and the binary MacWilliams transform.

#include <cstdint>
#include <string>
#include <vector>

namespace grc {

struct SuiteResult {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

// Suites: homomorphism, frobenius, ibbi, palindromic, invariance, shift,
// isodual, macwilliams. `trials` <= 0 selects each suite's default size.
std::vector<std::string> verify_suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials = 0);

}  // namespace grc
