#pragma once

// Linear codes over F2 / R_k generated by sigma(v) rows: cardinality, dual,
// distances, weight enumerators, and the duality predicates.
//
// All linear algebra reduces to F2 through the additive Gray bijection: the
// R_k-span of a set of rows equals the F2-span of their monomial multiples
// {u_S * row}. A code stores its ring generators plus the canonical binary
// basis of the Gray image; coordinate i of the ring occupies the bit slice
// [i*2^k, (i+1)*2^k) of a binary word.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grc/bitmatrix.hpp"
#include "grc/group_ring.hpp"

namespace grc {

// Enumeration is exhaustive over 2^rank codewords; ranks beyond this bound
// are refused ("code too large to enumerate").
constexpr int kEnumerationRankBound = 26;

enum class Metric { hamming, lee };
enum class WeightKind { hamming, lee, complete };

struct WeightEnumerator {
  WeightKind kind{};
  std::map<int, std::uint64_t> by_weight;  // hamming / lee
  // complete: composition vector (count of each ring element, indexed by the
  // element's monomial bits) -> number of codewords
  std::map<std::vector<std::uint32_t>, std::uint64_t> by_composition;
  std::uint64_t total = 0;
};

struct LinearCode {
  RingSpec ring;
  int length = 0;            // ring coordinates
  GroupPtr group;            // set when built from sigma(v); may be null
  std::vector<std::vector<RingValue>> generators;
  BitMatrix basis;           // canonical RREF of the Gray image, length*2^k columns
  int binary_rank = 0;

  int image_length() const { return length * ring.monomials(); }
  bool is_zero_code() const { return binary_rank == 0; }
};

LinearCode code_from_sigma(const SigmaMatrix& m);
LinearCode code_from_ring_rows(RingSpec ring, GroupPtr group, int length,
                               std::vector<std::vector<RingValue>> rows);
// Binary code from 0/1 rows (ring F2).
LinearCode code_from_binary_rows(int length, const std::vector<std::vector<int>>& rows);

// log2 |C|.
int cardinality_log2(const LinearCode& c);

// The Gray image as a binary code of length n * 2^k.
LinearCode gray_image(const LinearCode& c);

// Orthogonal with respect to the standard inner product over the ring,
// computed as the F2 nullspace of the component equations of [g, w] = 0.
LinearCode dual(const LinearCode& c);

// Minimum nonzero weight; nullopt for the zero code ("undefined").
// Metric::hamming counts nonzero ring coordinates; Metric::lee counts bits of
// the Gray image (for F2 the two agree). Throws above the enumeration bound.
std::optional<int> min_distance(const LinearCode& c, Metric metric);

// True iff some nonzero codeword has weight < threshold (early exit).
bool has_word_below(const LinearCode& c, Metric metric, int threshold);

WeightEnumerator weight_enumerator(const LinearCode& c, WeightKind kind);

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
// Binary self-dual codes with every weight divisible by 4. Requires a binary
// code (apply to gray_image(c) otherwise).
bool is_type_ii(const LinearCode& c);
bool is_formally_self_dual(const LinearCode& c, WeightKind kind);

// Applies a ring-coordinate permutation (new[perm[i]] = old[i]).
LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm);
bool codes_equal(const LinearCode& a, const LinearCode& b);

// True iff the code is fixed by every coordinate permutation j -> h*g_j
// induced by the group it was built over.
bool check_group_invariance(const LinearCode& c);

// Column permutation induced by right multiplication by h: perm[j] =
// index(g_j * h). Applying it to C(v) yields C(v*h).
std::vector<int> shift_equivalence_witness(const GroupRingElement& v, int h);

// True iff permuting c by perm gives exactly dual(c).
bool isodual_witness_check(const LinearCode& c, const std::vector<int>& perm);

// Structural isoduality permutations for the two ordered constructions:
// swap the two halves and reverse the cyclic block index within each half.
std::vector<int> csd_isodual_permutation(int s, int dihedral_order);
std::vector<int> cyclic_isodual_permutation(int n);

// Binary MacWilliams cross-check: the Hamming enumerator of dual(c) must
// equal (1/|C|) W_C(x+y, x-y).
bool macwilliams_check(const LinearCode& c);

// ---- sigma matrix shape detection -----------------------------------------

enum class BlockKind { zero, identity, circulant, reverse_circulant, general };

struct MatrixShape {
  bool circulant = false;          // whole matrix
  bool reverse_circulant = false;  // whole matrix
  // For even n, the 2x2 block split [[A,B],[C,D]]:
  bool block_abba = false;  // D == A and C == B
  bool block_abda = false;  // D == A only
  BlockKind block_a{}, block_b{}, block_c{}, block_d{};
  std::string describe() const;
};

MatrixShape matrix_shape(const SigmaMatrix& m);
std::string to_string(BlockKind k);

}  // namespace grc
