#pragma once

// Finite groups as validated Cayley tables with a declared coordinate
// ordering. The ordering is first-class: the block structure of sigma(v)
// and the alpha-index conventions of the candidate-set patterns depend on
// which group element sits at which index.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace grc {

constexpr int kMaxGroupOrder = 64;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  // Validates the table: Latin square ("not cancellative"), exhaustive
  // associativity ("not associative", with a witness triple), identity and
  // inverse consistency. n <= 64.
  static GroupPtr from_table(std::vector<std::string> names,
                             std::vector<std::vector<int>> table,
                             int identity,
                             std::string ordering_tag);

  int order() const { return n_; }
  int mul(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }
  int inv(int i) const { return inverse_[i]; }
  int identity() const { return identity_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& ordering_tag() const { return ordering_tag_; }

  // Index of a named element, -1 if absent.
  int index_of(std::string_view name) const;

  // Single-letter generator names usable in element expressions.
  const std::vector<std::string>& generator_names() const { return generator_names_; }

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inverse_;
  std::vector<std::string> generator_names_;
  std::string ordering_tag_;

  friend GroupPtr finalize_group(std::vector<std::string>, std::vector<std::vector<int>>, int,
                                 std::string, std::vector<std::string>);
};

// Cyclic group <gen> of order n, ordering e, h, h^2, ..., h^{n-1}.
GroupPtr make_cyclic(int n, std::string gen = "h");

// Same group with even powers first: h^0, h^2, ..., h^1, h^3, ...
// Requires even order.
GroupPtr reorder_cyclic_even_odd(const GroupPtr& g);

// Dihedral group of the given (even, >= 4) order 2k, presented with a the
// rotation of order k and b the reflection: a^k = b^2 = e, b*a = a^{k-1}*b.
// Ordering: e, a, ..., a^{k-1}, b, ba, ..., ba^{k-1}, which puts sigma(v)
// into the block form [[A,B],[B,A]], A circulant, B reverse circulant.
GroupPtr make_dihedral(int order, std::string rot = "a", std::string refl = "b");

// Direct product with lexicographic ordering, g-index major. Generator name
// sets must be disjoint.
GroupPtr make_direct_product(const GroupPtr& g, const GroupPtr& h);

// Reorders a product C_s x D_2k (built in that order) so that all
// rotation-type coordinates (h^i, a^j) come first and the reflection-type
// coordinates (h^i, b a^j) second, cyclic index major inside each half.
GroupPtr reorder_cyclic_dihedral(const GroupPtr& product, int s, int dihedral_order);

// Built-ins: a4, s4, sl23, m16, g24_8, c2c2c2.
GroupPtr make_named(std::string_view name);

// Parses a CLI group descriptor: built-in names (c<n>, d<2k>, a4, s4, sl23,
// m16, g24_8, c2c2c2), products with `x` (e.g. "c3 x d8"), modifiers
// "@evenodd" (cyclic even/odd ordering) and "@csd" (C_s x D_2k ordering),
// or "table:<path>" for a Cayley-table JSON document.
GroupPtr parse_group_descriptor(std::string_view descriptor);

// Cayley-table document: {"order": n, "names": [...], "identity": i,
// "table": [[...], ...]}. Rejects non-groups with descriptive errors.
GroupPtr load_cayley_table(std::string_view json_text);
GroupPtr load_cayley_table_file(const std::string& path);

// Coordinate permutation induced by left multiplication: j -> index(h*g_j).
std::vector<int> left_multiplication_permutation(const FiniteGroup& g, int h);

// Orbits of inversion g -> g^{-1}, each a list of one or two indices.
// Symmetric group-ring elements (v = v^T) are constant on these orbits.
std::vector<std::vector<int>> inversion_orbits(const FiniteGroup& g);

}  // namespace grc
