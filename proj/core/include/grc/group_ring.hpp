#pragma once

// Group-ring elements over (R_k, G), the canonical involution, and the
// sigma(v) matrix whose row space is the constructed code.

#include <string>
#include <string_view>
#include <vector>

#include "grc/group.hpp"
#include "grc/ring.hpp"

namespace grc {

struct GroupRingElement {
  RingSpec ring;
  GroupPtr group;
  std::vector<RingValue> coeffs;  // alpha_{g_i} in the group's index order

  static GroupRingElement zero(RingSpec ring, GroupPtr group);

  bool is_zero() const;
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ring == b.ring && a.group == b.group && a.coeffs == b.coeffs;
  }
};

// n x n matrix with entry(i,j) = alpha_{g_i^{-1} g_j}; row i is the
// coefficient vector of g_i * v.
struct SigmaMatrix {
  RingSpec ring;
  GroupPtr group;
  int n = 0;
  std::vector<RingValue> entries;  // row-major

  const RingValue& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

GroupRingElement gr_add(const GroupRingElement& v, const GroupRingElement& w);
GroupRingElement gr_mul(const GroupRingElement& v, const GroupRingElement& w);
// Scalar multiple r*v.
GroupRingElement gr_scale(const RingValue& r, const GroupRingElement& v);
// Canonical involution v^T: the coefficient of g moves to g^{-1}.
GroupRingElement involution(const GroupRingElement& v);

SigmaMatrix sigma(const GroupRingElement& v);
// True iff sigma(v) equals its transpose; by the transpose lemma this is
// equivalent to v = involution(v).
bool sigma_is_symmetric(const GroupRingElement& v);

SigmaMatrix sigma_add(const SigmaMatrix& a, const SigmaMatrix& b);
SigmaMatrix sigma_matmul(const SigmaMatrix& a, const SigmaMatrix& b);
SigmaMatrix sigma_transpose(const SigmaMatrix& m);
bool operator==(const SigmaMatrix& a, const SigmaMatrix& b);

// Element expressions. Grammar (products of sums expand through gr_mul):
//   expr    := product ('+' product)*
//   product := factor ('*'? factor)*      -- '*' optional between factors
//   factor  := '(' expr ')' | ring literal | word
//   word    := 'e' | gen ('^' int)? word?
// Ring literals follow the rings module grammar; a bare literal means
// literal * e. Errors carry the source position.
GroupRingElement parse_element(std::string_view text, RingSpec ring, const GroupPtr& group);

// Canonical form: support in index order, `coeff*name` terms joined by ' + ',
// coefficient omitted when 1, parenthesized when a sum; "0" for zero.
// Output re-parses to the identical element.
std::string to_string(const GroupRingElement& v);

}  // namespace grc
