#pragma once

// Coefficient rings for the matrix construction: F2 and the family
// R_k = F2[u_1,...,u_k] / (u_i^2, u_iu_j - u_ju_i), k <= 4.
//
// An element is a bit vector over the 2^k monomials u_S = prod_{i in S} u_i.
// Bit index encodes the subset S of {1..k} in binary (index bit i-1 set iff
// u_i divides the monomial); index 0 is the constant term. k = 0 degenerates
// to F2 with a single constant bit. |R_k| = 2^(2^k), so everything fits in a
// 16-bit word for k <= 4.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grc {

constexpr int kMaxRingK = 4;

struct RingSpec {
  int k = 0;  // 0 denotes F2, 1..4 denotes R_k

  constexpr int monomials() const { return 1 << k; }
  constexpr std::uint64_t cardinality() const { return std::uint64_t{1} << (1 << k); }
  constexpr bool is_f2() const { return k == 0; }

  friend constexpr bool operator==(RingSpec a, RingSpec b) { return a.k == b.k; }
  friend constexpr bool operator!=(RingSpec a, RingSpec b) { return a.k != b.k; }
};

// Validates 0 <= k <= 4.
RingSpec make_ring_spec(int k);

// Parses "f2" or "r<k>" (e.g. "r1"), as used by the CLI.
RingSpec parse_ring_spec(std::string_view text);

class RingValue {
 public:
  RingValue() = default;
  RingValue(RingSpec spec, std::uint16_t bits) : spec_(spec), bits_(bits) {
    if (bits_ >> spec_.monomials())
      throw std::invalid_argument("ring value out of range for R_" + std::to_string(spec.k));
  }

  static RingValue zero(RingSpec spec) { return RingValue(spec, 0); }
  static RingValue one(RingSpec spec) { return RingValue(spec, 1); }
  // The generator u_i, 1 <= i <= k.
  static RingValue generator(RingSpec spec, int i);

  RingSpec spec() const { return spec_; }
  std::uint16_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  // R_k is local with maximal ideal <u_1..u_k>; units are exactly the
  // elements with constant term 1.
  bool is_unit() const { return bits_ & 1; }

  friend bool operator==(const RingValue& a, const RingValue& b) {
    return a.spec_ == b.spec_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }
  friend bool operator<(const RingValue& a, const RingValue& b) {
    return a.spec_.k != b.spec_.k ? a.spec_.k < b.spec_.k : a.bits_ < b.bits_;
  }

 private:
  RingSpec spec_{};
  std::uint16_t bits_ = 0;
};

// Componentwise XOR (characteristic 2). Throws on spec mismatch.
RingValue ring_add(const RingValue& a, const RingValue& b);

// Subset convolution over the monomial basis: u_S * u_T = u_{S union T} when
// S and T are disjoint and 0 otherwise (u_i^2 = 0).
RingValue ring_mul(const RingValue& a, const RingValue& b);

// Inverse of a unit 1 + m via the geometric series 1 + m + m^2 + ... + m^k
// (m lies in the maximal ideal, which is nilpotent of degree k + 1).
// Throws if the value is not a unit.
RingValue ring_inverse(const RingValue& a);

// Gray image of a single ring element as 2^k bits (bit j = coordinate j).
// Recursively, writing a = x + y*u_k with x, y in R_{k-1}:
//   phi(a) = (phi(y), phi(x + y)),
// with phi(y) occupying the low-order coordinates. For k = 0 the map is the
// identity. The map is an additive bijection R_k -> F2^(2^k).
std::uint16_t gray_map(const RingValue& a);

// Inverse of gray_map for a 2^k-bit image.
RingValue gray_unmap(RingSpec spec, std::uint16_t image);

// Hamming weight of the Gray image.
int lee_weight(const RingValue& a);

// Ring literal grammar: `0`, `1`, `u<i>`, juxtaposed monomials (`u1u2`),
// sums with `+`, optionally parenthesized: `(1+u1)`.
RingValue parse_ring_literal(RingSpec spec, std::string_view text);

// Canonical literal: monomials in increasing subset-index order joined by
// `+`, e.g. "1+u1+u1u2"; "0" for zero.
std::string to_string(const RingValue& a);

}  // namespace grc
